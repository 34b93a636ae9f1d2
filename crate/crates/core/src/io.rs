//! JSON file formats for rules, DFAs and tokens.
//!
//! Every document carries `"format": 1` at the top level and unknown fields
//! are rejected. Characters are Unicode scalar values.
//!
//! ```json
//! { "format": 1,
//!   "rules": [ { "tag": "id", "separator": false, "regex": "a(a|b)*" },
//!              { "tag": "ws", "separator": true,
//!                "dfa": { "start": 0, "finals": [1], "error": 2,
//!                         "transitions": [[0, " ", 1], [1, " ", 1]] } } ] }
//! ```

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::dfa::{Dfa, DfaTransition, StateId};
use crate::lexer::{Matcher, Rule, RuleSet, Token};
use crate::syntax::{parse_regex_syntax, render_regex};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, thiserror::Error)]
pub enum LoadError {
    #[error("{origin}: {source}")]
    Io {
        origin: String,
        #[source]
        source: std::io::Error,
    },
    #[error("{origin}: {source}")]
    Json {
        origin: String,
        #[source]
        source: serde_json::Error,
    },
    #[error("{origin}: unsupported format {found}, expected {FORMAT_VERSION}")]
    Format { origin: String, found: u32 },
    #[error("{origin}: {field}: {message}")]
    Invalid {
        origin: String,
        field: String,
        message: String,
    },
}

impl LoadError {
    fn invalid(origin: &str, field: impl Into<String>, message: impl ToString) -> Self {
        LoadError::Invalid {
            origin: origin.to_string(),
            field: field.into(),
            message: message.to_string(),
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RuleFileDoc {
    format: u32,
    rules: Vec<RuleDoc>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RuleDoc {
    tag: String,
    separator: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    regex: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    dfa: Option<DfaDoc>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DfaDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    format: Option<u32>,
    start: u64,
    finals: Vec<u64>,
    error: u64,
    transitions: Vec<(u64, String, u64)>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TokenFileDoc {
    format: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    separator: Option<SeparatorDoc>,
    tokens: Vec<TokenDoc>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SeparatorDoc {
    tag: String,
    characters: String,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TokenDoc {
    tag: String,
    separator: bool,
    characters: String,
}

/// Tokens plus the canonical separator token, if the file names one.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct TokenFile {
    pub tokens: Vec<Token<char>>,
    pub separator: Option<Token<char>>,
}

fn read(path: &Path) -> Result<String, LoadError> {
    fs::read_to_string(path).map_err(|source| LoadError::Io {
        origin: path.display().to_string(),
        source,
    })
}

fn parse_json<'a, T: Deserialize<'a>>(text: &'a str, origin: &str) -> Result<T, LoadError> {
    serde_json::from_str(text).map_err(|source| LoadError::Json {
        origin: origin.to_string(),
        source,
    })
}

fn check_format(found: u32, origin: &str) -> Result<(), LoadError> {
    if found == FORMAT_VERSION {
        Ok(())
    } else {
        Err(LoadError::Format {
            origin: origin.to_string(),
            found,
        })
    }
}

fn dfa_from_doc(doc: DfaDoc, origin: &str, field: &str) -> Result<Dfa<char>, LoadError> {
    if let Some(found) = doc.format {
        check_format(found, origin)?;
    }
    let mut transitions = Vec::with_capacity(doc.transitions.len());
    for (i, (from, label, to)) in doc.transitions.into_iter().enumerate() {
        let mut chars = label.chars();
        let on = match (chars.next(), chars.next()) {
            (Some(c), None) => c,
            _ => {
                return Err(LoadError::invalid(
                    origin,
                    format!("{field}.transitions[{i}]"),
                    format!("label {label:?} is not a single character"),
                ))
            }
        };
        transitions.push(DfaTransition::new(from, on, to));
    }
    let finals = doc.finals.into_iter().map(StateId);
    Dfa::new(StateId(doc.start), finals, StateId(doc.error), transitions)
        .map_err(|e| LoadError::invalid(origin, field, e))
}

fn dfa_to_doc(d: &Dfa<char>, format: Option<u32>) -> DfaDoc {
    DfaDoc {
        format,
        start: d.start().0,
        finals: d.finals().iter().map(|q| q.0).collect(),
        error: d.error_state().0,
        transitions: d
            .transitions()
            .iter()
            .map(|t| (t.from.0, t.on.to_string(), t.to.0))
            .collect(),
    }
}

/// Parses a rule document without checking the rule-set invariant. Regex
/// syntax and DFA validity are still checked.
pub fn rules_from_json(text: &str, origin: &str) -> Result<Vec<Rule<char>>, LoadError> {
    let doc: RuleFileDoc = parse_json(text, origin)?;
    check_format(doc.format, origin)?;
    let mut rules = Vec::with_capacity(doc.rules.len());
    for (i, entry) in doc.rules.into_iter().enumerate() {
        let field = format!("rules[{i}]");
        let matcher = match (entry.regex, entry.dfa) {
            (Some(text), None) => Matcher::Regex(
                parse_regex_syntax(&text)
                    .map_err(|e| LoadError::invalid(origin, format!("{field}.regex"), e))?,
            ),
            (None, Some(dfa)) => Matcher::Dfa(dfa_from_doc(dfa, origin, &format!("{field}.dfa"))?),
            _ => {
                return Err(LoadError::invalid(
                    origin,
                    field,
                    "exactly one of \"regex\" or \"dfa\" is required",
                ))
            }
        };
        rules.push(Rule::new(matcher, entry.tag, entry.separator));
    }
    Ok(rules)
}

pub fn rule_set_from_json(text: &str, origin: &str) -> Result<RuleSet<char>, LoadError> {
    let rules = rules_from_json(text, origin)?;
    RuleSet::new(rules).map_err(|e| LoadError::invalid(origin, "rules", e))
}

pub fn rules_to_json(rules: &[Rule<char>]) -> String {
    let doc = RuleFileDoc {
        format: FORMAT_VERSION,
        rules: rules
            .iter()
            .map(|r| {
                let (regex, dfa) = match r.matcher() {
                    Matcher::Regex(re) => (Some(render_regex(re)), None),
                    Matcher::Dfa(d) => (None, Some(dfa_to_doc(d, None))),
                };
                RuleDoc {
                    tag: r.tag().to_string(),
                    separator: r.is_separator(),
                    regex,
                    dfa,
                }
            })
            .collect(),
    };
    serde_json::to_string_pretty(&doc).expect("rule documents always serialize")
}

/// Rules from a file, without the rule-set invariant check.
pub fn read_rules(path: &Path) -> Result<Vec<Rule<char>>, LoadError> {
    rules_from_json(&read(path)?, &path.display().to_string())
}

pub fn load_rules(path: &Path) -> Result<RuleSet<char>, LoadError> {
    rule_set_from_json(&read(path)?, &path.display().to_string())
}

pub fn dfa_from_json(text: &str, origin: &str) -> Result<Dfa<char>, LoadError> {
    let doc: DfaDoc = parse_json(text, origin)?;
    match doc.format {
        Some(_) => dfa_from_doc(doc, origin, "dfa"),
        None => Err(LoadError::invalid(origin, "format", "missing")),
    }
}

pub fn dfa_to_json(d: &Dfa<char>) -> String {
    serde_json::to_string_pretty(&dfa_to_doc(d, Some(FORMAT_VERSION)))
        .expect("DFA documents always serialize")
}

pub fn load_dfa(path: &Path) -> Result<Dfa<char>, LoadError> {
    dfa_from_json(&read(path)?, &path.display().to_string())
}

pub fn tokens_from_json(text: &str, origin: &str) -> Result<TokenFile, LoadError> {
    let doc: TokenFileDoc = parse_json(text, origin)?;
    check_format(doc.format, origin)?;
    let mut tokens = Vec::with_capacity(doc.tokens.len());
    for (i, t) in doc.tokens.into_iter().enumerate() {
        if t.characters.is_empty() {
            return Err(LoadError::invalid(
                origin,
                format!("tokens[{i}].characters"),
                "empty",
            ));
        }
        if t.tag.is_empty() {
            return Err(LoadError::invalid(
                origin,
                format!("tokens[{i}].tag"),
                "empty",
            ));
        }
        tokens.push(Token::new(
            t.characters.chars().collect(),
            t.tag,
            t.separator,
        ));
    }
    let separator = match doc.separator {
        None => None,
        Some(sep) if sep.characters.is_empty() => {
            return Err(LoadError::invalid(origin, "separator.characters", "empty"))
        }
        Some(sep) => Some(Token::new(sep.characters.chars().collect(), sep.tag, true)),
    };
    Ok(TokenFile { tokens, separator })
}

pub fn tokens_to_json(file: &TokenFile) -> String {
    let doc = TokenFileDoc {
        format: FORMAT_VERSION,
        separator: file.separator.as_ref().map(|sep| SeparatorDoc {
            tag: sep.tag.clone(),
            characters: sep.text(),
        }),
        tokens: file
            .tokens
            .iter()
            .map(|t| TokenDoc {
                tag: t.tag.clone(),
                separator: t.is_separator,
                characters: t.text(),
            })
            .collect(),
    };
    serde_json::to_string_pretty(&doc).expect("token documents always serialize")
}

pub fn load_tokens(path: &Path) -> Result<TokenFile, LoadError> {
    tokens_from_json(&read(path)?, &path.display().to_string())
}

pub fn save_tokens(file: &TokenFile, path: &Path) -> std::io::Result<()> {
    let mut text = tokens_to_json(file);
    text.push('\n');
    fs::write(path, text)
}
