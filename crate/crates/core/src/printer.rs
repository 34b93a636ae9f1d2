//! Printing tokens back to characters.
//!
//! Plain printing followed by lexing always gives back the original input
//! (`print(tokens) ++ suffix == input`). Going the other way, from tokens
//! to characters and back, needs separators: either after every token, or
//! only where lexing would otherwise merge or re-split neighbouring tokens.
//! Both separator printers check their preconditions and refuse to print
//! when those do not hold.

use std::collections::BTreeSet;
use std::fmt;

use crate::lexer::{lex, max_prefix, Rule, RuleSet, Token};
use crate::regex::Symbol;

/// Concatenation of the tokens' characters.
pub fn print<C: Symbol>(tokens: &[Token<C>]) -> Vec<C> {
    tokens
        .iter()
        .flat_map(|t| t.characters.iter().cloned())
        .collect()
}

/// A separator rule and a non-separator rule that share characters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Overlap<C> {
    pub separator_rule: usize,
    pub separator_tag: String,
    pub other_rule: usize,
    pub other_tag: String,
    pub shared: BTreeSet<C>,
}

pub fn sep_nonsep_overlaps<C: Symbol>(rules: &[Rule<C>]) -> Vec<Overlap<C>> {
    let used: Vec<BTreeSet<C>> = rules
        .iter()
        .map(|r| r.matcher().used_characters())
        .collect();
    let mut out = Vec::new();
    for (i, sep) in rules.iter().enumerate().filter(|(_, r)| r.is_separator()) {
        for (j, other) in rules.iter().enumerate().filter(|(_, r)| !r.is_separator()) {
            let shared: BTreeSet<C> = used[i].intersection(&used[j]).cloned().collect();
            if !shared.is_empty() {
                out.push(Overlap {
                    separator_rule: i,
                    separator_tag: sep.tag().to_string(),
                    other_rule: j,
                    other_tag: other.tag().to_string(),
                    shared,
                });
            }
        }
    }
    out
}

/// Separator and non-separator rules use disjoint character sets.
pub fn check_sep_nonsep_disjoint<C: Symbol>(rules: &RuleSet<C>) -> bool {
    sep_nonsep_overlaps(rules.rules()).is_empty()
}

/// Lexing the token's characters yields exactly this token and nothing
/// else.
pub fn check_rules_produce_token<C: Symbol>(rules: &RuleSet<C>, t: &Token<C>) -> bool {
    let (tokens, suffix) = lex(rules, &t.characters);
    suffix.is_empty() && tokens.len() == 1 && tokens[0] == *t
}

/// A precondition of the separator printers that does not hold.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation<C> {
    SeparatorNotMarked,
    SeparatorNotProducible,
    TokenIsSeparator { index: usize },
    TokenNotProducible { index: usize },
    Overlap(Overlap<C>),
}

impl<C: Symbol> fmt::Display for Violation<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::SeparatorNotMarked => {
                write!(f, "separator token is not marked as a separator")
            }
            Violation::SeparatorNotProducible => {
                write!(f, "separator token is not produced by the rules on its own")
            }
            Violation::TokenIsSeparator { index } => write!(f, "token {index} is a separator"),
            Violation::TokenNotProducible { index } => {
                write!(f, "token {index} is not produced by the rules on its own")
            }
            Violation::Overlap(o) => write!(
                f,
                "separator rule {} ({:?}) and rule {} ({:?}) share characters {:?}",
                o.separator_rule, o.separator_tag, o.other_rule, o.other_tag, o.shared
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrintError<C> {
    pub violations: Vec<Violation<C>>,
}

impl<C: Symbol> fmt::Display for PrintError<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let messages: Vec<String> = self.violations.iter().map(ToString::to_string).collect();
        write!(f, "cannot print with separators: {}", messages.join("; "))
    }
}

impl<C: Symbol> std::error::Error for PrintError<C> {}

/// All violated preconditions of the separator printers.
pub fn validate<C: Symbol>(
    rules: &RuleSet<C>,
    tokens: &[Token<C>],
    sep: &Token<C>,
) -> Result<(), PrintError<C>> {
    let mut violations = Vec::new();
    if !sep.is_separator {
        violations.push(Violation::SeparatorNotMarked);
    }
    if !check_rules_produce_token(rules, sep) {
        violations.push(Violation::SeparatorNotProducible);
    }
    for (index, t) in tokens.iter().enumerate() {
        if t.is_separator {
            violations.push(Violation::TokenIsSeparator { index });
        }
        if !check_rules_produce_token(rules, t) {
            violations.push(Violation::TokenNotProducible { index });
        }
    }
    violations.extend(
        sep_nonsep_overlaps(rules.rules())
            .into_iter()
            .map(Violation::Overlap),
    );
    if violations.is_empty() {
        Ok(())
    } else {
        Err(PrintError { violations })
    }
}

/// Every token followed by the separator, including the last one.
///
/// Only the separator flag is checked here; callers that want the
/// round-trip guarantee should run [`validate`] first.
pub fn print_with_separator<C: Symbol>(
    tokens: &[Token<C>],
    sep: &Token<C>,
) -> Result<Vec<C>, PrintError<C>> {
    if !sep.is_separator {
        return Err(PrintError {
            violations: vec![Violation::SeparatorNotMarked],
        });
    }
    let mut out = Vec::new();
    for t in tokens {
        out.extend_from_slice(&t.characters);
        out.extend_from_slice(&sep.characters);
    }
    Ok(out)
}

/// Inserts the separator only between tokens that would not lex back on
/// their own. Never emits a trailing separator.
pub fn print_with_separator_when_needed<C: Symbol>(
    rules: &RuleSet<C>,
    tokens: &[Token<C>],
    sep: &Token<C>,
) -> Result<Vec<C>, PrintError<C>> {
    validate(rules, tokens, sep)?;
    let mut suffix: Vec<C> = Vec::new();
    for t in tokens.iter().rev() {
        let mut joined = t.characters.clone();
        joined.extend_from_slice(&suffix);
        let relexes = matches!(max_prefix(rules, &joined), Some((first, _)) if first == *t);
        if !relexes {
            joined.splice(
                t.characters.len()..t.characters.len(),
                sep.characters.iter().cloned(),
            );
        }
        suffix = joined;
    }
    Ok(suffix)
}

/// How tokens are turned back into characters.
#[derive(Clone, Debug)]
pub enum SeparatorPolicy<C> {
    NoSeparator,
    Always(Token<C>),
    WhenNeeded(RuleSet<C>, Token<C>),
}

impl<C: Symbol> SeparatorPolicy<C> {
    pub fn print(&self, tokens: &[Token<C>]) -> Result<Vec<C>, PrintError<C>> {
        match self {
            SeparatorPolicy::NoSeparator => Ok(print(tokens)),
            SeparatorPolicy::Always(sep) => print_with_separator(tokens, sep),
            SeparatorPolicy::WhenNeeded(rules, sep) => {
                print_with_separator_when_needed(rules, tokens, sep)
            }
        }
    }
}
