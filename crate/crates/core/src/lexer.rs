//! Maximal-munch lexing over an ordered list of rules.
//!
//! At every step the lexer emits the longest prefix matched by any rule.
//! When several rules match a prefix of that length, the earliest rule in
//! the list wins. Lexing stops at the first position where no rule matches
//! a non-empty prefix and the rest of the input is returned unlexed.

use std::collections::BTreeSet;

use crate::dfa::{longest_prefix_len_dfa, used_characters_dfa, valid_dfa, Dfa};
use crate::memo::{longest_prefix_len_mem, DerivativeCache};
use crate::regex::{longest_prefix_len, nullable, used_characters, valid_regex, Regex, Symbol};

/// How a rule recognizes its lexemes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Matcher<C> {
    Regex(Regex<C>),
    Dfa(Dfa<C>),
}

impl<C: Symbol> Matcher<C> {
    /// Whether the matcher accepts the empty string.
    pub fn is_nullable(&self) -> bool {
        match self {
            Matcher::Regex(r) => nullable(r),
            Matcher::Dfa(d) => d.is_final(d.start()),
        }
    }

    pub fn is_valid(&self) -> bool {
        match self {
            Matcher::Regex(r) => valid_regex(r),
            Matcher::Dfa(d) => valid_dfa(d),
        }
    }

    pub fn used_characters(&self) -> BTreeSet<C> {
        match self {
            Matcher::Regex(r) => used_characters(r),
            Matcher::Dfa(d) => used_characters_dfa(d),
        }
    }
}

impl<C> From<Regex<C>> for Matcher<C> {
    fn from(r: Regex<C>) -> Self {
        Matcher::Regex(r)
    }
}

impl<C> From<Dfa<C>> for Matcher<C> {
    fn from(d: Dfa<C>) -> Self {
        Matcher::Dfa(d)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rule<C> {
    matcher: Matcher<C>,
    tag: String,
    is_separator: bool,
}

impl<C: Symbol> Rule<C> {
    /// Rules are checked when they are gathered into a [`RuleSet`].
    pub fn new(matcher: impl Into<Matcher<C>>, tag: impl Into<String>, is_separator: bool) -> Self {
        Rule {
            matcher: matcher.into(),
            tag: tag.into(),
            is_separator,
        }
    }

    pub fn matcher(&self) -> &Matcher<C> {
        &self.matcher
    }

    pub fn tag(&self) -> &str {
        &self.tag
    }

    pub fn is_separator(&self) -> bool {
        self.is_separator
    }

    /// Valid matcher, non-nullable matcher, non-empty tag.
    pub fn is_valid(&self) -> bool {
        self.matcher.is_valid() && !self.matcher.is_nullable() && !self.tag.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Token<C> {
    pub characters: Vec<C>,
    pub tag: String,
    pub is_separator: bool,
}

impl<C> Token<C> {
    pub fn new(characters: Vec<C>, tag: impl Into<String>, is_separator: bool) -> Self {
        Token {
            characters,
            tag: tag.into(),
            is_separator,
        }
    }
}

impl Token<char> {
    pub fn text(&self) -> String {
        self.characters.iter().collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RuleError {
    #[error("rule set is empty")]
    Empty,
    #[error("rule {index} has an empty tag")]
    EmptyTag { index: usize },
    #[error("rule {index} ({tag:?}) has an invalid matcher")]
    InvalidMatcher { index: usize, tag: String },
    #[error("rule {index} ({tag:?}) matches the empty string")]
    Nullable { index: usize, tag: String },
    #[error("duplicate tag {tag:?} on rules {first} and {second}")]
    DuplicateTag {
        tag: String,
        first: usize,
        second: usize,
    },
}

/// Every violation of the rule-set invariant, in rule order.
pub fn rules_invariant_violations<C: Symbol>(rules: &[Rule<C>]) -> Vec<RuleError> {
    let mut out = Vec::new();
    if rules.is_empty() {
        out.push(RuleError::Empty);
    }
    for (index, rule) in rules.iter().enumerate() {
        let tag = rule.tag.clone();
        if tag.is_empty() {
            out.push(RuleError::EmptyTag { index });
        }
        if !rule.matcher.is_valid() {
            out.push(RuleError::InvalidMatcher {
                index,
                tag: tag.clone(),
            });
        }
        if rule.matcher.is_nullable() {
            out.push(RuleError::Nullable {
                index,
                tag: tag.clone(),
            });
        }
        if let Some(first) = rules[..index].iter().position(|r| r.tag == rule.tag) {
            out.push(RuleError::DuplicateTag {
                tag,
                first,
                second: index,
            });
        }
    }
    out
}

/// Non-empty ordered list of valid rules with pairwise distinct tags.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RuleSet<C> {
    rules: Vec<Rule<C>>,
}

impl<C: Symbol> RuleSet<C> {
    pub fn new(rules: Vec<Rule<C>>) -> Result<Self, RuleError> {
        match rules_invariant_violations(&rules).into_iter().next() {
            Some(err) => Err(err),
            None => Ok(RuleSet { rules }),
        }
    }

    pub fn rules(&self) -> &[Rule<C>] {
        &self.rules
    }

    pub fn get_by_tag(&self, tag: &str) -> Option<&Rule<C>> {
        self.rules.iter().find(|r| r.tag == tag)
    }
}

/// Strategy used to find a rule's longest match.
pub trait MatchBackend<C: Symbol> {
    /// Length of the longest non-empty prefix of `input` accepted by
    /// `matcher`, or `None`.
    fn longest_match(&mut self, matcher: &Matcher<C>, input: &[C]) -> Option<usize>;
}

/// Plain derivatives for regex rules, simulation for DFA rules.
#[derive(Clone, Copy, Debug, Default)]
pub struct Derivatives;

impl<C: Symbol> MatchBackend<C> for Derivatives {
    fn longest_match(&mut self, matcher: &Matcher<C>, input: &[C]) -> Option<usize> {
        match matcher {
            Matcher::Regex(r) => longest_prefix_len(r, input).filter(|&n| n > 0),
            Matcher::Dfa(d) => longest_prefix_len_dfa(d, input),
        }
    }
}

/// Memoized derivatives for regex rules, simulation for DFA rules.
#[derive(Clone, Debug, Default)]
pub struct Memoized<C> {
    pub cache: DerivativeCache<C>,
}

impl<C: Symbol> MatchBackend<C> for Memoized<C> {
    fn longest_match(&mut self, matcher: &Matcher<C>, input: &[C]) -> Option<usize> {
        match matcher {
            Matcher::Regex(r) => {
                longest_prefix_len_mem(r, input, &mut self.cache).filter(|&n| n > 0)
            }
            Matcher::Dfa(d) => longest_prefix_len_dfa(d, input),
        }
    }
}

pub fn max_prefix_one_rule<C: Symbol>(rule: &Rule<C>, input: &[C]) -> Option<(Token<C>, Vec<C>)> {
    max_prefix_one_rule_with(&mut Derivatives, rule, input)
}

pub fn max_prefix_one_rule_with<C: Symbol, B: MatchBackend<C>>(
    backend: &mut B,
    rule: &Rule<C>,
    input: &[C],
) -> Option<(Token<C>, Vec<C>)> {
    let len = backend.longest_match(&rule.matcher, input)?;
    Some(split_token(rule, input, len))
}

fn split_token<C: Symbol>(rule: &Rule<C>, input: &[C], len: usize) -> (Token<C>, Vec<C>) {
    let token = Token::new(input[..len].to_vec(), rule.tag.clone(), rule.is_separator);
    (token, input[len..].to_vec())
}

/// Index of the winning rule and the length it consumes.
fn best_rule<C: Symbol, B: MatchBackend<C>>(
    backend: &mut B,
    rules: &RuleSet<C>,
    input: &[C],
) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for (i, rule) in rules.rules.iter().enumerate() {
        if let Some(len) = backend.longest_match(&rule.matcher, input) {
            // Strictly longer only: earlier rules win ties.
            if best.is_none_or(|(_, best_len)| len > best_len) {
                best = Some((i, len));
            }
        }
    }
    best
}

pub fn max_prefix<C: Symbol>(rules: &RuleSet<C>, input: &[C]) -> Option<(Token<C>, Vec<C>)> {
    max_prefix_with(&mut Derivatives, rules, input)
}

pub fn max_prefix_with<C: Symbol, B: MatchBackend<C>>(
    backend: &mut B,
    rules: &RuleSet<C>,
    input: &[C],
) -> Option<(Token<C>, Vec<C>)> {
    let (i, len) = best_rule(backend, rules, input)?;
    Some(split_token(&rules.rules[i], input, len))
}

/// Tokens produced by maximal munch and the unlexed suffix.
pub fn lex<C: Symbol>(rules: &RuleSet<C>, input: &[C]) -> (Vec<Token<C>>, Vec<C>) {
    lex_with(&mut Derivatives, rules, input)
}

pub fn lex_with<C: Symbol, B: MatchBackend<C>>(
    backend: &mut B,
    rules: &RuleSet<C>,
    input: &[C],
) -> (Vec<Token<C>>, Vec<C>) {
    let (tokens, _, rest) = lex_traced(backend, rules, input);
    (tokens, rest)
}

/// Like [`lex_with`], also returning the index of the rule behind each
/// token.
pub fn lex_traced<C: Symbol, B: MatchBackend<C>>(
    backend: &mut B,
    rules: &RuleSet<C>,
    input: &[C],
) -> (Vec<Token<C>>, Vec<usize>, Vec<C>) {
    let mut tokens = Vec::new();
    let mut indices = Vec::new();
    let mut pos = 0;
    while let Some((i, len)) = best_rule(backend, rules, &input[pos..]) {
        let rule = &rules.rules[i];
        tokens.push(Token::new(
            input[pos..pos + len].to_vec(),
            rule.tag.clone(),
            rule.is_separator,
        ));
        indices.push(i);
        pos += len;
    }
    (tokens, indices, input[pos..].to_vec())
}
