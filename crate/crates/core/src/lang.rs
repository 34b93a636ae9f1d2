//! Languages as membership predicates.
//!
//! These combinators give a semantics for regexes that shares no code with
//! the derivative engines, which makes them useful as a test oracle. Every
//! query recomputes membership from scratch.

use std::fmt;
use std::sync::Arc;

use crate::regex::{Regex, Symbol};

type Predicate<C> = Arc<dyn Fn(&[C]) -> bool + Send + Sync>;

#[derive(Clone)]
pub struct Language<C> {
    contains: Predicate<C>,
    /// Optional bound on input length; longer inputs are reported as not
    /// contained.
    pub max_probe_len: Option<usize>,
}

impl<C> fmt::Debug for Language<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Language")
            .field("max_probe_len", &self.max_probe_len)
            .finish_non_exhaustive()
    }
}

impl<C: Symbol> Language<C> {
    pub fn from_fn<F>(contains: F) -> Self
    where
        F: Fn(&[C]) -> bool + Send + Sync + 'static,
    {
        Language {
            contains: Arc::new(contains),
            max_probe_len: None,
        }
    }

    pub fn with_max_probe_len(mut self, bound: usize) -> Self {
        self.max_probe_len = Some(bound);
        self
    }

    pub fn contains(&self, s: &[C]) -> bool {
        match self.max_probe_len {
            Some(bound) if s.len() > bound => false,
            _ => (self.contains)(s),
        }
    }
}

pub fn lang_empty<C: Symbol>() -> Language<C> {
    Language::from_fn(|_| false)
}

pub fn lang_epsilon<C: Symbol>() -> Language<C> {
    Language::from_fn(|s| s.is_empty())
}

pub fn lang_single<C: Symbol>(c: C) -> Language<C> {
    Language::from_fn(move |s| s.len() == 1 && s[0] == c)
}

pub fn lang_union<C: Symbol>(l1: Language<C>, l2: Language<C>) -> Language<C> {
    Language::from_fn(move |s| l1.contains(s) || l2.contains(s))
}

pub fn lang_concat<C: Symbol>(l1: Language<C>, l2: Language<C>) -> Language<C> {
    Language::from_fn(move |s| (0..=s.len()).any(|i| l1.contains(&s[..i]) && l2.contains(&s[i..])))
}

/// Kleene star. Splits only on non-empty prefixes, so the recursion is on a
/// strictly shorter suffix and always terminates.
pub fn lang_star<C: Symbol>(l: Language<C>) -> Language<C> {
    Language::from_fn(move |s| star_contains(&l, s))
}

fn star_contains<C: Symbol>(l: &Language<C>, s: &[C]) -> bool {
    s.is_empty() || (1..=s.len()).any(|i| l.contains(&s[..i]) && star_contains(l, &s[i..]))
}

pub fn lang_complement<C: Symbol>(l: Language<C>) -> Language<C> {
    Language::from_fn(move |s| !l.contains(s))
}

/// `n`-fold concatenation; the 0th power is `{ε}`.
pub fn lang_power<C: Symbol>(l: Language<C>, n: usize) -> Language<C> {
    (0..n).fold(lang_epsilon(), |acc, _| lang_concat(l.clone(), acc))
}

/// Compositional translation of a regex into the combinators above.
pub fn regex_to_language<C: Symbol>(r: &Regex<C>) -> Language<C> {
    match r {
        Regex::EmptyLang => lang_empty(),
        Regex::EmptyExpr => lang_epsilon(),
        Regex::ElementMatch(c) => lang_single(c.clone()),
        Regex::Union(l, rr) => lang_union(regex_to_language(l), regex_to_language(rr)),
        Regex::Concat(l, rr) => lang_concat(regex_to_language(l), regex_to_language(rr)),
        Regex::Star(inner) => lang_star(regex_to_language(inner)),
    }
}
