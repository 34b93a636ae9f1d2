//! Regular expressions over a generic alphabet, matched with Brzozowski
//! derivatives.
//!
//! Derivatives are computed literally: no algebraic simplification is ever
//! applied to the trees produced by [`derivative_step`], so the shape of a
//! residual regex is fully determined by the case analysis below.

use std::collections::BTreeSet;
use std::fmt::Debug;
use std::hash::Hash;
use std::sync::Arc;

/// Requirements on the character type of regexes, DFAs and tokens.
///
/// Hashing is needed by the derivative cache and ordering by the zipper's
/// canonical context sets and by deterministic reporting.
pub trait Symbol: Clone + Eq + Hash + Ord + Debug + Send + Sync + 'static {}

impl<T> Symbol for T where T: Clone + Eq + Hash + Ord + Debug + Send + Sync + 'static {}

/// A regular expression tree.
///
/// Children are reference counted, so cloning a regex (or a sub-tree) is
/// O(1). Equality, ordering and hashing are structural.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Regex<C> {
    /// Matches no string.
    EmptyLang,
    /// Matches only the empty string.
    EmptyExpr,
    /// Matches exactly the one-character string.
    ElementMatch(C),
    Union(Arc<Regex<C>>, Arc<Regex<C>>),
    Concat(Arc<Regex<C>>, Arc<Regex<C>>),
    Star(Arc<Regex<C>>),
}

impl<C> Regex<C> {
    pub fn elem(c: C) -> Self {
        Regex::ElementMatch(c)
    }

    pub fn union(left: Regex<C>, right: Regex<C>) -> Self {
        Regex::Union(Arc::new(left), Arc::new(right))
    }

    pub fn concat(left: Regex<C>, right: Regex<C>) -> Self {
        Regex::Concat(Arc::new(left), Arc::new(right))
    }

    pub fn star(inner: Regex<C>) -> Self {
        Regex::Star(Arc::new(inner))
    }

    /// Concatenation of single-character leaves; the empty sequence yields
    /// `EmptyExpr`.
    pub fn literal<I: IntoIterator<Item = C>>(chars: I) -> Self {
        let mut leaves = chars.into_iter().map(Regex::ElementMatch);
        match leaves.next() {
            None => Regex::EmptyExpr,
            Some(first) => leaves.fold(first, Regex::concat),
        }
    }

    /// `r · r*`, i.e. one or more repetitions.
    pub fn plus(inner: Regex<C>) -> Self
    where
        C: Clone,
    {
        Regex::concat(inner.clone(), Regex::star(inner))
    }
}

/// Result of a longest-prefix search: `prefix ++ suffix` is always the
/// searched input.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MatchSplit<C> {
    pub prefix: Vec<C>,
    pub suffix: Vec<C>,
}

impl<C: Clone> MatchSplit<C> {
    pub(crate) fn at(input: &[C], len: usize) -> Self {
        MatchSplit {
            prefix: input[..len].to_vec(),
            suffix: input[len..].to_vec(),
        }
    }
}

/// Structural validity. Every constructible tree is valid; the function is
/// kept so rule invariants have an explicit hook.
pub fn valid_regex<C>(r: &Regex<C>) -> bool {
    match r {
        Regex::EmptyLang | Regex::EmptyExpr | Regex::ElementMatch(_) => true,
        Regex::Star(inner) => valid_regex(inner),
        Regex::Union(l, rr) | Regex::Concat(l, rr) => valid_regex(l) && valid_regex(rr),
    }
}

/// Whether the empty string belongs to the language of `r`.
pub fn nullable<C>(r: &Regex<C>) -> bool {
    match r {
        Regex::EmptyLang | Regex::ElementMatch(_) => false,
        Regex::EmptyExpr | Regex::Star(_) => true,
        Regex::Union(l, rr) => nullable(l) || nullable(rr),
        Regex::Concat(l, rr) => nullable(l) && nullable(rr),
    }
}

/// Brzozowski derivative of `r` with respect to one character.
pub fn derivative_step<C: Symbol>(r: &Regex<C>, a: &C) -> Regex<C> {
    match r {
        Regex::EmptyExpr | Regex::EmptyLang => Regex::EmptyLang,
        Regex::ElementMatch(c) => {
            if a == c {
                Regex::EmptyExpr
            } else {
                Regex::EmptyLang
            }
        }
        Regex::Union(l, rr) => Regex::union(derivative_step(l, a), derivative_step(rr, a)),
        Regex::Star(inner) => {
            Regex::Concat(Arc::new(derivative_step(inner, a)), Arc::new(r.clone()))
        }
        Regex::Concat(l, rr) => {
            let left = Regex::Concat(Arc::new(derivative_step(l, a)), rr.clone());
            if nullable(l) {
                Regex::union(left, derivative_step(rr, a))
            } else {
                Regex::union(left, Regex::EmptyLang)
            }
        }
    }
}

/// Left fold of [`derivative_step`] over `s`.
pub fn derivative<C: Symbol>(r: &Regex<C>, s: &[C]) -> Regex<C> {
    s.iter().fold(r.clone(), |acc, c| derivative_step(&acc, c))
}

/// Derivative-based matching.
pub fn match_r<C: Symbol>(r: &Regex<C>, input: &[C]) -> bool {
    nullable(&derivative(r, input))
}

/// Whether the language of `r` is empty. Exact: only `EmptyLang` leaves can
/// make a language empty.
pub(crate) fn is_dead<C>(r: &Regex<C>) -> bool {
    match r {
        Regex::EmptyLang => true,
        Regex::EmptyExpr | Regex::ElementMatch(_) | Regex::Star(_) => false,
        Regex::Union(l, rr) => is_dead(l) && is_dead(rr),
        Regex::Concat(l, rr) => is_dead(l) || is_dead(rr),
    }
}

/// Declarative reference semantics, by exhaustive split search.
pub fn match_spec<C: Symbol>(r: &Regex<C>, s: &[C]) -> bool {
    match r {
        Regex::EmptyExpr => s.is_empty(),
        Regex::EmptyLang => false,
        Regex::ElementMatch(c) => s.len() == 1 && &s[0] == c,
        Regex::Union(l, rr) => match_spec(l, s) || match_spec(rr, s),
        Regex::Concat(l, rr) => separation_from(l, rr, s, 0).is_some(),
        // A non-empty first iteration is required for the recursion on
        // `Star` to shrink the input; empty iterations never add strings.
        Regex::Star(inner) => s.is_empty() || separation_from(inner, r, s, 1).is_some(),
    }
}

fn separation_from<C: Symbol>(r1: &Regex<C>, r2: &Regex<C>, s: &[C], min: usize) -> Option<usize> {
    (min..=s.len()).find(|&i| match_spec(r1, &s[..i]) && match_spec(r2, &s[i..]))
}

/// Finds a split `s = p ++ q` with `p` in `r1` and `q` in `r2`, scanning
/// split points left to right, so the witness with the shortest `p` is
/// returned.
pub fn find_concat_separation<C: Symbol>(
    r1: &Regex<C>,
    r2: &Regex<C>,
    s: &[C],
) -> Option<MatchSplit<C>> {
    separation_from(r1, r2, s, 0).map(|i| MatchSplit::at(s, i))
}

/// Length of the longest prefix of `input` matched by `r`, or `None` if no
/// prefix (not even the empty one) is matched.
///
/// One derivative per character; stops as soon as the residual language is
/// empty.
pub fn longest_prefix_len<C: Symbol>(r: &Regex<C>, input: &[C]) -> Option<usize> {
    let mut current = r.clone();
    let mut best = nullable(&current).then_some(0);
    for (i, c) in input.iter().enumerate() {
        current = derivative_step(&current, c);
        if nullable(&current) {
            best = Some(i + 1);
        } else if is_dead(&current) {
            break;
        }
    }
    best
}

/// Longest prefix of `input` matched by `r`. When nothing matches, the
/// prefix is empty and the suffix is the whole input.
pub fn find_longest_match<C: Symbol>(r: &Regex<C>, input: &[C]) -> MatchSplit<C> {
    MatchSplit::at(input, longest_prefix_len(r, input).unwrap_or(0))
}

/// Characters appearing in `ElementMatch` leaves.
pub fn used_characters<C: Symbol>(r: &Regex<C>) -> BTreeSet<C> {
    let mut out = BTreeSet::new();
    collect_used(r, &mut out);
    out
}

fn collect_used<C: Symbol>(r: &Regex<C>, out: &mut BTreeSet<C>) {
    match r {
        Regex::EmptyExpr | Regex::EmptyLang => {}
        Regex::ElementMatch(c) => {
            out.insert(c.clone());
        }
        Regex::Star(inner) => collect_used(inner, out),
        Regex::Union(l, rr) | Regex::Concat(l, rr) => {
            collect_used(l, out);
            collect_used(rr, out);
        }
    }
}

/// Characters that may begin a string of the language (syntactic
/// over-approximation).
pub fn first_chars<C: Symbol>(r: &Regex<C>) -> BTreeSet<C> {
    let mut out = BTreeSet::new();
    collect_first(r, &mut out);
    out
}

fn collect_first<C: Symbol>(r: &Regex<C>, out: &mut BTreeSet<C>) {
    match r {
        Regex::EmptyExpr | Regex::EmptyLang => {}
        Regex::ElementMatch(c) => {
            out.insert(c.clone());
        }
        Regex::Star(inner) => collect_first(inner, out),
        Regex::Union(l, rr) => {
            collect_first(l, out);
            collect_first(rr, out);
        }
        Regex::Concat(l, rr) => {
            collect_first(l, out);
            if nullable(l) {
                collect_first(rr, out);
            }
        }
    }
}

/// 1 for leaves, one more than the deepest child otherwise.
pub fn regex_depth<C>(r: &Regex<C>) -> usize {
    match r {
        Regex::EmptyLang | Regex::EmptyExpr | Regex::ElementMatch(_) => 1,
        Regex::Star(inner) => 1 + regex_depth(inner),
        Regex::Union(l, rr) | Regex::Concat(l, rr) => 1 + regex_depth(l).max(regex_depth(rr)),
    }
}
