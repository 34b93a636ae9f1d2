//! Memoized derivatives.
//!
//! The cache maps `(regex, character)` to `derivative_step(regex, character)`.
//! Sub-derivatives are looked up through the cache as well, so residual
//! regexes that share structure with earlier ones reuse earlier work.

use std::collections::HashMap;
use std::sync::Arc;

use crate::regex::{derivative_step, is_dead, nullable, Regex, Symbol};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CacheStats {
    pub hits: u64,
    pub misses: u64,
    pub size: usize,
}

/// Memo table for [`derivative_step`]. Keys are compared structurally.
#[derive(Clone, Debug)]
pub struct DerivativeCache<C> {
    entries: HashMap<(Regex<C>, C), Regex<C>>,
    hits: u64,
    misses: u64,
}

impl<C> Default for DerivativeCache<C> {
    fn default() -> Self {
        DerivativeCache {
            entries: HashMap::new(),
            hits: 0,
            misses: 0,
        }
    }
}

impl<C: Symbol> DerivativeCache<C> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn stats(&self) -> CacheStats {
        CacheStats {
            hits: self.hits,
            misses: self.misses,
            size: self.entries.len(),
        }
    }

    /// Drops every entry and resets the counters.
    pub fn clear(&mut self) {
        self.entries.clear();
        self.hits = 0;
        self.misses = 0;
    }

    pub fn get(&self, r: &Regex<C>, c: &C) -> Option<&Regex<C>> {
        // The key tuple owns its parts; cloning a regex is O(1).
        self.entries.get(&(r.clone(), c.clone()))
    }

    /// Keys whose stored value differs from the unmemoized derivative. Empty
    /// whenever the cache invariant holds.
    pub fn audit(&self) -> Vec<(Regex<C>, C)> {
        self.entries
            .iter()
            .filter(|((r, c), stored)| derivative_step(r, c) != **stored)
            .map(|(key, _)| key.clone())
            .collect()
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Regex<C>, &C, &Regex<C>)> {
        self.entries.iter().map(|((r, c), d)| (r, c, d))
    }
}

pub fn cache_stats<C: Symbol>(cache: &DerivativeCache<C>) -> CacheStats {
    cache.stats()
}

pub fn cache_clear<C: Symbol>(cache: &mut DerivativeCache<C>) {
    cache.clear()
}

/// Same result as [`derivative_step`], going through `cache`.
pub fn derivative_step_mem<C: Symbol>(
    r: &Regex<C>,
    c: &C,
    cache: &mut DerivativeCache<C>,
) -> Regex<C> {
    let key = (r.clone(), c.clone());
    if let Some(found) = cache.entries.get(&key) {
        cache.hits += 1;
        return found.clone();
    }
    cache.misses += 1;
    let result = match r {
        Regex::EmptyExpr | Regex::EmptyLang => Regex::EmptyLang,
        Regex::ElementMatch(d) => {
            if c == d {
                Regex::EmptyExpr
            } else {
                Regex::EmptyLang
            }
        }
        Regex::Union(l, rr) => Regex::union(
            derivative_step_mem(l, c, cache),
            derivative_step_mem(rr, c, cache),
        ),
        Regex::Star(inner) => Regex::Concat(
            Arc::new(derivative_step_mem(inner, c, cache)),
            Arc::new(r.clone()),
        ),
        Regex::Concat(l, rr) => {
            let left = Regex::Concat(Arc::new(derivative_step_mem(l, c, cache)), rr.clone());
            if nullable(l) {
                Regex::union(left, derivative_step_mem(rr, c, cache))
            } else {
                Regex::union(left, Regex::EmptyLang)
            }
        }
    };
    cache.entries.insert(key, result.clone());
    result
}

/// Same result as [`crate::regex::match_r`].
pub fn match_r_mem<C: Symbol>(r: &Regex<C>, s: &[C], cache: &mut DerivativeCache<C>) -> bool {
    let residual = s
        .iter()
        .fold(r.clone(), |acc, c| derivative_step_mem(&acc, c, cache));
    nullable(&residual)
}

/// Memoized counterpart of [`crate::regex::longest_prefix_len`].
pub fn longest_prefix_len_mem<C: Symbol>(
    r: &Regex<C>,
    input: &[C],
    cache: &mut DerivativeCache<C>,
) -> Option<usize> {
    let mut current = r.clone();
    let mut best = nullable(&current).then_some(0);
    for (i, c) in input.iter().enumerate() {
        current = derivative_step_mem(&current, c, cache);
        if nullable(&current) {
            best = Some(i + 1);
        } else if is_dead(&current) {
            break;
        }
    }
    best
}
