//! Zipper representation of regexes.
//!
//! A zipper is a set of contexts; a context is a sequence of regexes that
//! denotes their concatenation. Deriving a zipper walks down into the head
//! regex of each context instead of rebuilding whole trees, so residual
//! states stay small on repetitive inputs.

use std::collections::BTreeSet;

use crate::regex::{nullable, Regex, Symbol};

/// Sequence of regexes, head first. The empty context denotes `{ε}`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Context<C>(pub Vec<Regex<C>>);

impl<C> Context<C> {
    pub fn items(&self) -> &[Regex<C>] {
        &self.0
    }

    fn cons(head: Regex<C>, rest: &[Regex<C>]) -> Self
    where
        C: Clone,
    {
        let mut items = Vec::with_capacity(rest.len() + 1);
        items.push(head);
        items.extend_from_slice(rest);
        Context(items)
    }
}

/// Canonically ordered set of contexts.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Zipper<C> {
    contexts: BTreeSet<Context<C>>,
}

impl<C: Symbol> Zipper<C> {
    pub fn from_contexts<I: IntoIterator<Item = Context<C>>>(contexts: I) -> Self {
        Zipper {
            contexts: contexts.into_iter().collect(),
        }
    }

    pub fn contexts(&self) -> impl Iterator<Item = &Context<C>> {
        self.contexts.iter()
    }

    pub fn len(&self) -> usize {
        self.contexts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.contexts.is_empty()
    }
}

/// The singleton zipper `{ [r] }`.
pub fn to_zipper<C: Symbol>(r: &Regex<C>) -> Zipper<C> {
    Zipper::from_contexts([Context(vec![r.clone()])])
}

pub fn zipper_derive<C: Symbol>(z: &Zipper<C>, c: &C) -> Zipper<C> {
    let mut out = BTreeSet::new();
    for ctx in &z.contexts {
        derive_up(&ctx.0, c, &mut out);
    }
    Zipper { contexts: out }
}

fn derive_up<C: Symbol>(items: &[Regex<C>], c: &C, out: &mut BTreeSet<Context<C>>) {
    let mut rest = items;
    while let Some((head, tail)) = rest.split_first() {
        derive_down(head, tail, c, out);
        if !nullable(head) {
            break;
        }
        rest = tail;
    }
}

fn derive_down<C: Symbol>(r: &Regex<C>, ctx: &[Regex<C>], c: &C, out: &mut BTreeSet<Context<C>>) {
    match r {
        Regex::ElementMatch(d) => {
            if d == c {
                out.insert(Context(ctx.to_vec()));
            }
        }
        Regex::EmptyExpr | Regex::EmptyLang => {}
        Regex::Union(l, rr) => {
            derive_down(l, ctx, c, out);
            derive_down(rr, ctx, c, out);
        }
        Regex::Concat(l, rr) => {
            let pushed = Context::cons((**rr).clone(), ctx);
            derive_down(l, &pushed.0, c, out);
            if nullable(l) {
                derive_down(rr, ctx, c, out);
            }
        }
        Regex::Star(inner) => {
            let pushed = Context::cons(r.clone(), ctx);
            derive_down(inner, &pushed.0, c, out);
        }
    }
}

/// True iff some context consists only of nullable regexes.
pub fn zipper_nullable<C: Symbol>(z: &Zipper<C>) -> bool {
    z.contexts.iter().any(|ctx| ctx.0.iter().all(nullable))
}

pub fn match_zipper<C: Symbol>(z: &Zipper<C>, s: &[C]) -> bool {
    let mut current = z.clone();
    for c in s {
        if current.is_empty() {
            return false;
        }
        current = zipper_derive(&current, c);
    }
    zipper_nullable(&current)
}
