//! Deterministic automata with an explicit trap state.
//!
//! Transition lists may be partial: a missing `(state, character)` pair
//! steps to the error state.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::regex::{MatchSplit, Symbol};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StateId(pub u64);

impl fmt::Display for StateId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "q{}", self.0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DfaTransition<C> {
    pub from: StateId,
    pub on: C,
    pub to: StateId,
}

impl<C> DfaTransition<C> {
    pub fn new(from: u64, on: C, to: u64) -> Self {
        DfaTransition {
            from: StateId(from),
            on,
            to: StateId(to),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DfaError {
    #[error("transitions {first} and {second} both leave {state} on {symbol}")]
    DuplicateTransition {
        state: StateId,
        symbol: String,
        first: usize,
        second: usize,
    },
    #[error("transition {index} leaves the error state {state}")]
    TransitionOutOfErrorState { index: usize, state: StateId },
    #[error("error state {0} is also final")]
    ErrorStateIsFinal(StateId),
}

/// A DFA. The transition list is the canonical form; a per-state index is
/// built alongside it.
#[derive(Clone, Debug)]
pub struct Dfa<C> {
    start: StateId,
    finals: BTreeSet<StateId>,
    error_state: StateId,
    transitions: Vec<DfaTransition<C>>,
    index: HashMap<StateId, HashMap<C, StateId>>,
}

impl<C: PartialEq> PartialEq for Dfa<C> {
    fn eq(&self, other: &Self) -> bool {
        self.start == other.start
            && self.finals == other.finals
            && self.error_state == other.error_state
            && self.transitions == other.transitions
    }
}

impl<C: Eq> Eq for Dfa<C> {}

impl<C: Symbol> Dfa<C> {
    /// Builds a DFA and checks [`valid_dfa`], reporting the first violation.
    pub fn new(
        start: StateId,
        finals: impl IntoIterator<Item = StateId>,
        error_state: StateId,
        transitions: Vec<DfaTransition<C>>,
    ) -> Result<Self, DfaError> {
        let dfa = Self::from_parts(start, finals, error_state, transitions);
        match dfa.violations().into_iter().next() {
            Some(err) => Err(err),
            None => Ok(dfa),
        }
    }

    /// Builds a DFA without validation. For duplicate `(state, character)`
    /// pairs the first transition wins in the index.
    pub fn from_parts(
        start: StateId,
        finals: impl IntoIterator<Item = StateId>,
        error_state: StateId,
        transitions: Vec<DfaTransition<C>>,
    ) -> Self {
        let mut index = HashMap::with_capacity(transitions.len());
        for t in &transitions {
            index
                .entry(t.from)
                .or_insert_with(HashMap::new)
                .entry(t.on.clone())
                .or_insert(t.to);
        }
        Dfa {
            start,
            finals: finals.into_iter().collect(),
            error_state,
            transitions,
            index,
        }
    }

    pub fn start(&self) -> StateId {
        self.start
    }

    pub fn finals(&self) -> &BTreeSet<StateId> {
        &self.finals
    }

    pub fn error_state(&self) -> StateId {
        self.error_state
    }

    pub fn transitions(&self) -> &[DfaTransition<C>] {
        &self.transitions
    }

    pub fn is_final(&self, q: StateId) -> bool {
        self.finals.contains(&q)
    }

    /// Every state mentioned anywhere in the automaton.
    pub fn states(&self) -> BTreeSet<StateId> {
        let mut out: BTreeSet<StateId> = self.finals.clone();
        out.insert(self.start);
        out.insert(self.error_state);
        for t in &self.transitions {
            out.insert(t.from);
            out.insert(t.to);
        }
        out
    }

    /// All violations of the validity invariant, in transition order.
    pub fn violations(&self) -> Vec<DfaError> {
        let mut out = Vec::new();
        let mut seen: HashMap<(StateId, &C), usize> = HashMap::new();
        for (i, t) in self.transitions.iter().enumerate() {
            if let Some(&first) = seen.get(&(t.from, &t.on)) {
                out.push(DfaError::DuplicateTransition {
                    state: t.from,
                    symbol: format!("{:?}", t.on),
                    first,
                    second: i,
                });
            } else {
                seen.insert((t.from, &t.on), i);
            }
            if t.from == self.error_state {
                out.push(DfaError::TransitionOutOfErrorState {
                    index: i,
                    state: t.from,
                });
            }
        }
        if self.finals.contains(&self.error_state) {
            out.push(DfaError::ErrorStateIsFinal(self.error_state));
        }
        out
    }

    /// State reached from `q` after consuming all of `input`, without the
    /// trap-state early exit.
    pub fn run_from(&self, q: StateId, input: &[C]) -> StateId {
        input.iter().fold(q, |state, c| dfa_step(self, state, c))
    }
}

/// No duplicate `(state, character)` pair, nothing leaves the error state,
/// and the error state is not final.
pub fn valid_dfa<C: Symbol>(d: &Dfa<C>) -> bool {
    d.violations().is_empty()
}

pub fn dfa_step<C: Symbol>(d: &Dfa<C>, q: StateId, c: &C) -> StateId {
    if q == d.error_state {
        return q;
    }
    d.index
        .get(&q)
        .and_then(|row| row.get(c))
        .copied()
        .unwrap_or(d.error_state)
}

/// Length of the longest non-empty prefix ending in a final state, if any.
/// Simulation stops at the error state.
pub fn longest_prefix_len_dfa<C: Symbol>(d: &Dfa<C>, input: &[C]) -> Option<usize> {
    let mut state = d.start;
    let mut best = None;
    for (i, c) in input.iter().enumerate() {
        state = dfa_step(d, state, c);
        if state == d.error_state {
            break;
        }
        if d.is_final(state) {
            best = Some(i + 1);
        }
    }
    best
}

/// Longest non-empty prefix accepted by `d`; `("", input)` when there is
/// none.
pub fn find_longest_match_dfa<C: Symbol>(d: &Dfa<C>, input: &[C]) -> MatchSplit<C> {
    MatchSplit::at(input, longest_prefix_len_dfa(d, input).unwrap_or(0))
}

/// Whether `d` accepts the whole of `input`.
pub fn match_dfa<C: Symbol>(d: &Dfa<C>, input: &[C]) -> bool {
    if input.is_empty() {
        return d.is_final(d.start);
    }
    longest_prefix_len_dfa(d, input) == Some(input.len())
}

/// Labels of transitions that do not lead into the error state.
pub fn used_characters_dfa<C: Symbol>(d: &Dfa<C>) -> BTreeSet<C> {
    d.transitions
        .iter()
        .filter(|t| t.to != d.error_state)
        .map(|t| t.on.clone())
        .collect()
}
