//! Test support for `invlex`: exhaustive enumerators, brute-force oracles
//! and a derivative-closure DFA builder for fixtures.
//!
//! The oracles are definitional. `brute_longest_match` only uses the
//! split-search semantics (`match_spec`), `brute_lex` only uses
//! `brute_longest_match`, and the DFA builder carries its own derivative
//! and normalization code.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

use invlex::dfa::{Dfa, DfaTransition, StateId};
use invlex::lexer::{Matcher, Rule, RuleSet, Token};
use invlex::regex::{match_spec, MatchSplit, Regex, Symbol};
use proptest::prelude::*;

pub const MAX_STRING_LEN: usize = 10;
pub const MAX_REGEX_DEPTH: usize = 3;
pub const MAX_DFA_STATES: usize = 512;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BoundError {
    #[error("string length {0} exceeds the enumeration bound {MAX_STRING_LEN}")]
    StringLength(usize),
    #[error("regex depth {0} exceeds the enumeration bound {MAX_REGEX_DEPTH}")]
    RegexDepth(usize),
    #[error("derivative closure exceeds {MAX_DFA_STATES} states")]
    DfaStates,
}

/// All strings of length `0..=max_len`, shortest first, then
/// lexicographically.
pub fn enumerate_strings<C: Symbol>(
    alphabet: &[C],
    max_len: usize,
) -> Result<Vec<Vec<C>>, BoundError> {
    if max_len > MAX_STRING_LEN {
        return Err(BoundError::StringLength(max_len));
    }
    let sorted: Vec<C> = alphabet
        .iter()
        .cloned()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let mut out = vec![Vec::new()];
    let mut layer = vec![Vec::new()];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|s| {
                sorted.iter().map(move |c| {
                    let mut next = s.clone();
                    next.push(c.clone());
                    next
                })
            })
            .collect();
        out.extend(layer.iter().cloned());
    }
    Ok(out)
}

/// All regexes of depth at most `max_depth` over `alphabet`: leaves first,
/// then stars, unions and concatenations of shallower trees.
pub fn enumerate_regexes<C: Symbol>(
    alphabet: &[C],
    max_depth: usize,
) -> Result<Vec<Regex<C>>, BoundError> {
    if max_depth > MAX_REGEX_DEPTH {
        return Err(BoundError::RegexDepth(max_depth));
    }
    if max_depth == 0 {
        return Ok(Vec::new());
    }
    let sorted: BTreeSet<C> = alphabet.iter().cloned().collect();
    let mut leaves = vec![Regex::EmptyLang, Regex::EmptyExpr];
    leaves.extend(sorted.into_iter().map(Regex::ElementMatch));
    let mut current = leaves.clone();
    for _ in 1..max_depth {
        let mut next = leaves.clone();
        next.extend(current.iter().map(|r| Regex::star(r.clone())));
        for l in &current {
            for r in &current {
                next.push(Regex::union(l.clone(), r.clone()));
            }
        }
        for l in &current {
            for r in &current {
                next.push(Regex::concat(l.clone(), r.clone()));
            }
        }
        current = next;
    }
    let mut seen = HashSet::new();
    current.retain(|r| seen.insert(r.clone()));
    Ok(current)
}

/// Closed form for the size of [`enumerate_regexes`]:
/// `n(1) = 2 + k`, `n(d) = 2 + k + n(d-1) + 2 n(d-1)^2`.
pub fn regex_count(alphabet_len: usize, depth: usize) -> usize {
    match depth {
        0 => 0,
        1 => 2 + alphabet_len,
        d => {
            let prev = regex_count(alphabet_len, d - 1);
            2 + alphabet_len + prev + 2 * prev * prev
        }
    }
}

/// Longest prefix matched by `r`, trying prefixes longest first with the
/// split-search semantics.
pub fn brute_longest_match<C: Symbol>(r: &Regex<C>, s: &[C]) -> MatchSplit<C> {
    assert!(s.len() <= MAX_STRING_LEN, "oracle input too long");
    let len = (0..=s.len())
        .rev()
        .find(|&k| match_spec(r, &s[..k]))
        .unwrap_or(0);
    MatchSplit {
        prefix: s[..len].to_vec(),
        suffix: s[len..].to_vec(),
    }
}

/// Acceptance by walking the transition list directly.
fn dfa_accepts<C: Symbol>(d: &Dfa<C>, s: &[C]) -> bool {
    let mut state = d.start();
    for c in s {
        if state == d.error_state() {
            return false;
        }
        match d
            .transitions()
            .iter()
            .find(|t| t.from == state && &t.on == c)
        {
            Some(t) => state = t.to,
            None => return false,
        }
    }
    d.is_final(state)
}

/// Longest non-empty prefix of `s` accepted by the rule's matcher, by
/// brute force.
pub fn brute_rule_match<C: Symbol>(rule: &Rule<C>, s: &[C]) -> usize {
    match rule.matcher() {
        Matcher::Regex(r) => brute_longest_match(r, s).prefix.len(),
        Matcher::Dfa(d) => (1..=s.len())
            .rev()
            .find(|&k| dfa_accepts(d, &s[..k]))
            .unwrap_or(0),
    }
}

/// Reference maximal-munch lexer.
pub fn brute_lex<C: Symbol>(rules: &RuleSet<C>, s: &[C]) -> (Vec<Token<C>>, Vec<C>) {
    brute_lex_by(rules, s, |_, rule, rest| brute_rule_match(rule, rest))
}

/// [`brute_lex`] with the per-rule longest match supplied by the caller
/// (e.g. a precomputed table of [`brute_rule_match`] results). `longest`
/// receives the rule index, the rule and the remaining input.
pub fn brute_lex_by<C, F>(rules: &RuleSet<C>, s: &[C], mut longest: F) -> (Vec<Token<C>>, Vec<C>)
where
    C: Symbol,
    F: FnMut(usize, &Rule<C>, &[C]) -> usize,
{
    let mut tokens = Vec::new();
    let mut pos = 0;
    loop {
        let rest = &s[pos..];
        let mut best: Option<(usize, usize)> = None;
        for (i, rule) in rules.rules().iter().enumerate() {
            let len = longest(i, rule, rest);
            if len > 0 && best.is_none_or(|(_, b)| len > b) {
                best = Some((i, len));
            }
        }
        let Some((i, len)) = best else { break };
        let rule = &rules.rules()[i];
        tokens.push(Token::new(
            rest[..len].to_vec(),
            rule.tag(),
            rule.is_separator(),
        ));
        pos += len;
    }
    (tokens, s[pos..].to_vec())
}

fn nullable<C>(r: &Regex<C>) -> bool {
    match r {
        Regex::EmptyExpr | Regex::Star(_) => true,
        Regex::EmptyLang | Regex::ElementMatch(_) => false,
        Regex::Union(a, b) => nullable(a) || nullable(b),
        Regex::Concat(a, b) => nullable(a) && nullable(b),
    }
}

fn deriv<C: Symbol>(r: &Regex<C>, c: &C) -> Regex<C> {
    match r {
        Regex::EmptyExpr | Regex::EmptyLang => Regex::EmptyLang,
        Regex::ElementMatch(d) if d == c => Regex::EmptyExpr,
        Regex::ElementMatch(_) => Regex::EmptyLang,
        Regex::Union(a, b) => Regex::union(deriv(a, c), deriv(b, c)),
        Regex::Concat(a, b) if nullable(a) => {
            Regex::union(Regex::concat(deriv(a, c), (**b).clone()), deriv(b, c))
        }
        Regex::Concat(a, b) => Regex::concat(deriv(a, c), (**b).clone()),
        Regex::Star(inner) => Regex::concat(deriv(inner, c), r.clone()),
    }
}

fn union_operands<C: Symbol>(r: Regex<C>, out: &mut Vec<Regex<C>>) {
    match r {
        Regex::Union(a, b) => {
            union_operands((*a).clone(), out);
            union_operands((*b).clone(), out);
        }
        Regex::EmptyLang => {}
        other => out.push(other),
    }
}

/// Normal form modulo associativity, commutativity and idempotence of
/// union, plus the unit and zero laws of concatenation and star.
pub fn aci_normalize<C: Symbol>(r: &Regex<C>) -> Regex<C> {
    match r {
        Regex::EmptyLang | Regex::EmptyExpr | Regex::ElementMatch(_) => r.clone(),
        Regex::Star(inner) => match aci_normalize(inner) {
            Regex::EmptyLang | Regex::EmptyExpr => Regex::EmptyExpr,
            s @ Regex::Star(_) => s,
            other => Regex::star(other),
        },
        Regex::Concat(a, b) => match (aci_normalize(a), aci_normalize(b)) {
            (Regex::EmptyLang, _) | (_, Regex::EmptyLang) => Regex::EmptyLang,
            (Regex::EmptyExpr, x) | (x, Regex::EmptyExpr) => x,
            (x, y) => Regex::concat(x, y),
        },
        Regex::Union(a, b) => {
            let mut ops = Vec::new();
            union_operands(aci_normalize(a), &mut ops);
            union_operands(aci_normalize(b), &mut ops);
            ops.sort();
            ops.dedup();
            let mut iter = ops.into_iter();
            match iter.next() {
                None => Regex::EmptyLang,
                Some(first) => iter.fold(first, Regex::union),
            }
        }
    }
}

/// DFA whose states are the normalized derivatives of `r` over `alphabet`.
/// States that cannot reach a final state are merged into the error state
/// and edges into it are left implicit.
pub fn brzozowski_dfa<C: Symbol>(r: &Regex<C>, alphabet: &[C]) -> Result<Dfa<C>, BoundError> {
    let alphabet: Vec<C> = alphabet
        .iter()
        .cloned()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let mut ids: HashMap<Regex<C>, u64> = HashMap::new();
    let mut states: Vec<Regex<C>> = Vec::new();
    let mut edges: Vec<(u64, C, u64)> = Vec::new();
    let mut queue = VecDeque::new();

    let mut intern = |re: Regex<C>,
                      states: &mut Vec<Regex<C>>,
                      queue: &mut VecDeque<u64>|
     -> Result<u64, BoundError> {
        if let Some(&id) = ids.get(&re) {
            return Ok(id);
        }
        if states.len() >= MAX_DFA_STATES {
            return Err(BoundError::DfaStates);
        }
        let id = states.len() as u64;
        ids.insert(re.clone(), id);
        states.push(re);
        queue.push_back(id);
        Ok(id)
    };

    let start = intern(aci_normalize(r), &mut states, &mut queue)?;
    let dead = intern(Regex::EmptyLang, &mut states, &mut queue)?;
    while let Some(q) = queue.pop_front() {
        for c in &alphabet {
            let next = aci_normalize(&deriv(&states[q as usize], c));
            let to = intern(next, &mut states, &mut queue)?;
            edges.push((q, c.clone(), to));
        }
    }

    let finals: BTreeSet<u64> = (0..states.len() as u64)
        .filter(|&q| nullable(&states[q as usize]))
        .collect();
    let mut productive = finals.clone();
    loop {
        let before = productive.len();
        for (from, _, to) in &edges {
            if productive.contains(to) {
                productive.insert(*from);
            }
        }
        if productive.len() == before {
            break;
        }
    }
    let error = dead;
    let canon = |q: u64| if productive.contains(&q) { q } else { error };
    let transitions = edges
        .into_iter()
        .filter(|(from, _, to)| productive.contains(from) && productive.contains(to))
        .map(|(from, c, to)| DfaTransition::new(from, c, to))
        .collect();
    let dfa = Dfa::new(
        StateId(canon(start)),
        finals.into_iter().map(StateId),
        StateId(error),
        transitions,
    )
    .expect("derivative-closure DFAs are valid by construction");
    Ok(dfa)
}

/// Number of distinct states of a DFA.
pub fn state_count<C: Symbol>(d: &Dfa<C>) -> usize {
    d.states().len()
}

/// Random regexes over `alphabet` of depth at most `depth`.
pub fn arb_regex(alphabet: Vec<char>, depth: u32) -> impl Strategy<Value = Regex<char>> {
    let leaf = prop_oneof![
        Just(Regex::EmptyLang),
        Just(Regex::EmptyExpr),
        proptest::sample::select(alphabet).prop_map(Regex::ElementMatch),
    ];
    leaf.prop_recursive(depth.saturating_sub(1), 64, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(Regex::star),
            (inner.clone(), inner.clone()).prop_map(|(l, r)| Regex::union(l, r)),
            (inner.clone(), inner).prop_map(|(l, r)| Regex::concat(l, r)),
        ]
    })
}

/// Random strings over `alphabet` of length at most `max_len`.
pub fn arb_string(alphabet: Vec<char>, max_len: usize) -> impl Strategy<Value = Vec<char>> {
    proptest::collection::vec(proptest::sample::select(alphabet), 0..=max_len)
}
