//! Acceptance criteria. Runs without the libtest harness so that every
//! criterion prints exactly one `ACCEPTANCE Cxx ... PASS|FAIL` line and the
//! timing criterion runs with nothing else competing for the CPU.
//!
//! Pass criterion ids (e.g. `C06 C07`) as arguments to run a subset.

use std::collections::BTreeSet;
use std::process::Command;
use std::sync::OnceLock;
use std::time::Instant;

use invlex::dfa::{
    dfa_step, longest_prefix_len_dfa, match_dfa, used_characters_dfa, valid_dfa, Dfa,
};
use invlex::io::{load_tokens, save_tokens, tokens_from_json, tokens_to_json, TokenFile};
use invlex::lang::regex_to_language;
use invlex::lexer::{lex, lex_traced, Derivatives, Rule, RuleSet, Token};
use invlex::memo::{match_r_mem, DerivativeCache};
use invlex::printer::{
    check_rules_produce_token, print, print_with_separator, print_with_separator_when_needed,
    validate,
};
use invlex::regex::{
    find_longest_match, first_chars, match_r, match_spec, nullable, used_characters, Regex,
};
use invlex::syntax::{parse_regex_syntax, render_regex};
use invlex::zipper::{match_zipper, to_zipper};
use invlex_testkit::{
    arb_regex, arb_string, brute_lex_by, brute_longest_match, brute_rule_match, brzozowski_dfa,
    enumerate_regexes, enumerate_strings,
};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestError, TestRng, TestRunner};

const AB: [char; 2] = ['a', 'b'];
const ABC: [char; 3] = ['a', 'b', 'c'];

struct Outcome {
    pass: bool,
    detail: String,
}

impl Outcome {
    fn zero_failures(failures: usize, checked: usize, unit: &str) -> Self {
        Outcome {
            pass: failures == 0,
            detail: format!("{failures} failures in {checked} {unit}"),
        }
    }
}

fn regexes(depth: usize) -> &'static [Regex<char>] {
    static D2: OnceLock<Vec<Regex<char>>> = OnceLock::new();
    static D3: OnceLock<Vec<Regex<char>>> = OnceLock::new();
    let cell = match depth {
        2 => &D2,
        3 => &D3,
        _ => unreachable!(),
    };
    cell.get_or_init(|| enumerate_regexes(&AB, depth).unwrap())
}

fn strings(alphabet: &[char], max_len: usize) -> Vec<Vec<char>> {
    enumerate_strings(alphabet, max_len).unwrap()
}

fn runner(cases: u32) -> TestRunner {
    let config = Config {
        cases,
        failure_persistence: None,
        ..Config::default()
    };
    let rng = TestRng::deterministic_rng(config.rng_algorithm);
    TestRunner::new_with_rng(config, rng)
}

fn describe<T: std::fmt::Debug>(e: TestError<T>) -> String {
    match e {
        TestError::Abort(why) => format!("aborted: {why}"),
        TestError::Fail(why, value) => format!("{why} on {value:?}"),
    }
}

// ---------------------------------------------------------------------------

fn c01() -> Outcome {
    let ss = strings(&AB, 6);
    let mut failures = 0;
    let mut checked = 0;
    for r in regexes(3) {
        let lang = regex_to_language(r);
        let z = to_zipper(r);
        for s in &ss {
            let expected = match_spec(r, s);
            let all = [
                match_r(r, s),
                match_r_mem(r, s, &mut DerivativeCache::new()),
                match_zipper(&z, s),
                lang.contains(s),
            ];
            if all.iter().any(|&x| x != expected) {
                failures += 1;
                if failures <= 5 {
                    eprintln!("  disagreement: {r:?} on {s:?}: spec {expected}, engines {all:?}");
                }
            }
            checked += 1;
        }
    }
    Outcome::zero_failures(failures, checked, "(regex, string) pairs")
}

fn c02() -> Outcome {
    let ss = strings(&AB, 6);
    let mut failures = 0;
    let mut checked = 0;
    for r in regexes(3) {
        for s in &ss {
            if find_longest_match(r, s) != brute_longest_match(r, s) {
                failures += 1;
            }
            checked += 1;
        }
    }
    Outcome::zero_failures(failures, checked, "(regex, string) pairs")
}

/// The lemmas as predicates over two regexes and two strings. Each returns
/// true when the lemma holds for the instance.
type Lemma = fn(&Regex<char>, &Regex<char>, &[char], &[char]) -> bool;

fn lemmas() -> Vec<(&'static str, Lemma)> {
    fn joined(s1: &[char], s2: &[char]) -> Vec<char> {
        s1.iter().chain(s2).copied().collect()
    }
    vec![
        ("union left", |r1, r2, s, _| {
            !match_r(r1, s) || match_r(&Regex::union(r1.clone(), r2.clone()), s)
        }),
        ("union right", |r1, r2, s, _| {
            !match_r(r2, s) || match_r(&Regex::union(r1.clone(), r2.clone()), s)
        }),
        ("union split", |r1, r2, s, _| {
            !match_r(&Regex::union(r1.clone(), r2.clone()), s) || match_r(r1, s) || match_r(r2, s)
        }),
        ("concat append", |r1, r2, s1, s2| {
            !(match_r(r1, s1) && match_r(r2, s2))
                || match_r(&Regex::concat(r1.clone(), r2.clone()), &joined(s1, s2))
        }),
        ("star empty", |r1, _, _, _| {
            match_r(&Regex::star(r1.clone()), &[])
        }),
        ("star append", |r1, _, s1, s2| {
            let star = Regex::star(r1.clone());
            !(match_r(r1, s1) && match_r(&star, s2)) || match_r(&star, &joined(s1, s2))
        }),
        ("first chars within used chars", |r1, _, _, _| {
            first_chars(r1).is_subset(&used_characters(r1))
        }),
        ("unused character", |r1, _, s, _| {
            let used = used_characters(r1);
            s.iter().all(|c| used.contains(c)) || !match_r(r1, s)
        }),
        ("first character", |r1, _, s, _| match s.first() {
            Some(c) if !first_chars(r1).contains(c) => !match_r(r1, s),
            _ => true,
        }),
    ]
}

fn c03() -> Outcome {
    let mut failures = Vec::new();
    let mut checked = 0usize;
    for (name, lemma) in lemmas() {
        // Random instances.
        let strategy = (
            arb_regex(ABC.to_vec(), 4),
            arb_regex(ABC.to_vec(), 4),
            arb_string(ABC.to_vec(), 6),
            arb_string(ABC.to_vec(), 6),
        );
        let result = runner(1000).run(&strategy, |(r1, r2, s1, s2)| {
            prop_assert!(lemma(&r1, &r2, &s1, &s2));
            Ok(())
        });
        checked += 1000;
        if let Err(e) = result {
            failures.push(format!("{name}: {}", describe(e)));
        }
        // Exhaustive: pairs of depth-2 regexes with pairs of short strings,
        // and every depth-3 regex against single strings with an unused
        // character available.
        let short = strings(&AB, 3);
        let d2 = regexes(2);
        let mut bad = 0;
        for r1 in d2 {
            for r2 in d2 {
                for s1 in &short {
                    for s2 in &short {
                        checked += 1;
                        if !lemma(r1, r2, s1, s2) {
                            bad += 1;
                        }
                    }
                }
            }
        }
        let singles = strings(&ABC, 5);
        for r in regexes(3) {
            for s in &singles {
                checked += 1;
                if !lemma(r, r, s, &[]) {
                    bad += 1;
                }
            }
        }
        if bad > 0 {
            failures.push(format!("{name}: {bad} exhaustive failures"));
        }
    }
    for f in &failures {
        eprintln!("  {f}");
    }
    Outcome::zero_failures(failures.len(), checked, "lemma instances")
}

fn c04() -> Outcome {
    let ss = strings(&AB, 6);
    let mut stale = 0;
    let mut wrong = 0;
    let mut batches = 0;
    for r in regexes(3) {
        let mut cache = DerivativeCache::new();
        for s in &ss {
            if match_r_mem(r, s, &mut cache) != match_r(r, s) {
                wrong += 1;
            }
        }
        stale += cache.audit().len();
        batches += 1;
    }
    let mut repetitive = DerivativeCache::new();
    let star_a = Regex::star(Regex::elem('a'));
    for n in 1..=50 {
        assert!(match_r_mem(&star_a, &vec!['a'; n], &mut repetitive));
    }
    let hits = repetitive.stats().hits;
    Outcome {
        pass: stale == 0 && wrong == 0 && hits > 0,
        detail: format!("{stale} stale entries and {wrong} wrong answers over {batches} batches; {hits} hits on a* against a^1..a^50"),
    }
}

fn c05() -> Outcome {
    let ss = strings(&ABC, 6);
    let mut failures = 0;
    let mut checked = 0;
    let mut max_states = 0;
    for r in regexes(3) {
        let d = brzozowski_dfa(r, &AB).unwrap();
        max_states = max_states.max(d.states().len());
        if !valid_dfa(&d) {
            failures += 1;
            continue;
        }
        let used = used_characters_dfa(&d);
        for s in &ss {
            checked += 1;
            let accepted = match_dfa(&d, s);
            let ok = accepted == match_r(r, s)
                && (s.iter().all(|c| used.contains(c)) || !accepted)
                && longest_prefix_len_dfa(&d, s) == full_simulation(&d, s);
            if !ok {
                failures += 1;
            }
        }
    }
    let mut outcome = Outcome::zero_failures(failures, checked, "(DFA, string) pairs");
    outcome.detail += &format!("; largest DFA has {max_states} states");
    outcome
}

/// Longest non-empty accepted prefix without stopping at the error state.
fn full_simulation(d: &Dfa<char>, s: &[char]) -> Option<usize> {
    let mut q = d.start();
    let mut best = None;
    for (i, c) in s.iter().enumerate() {
        q = dfa_step(d, q, c);
        if d.is_final(q) {
            best = Some(i + 1);
        }
    }
    best
}

// ---------------------------------------------------------------------------
// Criteria 6 to 8 share one sweep.

struct LexSweep {
    rule_sets: usize,
    pairs: usize,
    brute_mismatch: usize,
    unsound: usize,
    backend_mismatch: usize,
    not_invertible: usize,
    seconds: f64,
}

/// Index of a string over {a,b} among all strings in length-then-lexicographic order.
fn code(s: &[char]) -> usize {
    let bits = s.iter().fold(0, |acc, &c| acc * 2 + usize::from(c == 'b'));
    (1 << s.len()) - 1 + bits
}

fn lex_sweep() -> &'static LexSweep {
    static SWEEP: OnceLock<LexSweep> = OnceLock::new();
    SWEEP.get_or_init(|| {
        let started = Instant::now();
        let pool: Vec<Regex<char>> = regexes(2)
            .iter()
            .filter(|r| !nullable(r))
            .cloned()
            .collect();
        let dfas: Vec<Dfa<char>> = pool
            .iter()
            .map(|r| brzozowski_dfa(r, &AB).unwrap())
            .collect();
        let inputs = strings(&AB, 6);
        for (i, s) in inputs.iter().enumerate() {
            assert_eq!(code(s), i);
        }
        // spec[r][s]: s in L(r); longest[r][s]: brute longest non-empty prefix.
        let spec: Vec<Vec<bool>> = pool
            .iter()
            .map(|r| inputs.iter().map(|s| match_spec(r, s)).collect())
            .collect();
        let longest: Vec<Vec<usize>> = pool
            .iter()
            .map(|r| {
                let rule = Rule::new(r.clone(), "t", false);
                inputs.iter().map(|s| brute_rule_match(&rule, s)).collect()
            })
            .collect();

        let mut choices: Vec<Vec<usize>> = Vec::new();
        for a in 0..pool.len() {
            choices.push(vec![a]);
            for b in 0..pool.len() {
                choices.push(vec![a, b]);
                for c in 0..pool.len() {
                    choices.push(vec![a, b, c]);
                }
            }
        }

        let mut sweep = LexSweep {
            rule_sets: choices.len(),
            pairs: 0,
            brute_mismatch: 0,
            unsound: 0,
            backend_mismatch: 0,
            not_invertible: 0,
            seconds: 0.0,
        };
        for choice in &choices {
            let tag = |k: usize| format!("R{k}");
            let regex_rules = RuleSet::new(
                choice
                    .iter()
                    .enumerate()
                    .map(|(k, &i)| Rule::new(pool[i].clone(), tag(k), false))
                    .collect(),
            )
            .unwrap();
            let dfa_rules = RuleSet::new(
                choice
                    .iter()
                    .enumerate()
                    .map(|(k, &i)| Rule::new(dfas[i].clone(), tag(k), false))
                    .collect(),
            )
            .unwrap();
            for s in &inputs {
                sweep.pairs += 1;
                let (tokens, winners, rest) = lex_traced(&mut Derivatives, &regex_rules, s);
                let reference =
                    brute_lex_by(&regex_rules, s, |k, _, tail| longest[choice[k]][code(tail)]);
                if (tokens.clone(), rest.clone()) != reference {
                    sweep.brute_mismatch += 1;
                }
                // Soundness of the first token by scanning prefixes directly.
                let (n, winner) = match (tokens.first(), winners.first()) {
                    (Some(t), Some(&w)) => (t.characters.len(), w),
                    _ => (0, choice.len()),
                };
                let mut sound = winner == choice.len() || spec[choice[winner]][code(&s[..n])];
                for (k, &i) in choice.iter().enumerate() {
                    let from = if k < winner { n.max(1) } else { n + 1 };
                    if (from..=s.len()).any(|len| spec[i][code(&s[..len])]) {
                        sound = false;
                    }
                }
                if !sound {
                    sweep.unsound += 1;
                }
                if lex(&dfa_rules, s) != (tokens.clone(), rest.clone()) {
                    sweep.backend_mismatch += 1;
                }
                let mut printed = print(&tokens);
                printed.extend_from_slice(&rest);
                if &printed != s {
                    sweep.not_invertible += 1;
                }
            }
        }
        sweep.seconds = started.elapsed().as_secs_f64();
        sweep
    })
}

fn c06() -> Outcome {
    let s = lex_sweep();
    Outcome {
        pass: s.brute_mismatch == 0 && s.unsound == 0,
        detail: format!(
            "{} oracle mismatches, {} soundness violations over {} rule sets x 127 inputs ({} pairs, {:.1}s)",
            s.brute_mismatch, s.unsound, s.rule_sets, s.pairs, s.seconds
        ),
    }
}

fn c07() -> Outcome {
    let s = lex_sweep();
    Outcome::zero_failures(s.backend_mismatch, s.pairs, "(rules, input) pairs")
}

fn c08() -> Outcome {
    let s = lex_sweep();
    Outcome::zero_failures(s.not_invertible, s.pairs, "(rules, input) pairs")
}

fn chars(text: &str) -> Vec<char> {
    text.chars().collect()
}

fn c09() -> Outcome {
    let first = Regex::union(Regex::elem('a'), Regex::literal(chars("abc")));
    let rules = RuleSet::new(vec![
        Rule::new(first, "first", false),
        Rule::new(Regex::elem('b'), "second", false),
        Rule::new(Regex::elem('c'), "third", false),
    ])
    .unwrap();
    let t1 = Token::new(chars("a"), "first", false);
    let t2 = Token::new(chars("b"), "second", false);
    let t3 = Token::new(chars("c"), "third", false);
    let original = vec![t1, t2, t3];
    let (lexed, rest) = lex(&rules, &chars("abc"));
    let printed = print(&original);
    let (relexed, _) = lex(&rules, &printed);
    let a = lexed == vec![Token::new(chars("abc"), "first", false)] && rest.is_empty();
    let b = printed == chars("abc");
    let c = relexed != original;
    Outcome {
        pass: a && b && c,
        detail: format!(
            "lex(\"abc\") is one token: {a}; plain print is \"abc\": {b}; re-lex differs: {c}"
        ),
    }
}

fn c10() -> Outcome {
    let started = Instant::now();
    let pool: Vec<Regex<char>> = regexes(2)
        .iter()
        .filter(|r| !nullable(r))
        .cloned()
        .collect();
    let words: Vec<Vec<char>> = strings(&AB, 3)
        .into_iter()
        .filter(|w| !w.is_empty())
        .collect();
    let sep = Token::new(vec![' '], "SEP", true);
    let mut choices: Vec<Vec<usize>> = Vec::new();
    for a in 0..pool.len() {
        choices.push(vec![a]);
        for b in 0..pool.len() {
            choices.push(vec![a, b]);
        }
    }
    let (mut lists, mut failures) = (0usize, 0usize);
    for choice in &choices {
        let mut list: Vec<Rule<char>> = choice
            .iter()
            .enumerate()
            .map(|(k, &i)| Rule::new(pool[i].clone(), format!("R{k}"), false))
            .collect();
        list.push(Rule::new(Regex::plus(Regex::elem(' ')), "SEP", true));
        let rules = RuleSet::new(list).unwrap();
        let mut candidates = Vec::new();
        for w in &words {
            for rule in rules.rules().iter().filter(|r| !r.is_separator()) {
                let t = Token::new(w.clone(), rule.tag(), false);
                if check_rules_produce_token(&rules, &t) {
                    candidates.push(t);
                }
            }
        }
        let mut stack: Vec<Vec<Token<char>>> = vec![Vec::new()];
        while let Some(tokens) = stack.pop() {
            if tokens.len() < 3 {
                for t in &candidates {
                    let mut longer = tokens.clone();
                    longer.push(t.clone());
                    stack.push(longer);
                }
            }
            lists += 1;
            if validate(&rules, &tokens, &sep).is_err() {
                failures += 1;
                continue;
            }
            let printed = [
                print_with_separator(&tokens, &sep).unwrap(),
                print_with_separator_when_needed(&rules, &tokens, &sep).unwrap(),
            ];
            for p in printed {
                let (relexed, rest) = lex(&rules, &p);
                let kept: Vec<Token<char>> =
                    relexed.into_iter().filter(|t| !t.is_separator).collect();
                if kept != tokens || !rest.is_empty() {
                    failures += 1;
                }
            }
        }
    }
    let mut outcome = Outcome::zero_failures(failures, lists, "token lists");
    outcome.detail += &format!(
        " over {} rule sets ({:.1}s)",
        choices.len(),
        started.elapsed().as_secs_f64()
    );
    outcome
}

// ---------------------------------------------------------------------------

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_invlex"))
}

fn slope(points: &[(f64, f64)]) -> f64 {
    let n = points.len() as f64;
    let (sx, sy) = points
        .iter()
        .fold((0.0, 0.0), |(a, b), (x, y)| (a + x.ln(), b + y.ln()));
    let (mx, my) = (sx / n, sy / n);
    let (num, den) = points.iter().fold((0.0, 0.0), |(num, den), (x, y)| {
        let dx = x.ln() - mx;
        (num + dx * (y.ln() - my), den + dx * dx)
    });
    num / den
}

fn c11() -> Outcome {
    let dir = tempfile::tempdir().unwrap();
    let csv_path = dir.path().join("bench.csv");
    let status = bin()
        .args([
            "bench",
            "--suite",
            "derivatives,zipper",
            "--sizes",
            "1000,2000,4000,8000",
        ])
        .args(["--reps", "5", "--timeout-ms", "2000", "--out"])
        .arg(&csv_path)
        .stderr(std::process::Stdio::null())
        .status()
        .unwrap();
    let csv = std::fs::read_to_string(&csv_path).unwrap_or_default();
    let mut lines = csv.lines();
    let header_ok = lines.next() == Some("size,backend,median_ns");
    let mut zipper = Vec::new();
    let mut plain = Vec::new();
    let mut plain_capped = false;
    for line in lines {
        let f: Vec<&str> = line.split(',').collect();
        let (size, ns): (f64, f64) = (f[0].parse().unwrap(), f[2].parse().unwrap());
        match f[1] {
            "zipper" => zipper.push((size, ns)),
            "derivative" => plain.push((size, ns)),
            "derivative+timeout" => {
                plain_capped = true;
                plain.push((size, ns));
            }
            other => panic!("unexpected backend {other}"),
        }
    }
    if !status.success() || !header_ok || zipper.len() != 4 || plain.len() != 4 {
        return Outcome {
            pass: false,
            detail: format!("bench failed: status {status}, header ok {header_ok}, csv {csv:?}"),
        };
    }
    let zipper_slope = slope(&zipper);
    let ratio = plain[3].1 / zipper[3].1;
    // Capped runs give lower bounds, so a slope through them means nothing.
    let plain_slope = (!plain_capped).then(|| slope(&plain));
    let steeper = plain_slope.is_some_and(|s| s >= zipper_slope + 0.5);
    let slower = ratio >= 10.0;
    let plain_desc = match plain_slope {
        Some(s) => format!("{s:.2}"),
        None => "n/a (capped at 2s per run)".to_string(),
    };
    Outcome {
        pass: zipper_slope <= 1.3 && (steeper || slower),
        detail: format!(
            "zipper slope {zipper_slope:.2}; plain slope {plain_desc}; plain/zipper at 8k >= {ratio:.0}x"
        ),
    }
}

fn exit_code(cmd: &mut Command) -> Option<i32> {
    cmd.output().unwrap().status.code()
}

fn c12() -> Outcome {
    let mut problems = Vec::new();

    let syntax = runner(1000).run(
        &arb_regex(vec!['a', 'b', '|', '*', '(', ')', '\\', '%', ' ', 'é'], 5),
        |r| {
            let text = render_regex(&r);
            prop_assert_eq!(parse_regex_syntax(&text), Ok(r));
            Ok(())
        },
    );
    if let Err(e) = syntax {
        problems.push(format!("syntax: {}", describe(e)));
    }

    let dir = tempfile::tempdir().unwrap();
    let token_path = dir.path().join("tokens.json");
    let token = || {
        (".{1,4}", "[a-zA-Z_\"\\\\ ]{1,6}", any::<bool>()).prop_map(
            |(text, tag, sep): (String, String, bool)| Token::new(text.chars().collect(), tag, sep),
        )
    };
    let file = (
        proptest::collection::vec(token(), 0..6),
        proptest::option::of(token()),
    )
        .prop_map(|(tokens, sep)| TokenFile {
            tokens,
            separator: sep.map(|t| Token::new(t.characters, t.tag, true)),
        });
    let tokens = runner(1000).run(&file, |f| {
        prop_assert_eq!(
            tokens_from_json(&tokens_to_json(&f), "memory").unwrap(),
            f.clone()
        );
        save_tokens(&f, &token_path).unwrap();
        prop_assert_eq!(load_tokens(&token_path).unwrap(), f);
        Ok(())
    });
    if let Err(e) = tokens {
        problems.push(format!("tokens: {}", describe(e)));
    }

    // Invalid fixtures: loading for lexing is an input error (2); `check`
    // reports invariant failures as check failures (1) but cannot load a
    // malformed DFA at all (2).
    let write = |name: &str, doc: serde_json::Value| {
        let p = dir.path().join(name);
        std::fs::write(&p, doc.to_string()).unwrap();
        p
    };
    let input = dir.path().join("input.txt");
    std::fs::write(&input, "ab").unwrap();
    let out = dir.path().join("out.json");
    let fixtures = [
        (
            write(
                "duplicate.json",
                serde_json::json!({"format": 1, "rules": [
                    {"tag": "x", "separator": false, "regex": "a"},
                    {"tag": "x", "separator": false, "regex": "b"}]}),
            ),
            1,
        ),
        (
            write(
                "error_edge.json",
                serde_json::json!({"format": 1, "rules": [
                    {"tag": "x", "separator": false, "dfa": {"start": 0, "finals": [1], "error": 2,
                     "transitions": [[0, "a", 1], [2, "a", 1]]}}]}),
            ),
            2,
        ),
        (
            write(
                "nullable.json",
                serde_json::json!({"format": 1, "rules": [{"tag": "x", "separator": false, "regex": "a*"}]}),
            ),
            1,
        ),
    ];
    let out_arg = out.to_str().unwrap();
    for (path, check_code) in &fixtures {
        let lex_code = exit_code(
            bin()
                .arg("lex")
                .arg(path)
                .arg(&input)
                .args(["--out", out_arg]),
        );
        let check = exit_code(bin().arg("check").arg(path));
        if lex_code != Some(2) || check != Some(*check_code) {
            problems.push(format!(
                "{}: lex exited {lex_code:?} (want 2), check exited {check:?} (want {check_code})",
                path.file_name().unwrap().to_string_lossy()
            ));
        }
    }
    for p in &problems {
        eprintln!("  {p}");
    }
    Outcome {
        pass: problems.is_empty(),
        detail: format!(
            "1000 syntax and 1000 token-file round trips, {} invalid fixtures; {} problems",
            fixtures.len(),
            problems.len()
        ),
    }
}

fn main() {
    type Criterion = (&'static str, &'static str, fn() -> Outcome);
    let criteria: [Criterion; 12] = [
        ("C01", "engine equivalence sweep", c01),
        ("C02", "longest-match oracle", c02),
        ("C03", "regex lemmas", c03),
        ("C04", "memo cache audit", c04),
        ("C05", "DFA properties", c05),
        ("C06", "maximal munch", c06),
        ("C07", "backend equivalence", c07),
        ("C08", "invertibility from characters", c08),
        ("C09", "counterexample reproduction", c09),
        ("C10", "separator theorems", c10),
        ("C11", "performance trend", c11),
        ("C12", "I/O round trips", c12),
    ];
    let wanted: BTreeSet<String> = std::env::args()
        .skip(1)
        .filter(|a| !a.starts_with('-'))
        .collect();
    let mut failed = 0;
    for (id, name, run) in criteria {
        if !wanted.is_empty() && !wanted.contains(id) {
            continue;
        }
        let started = Instant::now();
        let outcome = run();
        let verdict = if outcome.pass { "PASS" } else { "FAIL" };
        println!(
            "ACCEPTANCE {id} {name}: {verdict} ({}; {:.1}s)",
            outcome.detail,
            started.elapsed().as_secs_f64()
        );
        if !outcome.pass {
            failed += 1;
        }
    }
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
