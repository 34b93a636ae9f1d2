use std::fmt::Write as _;
use std::path::Path;
use std::time::{Duration, Instant};

use clap::ValueEnum;
use invlex::dfa::{dfa_step, Dfa, DfaTransition, StateId};
use invlex::memo::{derivative_step_mem, DerivativeCache};
use invlex::regex::{derivative_step, nullable, Regex};
use invlex::zipper::{to_zipper, zipper_derive, zipper_nullable};

use crate::Failure;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Derivatives,
    Zipper,
    Memo,
    Dfa,
}

impl Suite {
    fn label(self) -> &'static str {
        match self {
            Suite::Derivatives => "derivative",
            Suite::Zipper => "zipper",
            Suite::Memo => "memo",
            Suite::Dfa => "dfa",
        }
    }
}

impl Suite {
    // Characters between deadline checks. The derivative backends can
    // spend seconds on a single step, the others nanoseconds.
    fn check_every(self) -> usize {
        match self {
            Suite::Derivatives | Suite::Memo => 1,
            Suite::Zipper | Suite::Dfa => 64,
        }
    }
}

// Unsimplified derivatives nest as deep as the input is long, and both
// deriving and dropping them recurse.
const STACK_BYTES: usize = 1 << 30;

fn family() -> Regex<char> {
    Regex::star(Regex::union(Regex::elem('a'), Regex::elem('b')))
}

fn family_dfa() -> Dfa<char> {
    Dfa::new(
        StateId(0),
        [StateId(0)],
        StateId(1),
        vec![DfaTransition::new(0, 'a', 0), DfaTransition::new(0, 'b', 0)],
    )
    .expect("hand-built DFA is valid")
}

enum Outcome {
    Done(Duration),
    TimedOut(Duration),
}

/// Runs one full match of the input, giving up after `limit`.
fn run_once(suite: Suite, input: &[char], limit: Option<Duration>) -> Outcome {
    let start = Instant::now();
    let every = suite.check_every();
    let over = |i: usize| i.is_multiple_of(every) && limit.is_some_and(|l| start.elapsed() > l);
    let matched = match suite {
        Suite::Derivatives => {
            let mut r = family();
            for (i, c) in input.iter().enumerate() {
                if over(i) {
                    return Outcome::TimedOut(start.elapsed());
                }
                r = derivative_step(&r, c);
            }
            nullable(&r)
        }
        Suite::Memo => {
            let mut cache = DerivativeCache::new();
            let mut r = family();
            for (i, c) in input.iter().enumerate() {
                if over(i) {
                    return Outcome::TimedOut(start.elapsed());
                }
                r = derivative_step_mem(&r, c, &mut cache);
            }
            nullable(&r)
        }
        Suite::Zipper => {
            let mut z = to_zipper(&family());
            for (i, c) in input.iter().enumerate() {
                if over(i) {
                    return Outcome::TimedOut(start.elapsed());
                }
                z = zipper_derive(&z, c);
            }
            zipper_nullable(&z)
        }
        Suite::Dfa => {
            let d = family_dfa();
            let mut q = d.start();
            for (i, c) in input.iter().enumerate() {
                if over(i) {
                    return Outcome::TimedOut(start.elapsed());
                }
                q = dfa_step(&d, q, c);
            }
            d.is_final(q)
        }
    };
    let elapsed = start.elapsed();
    assert!(matched, "(a|b)* must match a^n");
    Outcome::Done(elapsed)
}

fn median(mut xs: Vec<Duration>) -> Duration {
    xs.sort();
    xs[xs.len() / 2]
}

fn measure(suite: Suite, size: usize, reps: usize, limit: Option<Duration>) -> (String, u128) {
    let input = vec!['a'; size];
    let mut times = Vec::with_capacity(reps);
    for _ in 0..reps {
        match run_once(suite, &input, limit) {
            Outcome::Done(t) => times.push(t),
            Outcome::TimedOut(t) => return (format!("{}+timeout", suite.label()), t.as_nanos()),
        }
    }
    (suite.label().to_string(), median(times).as_nanos())
}

pub fn run(
    suites: &[Suite],
    sizes: &[usize],
    reps: usize,
    timeout_ms: u64,
    out: Option<&Path>,
) -> Result<u8, Failure> {
    if reps == 0 {
        return Err(Failure::input("--reps must be at least 1"));
    }
    let limit = (timeout_ms > 0).then(|| Duration::from_millis(timeout_ms));
    let suites = suites.to_vec();
    let sizes = sizes.to_vec();
    let rows = std::thread::Builder::new()
        .stack_size(STACK_BYTES)
        .spawn(move || {
            let mut rows = Vec::new();
            for suite in suites {
                for &size in &sizes {
                    let (label, ns) = measure(suite, size, reps, limit);
                    eprintln!("{size} {label} {ns}");
                    rows.push((size, label, ns));
                }
            }
            rows
        })
        .map_err(|e| Failure::input(format!("cannot start benchmark thread: {e}")))?
        .join()
        .map_err(|_| Failure::check("benchmark thread panicked"))?;
    let mut csv = String::from("size,backend,median_ns\n");
    for (size, label, ns) in rows {
        let _ = writeln!(csv, "{size},{label},{ns}");
    }
    match out {
        Some(p) => {
            std::fs::write(p, csv).map_err(|e| Failure::input(format!("{}: {e}", p.display())))?
        }
        None => print!("{csv}"),
    }
    Ok(0)
}
