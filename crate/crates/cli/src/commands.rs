use std::fs;
use std::path::{Path, PathBuf};

use invlex::io::{self, TokenFile};
use invlex::lexer::{
    lex_traced, rules_invariant_violations, Derivatives, Matcher, Memoized, RuleSet,
};
use invlex::printer::{sep_nonsep_overlaps, validate, SeparatorPolicy};
use invlex::regex::match_r;
use invlex::zipper::{match_zipper, to_zipper};
use invlex::{RuleError, Token};

use crate::{Backend, Failure, Mode, SeparatorArgs};

fn read_text(path: &Path) -> Result<Vec<char>, Failure> {
    fs::read_to_string(path)
        .map(|t| t.chars().collect())
        .map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn write_text(path: Option<&Path>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| Failure::input(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn chars(c: &[char]) -> String {
    c.iter().collect()
}

pub fn check(rules_path: &Path) -> Result<u8, Failure> {
    let rules = io::read_rules(rules_path).map_err(Failure::input)?;
    let mut failures = Vec::new();
    for err in rules_invariant_violations(&rules) {
        failures.push(match &err {
            RuleError::DuplicateTag { .. } => format!("duplicate tag: {err}"),
            RuleError::Nullable { .. } => format!("nullable: {err}"),
            RuleError::InvalidMatcher { .. } => format!("invalid: {err}"),
            RuleError::EmptyTag { .. } => format!("empty tag: {err}"),
            RuleError::Empty => format!("empty: {err}"),
        });
    }
    for o in sep_nonsep_overlaps(&rules) {
        let shared: Vec<String> = o.shared.iter().map(|c| format!("{c:?}")).collect();
        failures.push(format!(
            "separator overlap: separator rule {} ({:?}) and rule {} ({:?}) share {}",
            o.separator_rule,
            o.separator_tag,
            o.other_rule,
            o.other_tag,
            shared.join(", ")
        ));
    }
    for (i, rule) in rules.iter().enumerate() {
        let kind = match rule.matcher() {
            Matcher::Regex(_) => "regex",
            Matcher::Dfa(_) => "dfa",
        };
        let role = if rule.is_separator() {
            "separator"
        } else {
            "token"
        };
        let status = if rule.is_valid() { "ok" } else { "invalid" };
        println!(
            "rule {i} {:?}: {kind}, {role}, nullable={}, {status}",
            rule.tag(),
            rule.matcher().is_nullable()
        );
    }
    if failures.is_empty() {
        println!("all checks passed");
        Ok(0)
    } else {
        for f in &failures {
            println!("CHECK-FAIL: {f}");
        }
        Ok(1)
    }
}

fn load_rules(path: &Path) -> Result<RuleSet<char>, Failure> {
    io::load_rules(path).map_err(Failure::input)
}

fn lex_with_backend(
    rules: &RuleSet<char>,
    input: &[char],
    backend: Backend,
) -> Result<(Vec<Token<char>>, Vec<char>), Failure> {
    let is_dfa = |m: &Matcher<char>| matches!(m, Matcher::Dfa(_));
    if backend == Backend::Dfa {
        if let Some((i, r)) = rules
            .rules()
            .iter()
            .enumerate()
            .find(|(_, r)| !is_dfa(r.matcher()))
        {
            return Err(Failure::input(format!(
                "the dfa backend needs DFA rules, but rule {i} ({:?}) is a regex",
                r.tag()
            )));
        }
    }
    let (tokens, indices, rest) = match backend {
        Backend::Regex | Backend::Dfa | Backend::ZipperCheck => {
            lex_traced(&mut Derivatives, rules, input)
        }
        Backend::RegexMemo => lex_traced(&mut Memoized::default(), rules, input),
    };
    if backend == Backend::ZipperCheck {
        for (k, (t, &i)) in tokens.iter().zip(&indices).enumerate() {
            for (j, rule) in rules.rules().iter().enumerate() {
                let Matcher::Regex(r) = rule.matcher() else {
                    continue;
                };
                let zipper = match_zipper(&to_zipper(r), &t.characters);
                if zipper != match_r(r, &t.characters) || (j == i && !zipper) {
                    return Err(Failure::check(format!(
                        "zipper disagrees with derivatives on token {k} ({:?}) for rule {j} ({:?})",
                        t.text(),
                        rule.tag()
                    )));
                }
            }
        }
    }
    Ok((tokens, rest))
}

fn sidecar(out: &Path) -> PathBuf {
    let mut name = out.as_os_str().to_owned();
    name.push(".suffix");
    PathBuf::from(name)
}

pub fn lex(
    rules_path: &Path,
    input_path: &Path,
    backend: Backend,
    out: &Path,
) -> Result<u8, Failure> {
    let rules = load_rules(rules_path)?;
    let input = read_text(input_path)?;
    let (tokens, rest) = lex_with_backend(&rules, &input, backend)?;
    let file = TokenFile {
        tokens,
        separator: None,
    };
    io::save_tokens(&file, out).map_err(|e| Failure::input(format!("{}: {e}", out.display())))?;
    println!("{} tokens", file.tokens.len());
    println!("suffix length: {}", rest.len());
    if rest.is_empty() {
        Ok(0)
    } else {
        let path = sidecar(out);
        write_text(Some(&path), &chars(&rest))?;
        eprintln!("unlexed suffix written to {}", path.display());
        Ok(3)
    }
}

fn separator_token(
    args: &SeparatorArgs,
    header: Option<&Token<char>>,
) -> Result<Token<char>, Failure> {
    let tag = args
        .sep_tag
        .clone()
        .or_else(|| header.map(|t| t.tag.clone()))
        .ok_or_else(|| {
            Failure::input("no separator tag: pass --sep-tag or add a separator header")
        })?;
    let characters: Vec<char> = match (&args.sep_chars, header) {
        (Some(text), _) => text.chars().collect(),
        (None, Some(t)) => t.characters.clone(),
        (None, None) => {
            return Err(Failure::input(
                "no separator characters: pass --sep-chars or add a separator header",
            ))
        }
    };
    if characters.is_empty() {
        return Err(Failure::input("separator characters are empty"));
    }
    Ok(Token::new(characters, tag, true))
}

/// Resolves the print policy, checking every precondition of the separator
/// modes. Violations are reported one per line.
fn policy(
    rules: &RuleSet<char>,
    tokens: &[Token<char>],
    mode: Mode,
    args: &SeparatorArgs,
    header: Option<&Token<char>>,
) -> Result<SeparatorPolicy<char>, Failure> {
    if mode == Mode::Plain {
        return Ok(SeparatorPolicy::NoSeparator);
    }
    let sep = separator_token(args, header)?;
    let mut problems = Vec::new();
    match rules.get_by_tag(&sep.tag) {
        None => problems.push(format!("no rule has the separator tag {:?}", sep.tag)),
        Some(rule) if !rule.is_separator() => {
            problems.push(format!("rule {:?} is not a separator rule", sep.tag))
        }
        Some(_) => {}
    }
    if let Err(e) = validate(rules, tokens, &sep) {
        problems.extend(e.violations.iter().map(ToString::to_string));
    }
    if !problems.is_empty() {
        let lines: Vec<String> = problems
            .iter()
            .map(|p| format!("PRECONDITION: {p}"))
            .collect();
        return Err(Failure::check(lines.join("\n")));
    }
    Ok(match mode {
        Mode::SepAlways => SeparatorPolicy::Always(sep),
        _ => SeparatorPolicy::WhenNeeded(rules.clone(), sep),
    })
}

pub fn print(
    rules_path: &Path,
    tokens_path: &Path,
    mode: Mode,
    args: &SeparatorArgs,
    out: Option<&Path>,
) -> Result<u8, Failure> {
    let rules = load_rules(rules_path)?;
    let file = io::load_tokens(tokens_path).map_err(Failure::input)?;
    let policy = policy(&rules, &file.tokens, mode, args, file.separator.as_ref())?;
    let printed = policy
        .print(&file.tokens)
        .map_err(|e| Failure::check(e.to_string()))?;
    write_text(out, &chars(&printed))?;
    Ok(0)
}

pub fn roundtrip(
    rules_path: &Path,
    input: Option<&Path>,
    tokens: Option<&Path>,
    mode: Mode,
    args: &SeparatorArgs,
) -> Result<u8, Failure> {
    let rules = load_rules(rules_path)?;
    match (input, tokens) {
        (Some(path), _) => {
            let text = read_text(path)?;
            let (lexed, rest) = invlex::lex(&rules, &text);
            let mut printed = invlex::print(&lexed);
            printed.extend_from_slice(&rest);
            if let Some(i) = first_difference(&printed, &text) {
                return Err(Failure::check(format!("MISMATCH at character {i}")));
            }
            println!(
                "round trip holds: {} tokens, suffix length {}",
                lexed.len(),
                rest.len()
            );
            Ok(0)
        }
        (None, Some(path)) => {
            let file = io::load_tokens(path).map_err(Failure::input)?;
            let policy = policy(&rules, &file.tokens, mode, args, file.separator.as_ref())?;
            let printed = policy
                .print(&file.tokens)
                .map_err(|e| Failure::check(e.to_string()))?;
            let (relexed, rest) = invlex::lex(&rules, &printed);
            let kept: Vec<Token<char>> = relexed.into_iter().filter(|t| !t.is_separator).collect();
            if let Some(i) = first_difference(&kept, &file.tokens) {
                let show = |t: Option<&Token<char>>| {
                    t.map_or("nothing".to_string(), |t| {
                        format!("({:?}, {:?})", t.text(), t.tag)
                    })
                };
                return Err(Failure::check(format!(
                    "MISMATCH at token {i}: expected {}, got {}",
                    show(file.tokens.get(i)),
                    show(kept.get(i))
                )));
            }
            if !rest.is_empty() {
                return Err(Failure::check(format!(
                    "MISMATCH: {} characters left unlexed after printing",
                    rest.len()
                )));
            }
            println!("round trip holds: {} tokens", kept.len());
            Ok(0)
        }
        (None, None) => Err(Failure::input("pass --input or --tokens")),
    }
}

fn first_difference<T: PartialEq>(a: &[T], b: &[T]) -> Option<usize> {
    let common = a.iter().zip(b).take_while(|(x, y)| x == y).count();
    (common < a.len().max(b.len())).then_some(common)
}
