mod bench;
mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

/// Exit codes: 0 success, 1 failed check or assertion, 2 bad input, 3
/// partial lex.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn check(message: impl Into<String>) -> Self {
        Failure {
            code: 1,
            message: message.into(),
        }
    }

    pub fn input(message: impl ToString) -> Self {
        Failure {
            code: 2,
            message: message.to_string(),
        }
    }
}

#[derive(Parser)]
#[command(name = "invlex", version, about = "Invertible maximal-munch lexing")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Backend {
    /// Plain Brzozowski derivatives.
    Regex,
    /// Memoized derivatives.
    RegexMemo,
    /// Plain derivatives, additionally checking every token against the
    /// zipper matcher (zippers have no longest-match mode of their own).
    ZipperCheck,
    /// DFA simulation; every rule must be a DFA rule.
    Dfa,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    /// Concatenate the tokens.
    Plain,
    /// Separator after every token.
    SepAlways,
    /// Separator only where re-lexing would otherwise differ.
    SepWhenNeeded,
}

#[derive(Clone, Debug, clap::Args)]
pub struct SeparatorArgs {
    /// Tag of the separator token (defaults to the token file header).
    #[arg(long)]
    sep_tag: Option<String>,
    /// Characters of the separator token (defaults to the token file header).
    #[arg(long)]
    sep_chars: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a rule file.
    Check { rules: PathBuf },
    /// Lex a text file into a token file.
    Lex {
        rules: PathBuf,
        input: PathBuf,
        #[arg(long, value_enum, default_value = "regex")]
        backend: Backend,
        /// Token file to write; a non-empty unlexed suffix goes to `<out>.suffix`.
        #[arg(long)]
        out: PathBuf,
    },
    /// Print a token file back to text.
    Print {
        rules: PathBuf,
        tokens: PathBuf,
        #[arg(long, value_enum, default_value = "plain")]
        mode: Mode,
        #[command(flatten)]
        sep: SeparatorArgs,
        /// Output file (stdout if absent).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a round trip on one instance.
    Roundtrip {
        rules: PathBuf,
        /// Text file: lex, print, compare with the input.
        #[arg(long, conflicts_with = "tokens", required_unless_present = "tokens")]
        input: Option<PathBuf>,
        /// Token file: print, lex, compare with the tokens.
        #[arg(long)]
        tokens: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "plain")]
        mode: Mode,
        #[command(flatten)]
        sep: SeparatorArgs,
    },
    /// Time full matches of (a|b)* against a^n. CSV columns:
    /// size,backend,median_ns. A run that exceeds the timeout is reported
    /// as `<backend>+timeout` with the elapsed time as a lower bound.
    Bench {
        #[arg(
            long,
            value_enum,
            value_delimiter = ',',
            default_value = "derivatives,zipper,memo,dfa"
        )]
        suite: Vec<bench::Suite>,
        #[arg(long, value_delimiter = ',', default_value = "1000,2000,4000,8000")]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 5)]
        reps: usize,
        /// Per-run time limit in milliseconds; 0 disables it.
        #[arg(long, default_value_t = 10_000)]
        timeout_ms: u64,
        /// CSV file (stdout if absent).
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let result = match cli.command {
        Command::Check { rules } => commands::check(&rules),
        Command::Lex {
            rules,
            input,
            backend,
            out,
        } => commands::lex(&rules, &input, backend, &out),
        Command::Print {
            rules,
            tokens,
            mode,
            sep,
            out,
        } => commands::print(&rules, &tokens, mode, &sep, out.as_deref()),
        Command::Roundtrip {
            rules,
            input,
            tokens,
            mode,
            sep,
        } => commands::roundtrip(&rules, input.as_deref(), tokens.as_deref(), mode, &sep),
        Command::Bench {
            suite,
            sizes,
            reps,
            timeout_ms,
            out,
        } => bench::run(&suite, &sizes, reps, timeout_ms, out.as_deref()),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("{}", f.message);
            ExitCode::from(f.code)
        }
    }
}
