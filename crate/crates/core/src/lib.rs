//! Invertible maximal-munch lexing.
//!
//! Regexes are matched with Brzozowski derivatives ([`regex`]), optionally
//! memoized ([`memo`]) or through zippers ([`zipper`]); DFAs ([`dfa`]) are
//! an alternative matcher for lexer rules. The [`lexer`] implements maximal
//! munch with first-rule priority, and [`printer`] turns tokens back into
//! characters such that lexing the output gives the tokens back.

pub mod dfa;
pub mod io;
pub mod lang;
pub mod lexer;
pub mod memo;
pub mod printer;
pub mod regex;
pub mod syntax;
pub mod zipper;

pub use dfa::{Dfa, DfaError, DfaTransition, StateId};
pub use lexer::{lex, Matcher, Rule, RuleError, RuleSet, Token};
pub use memo::DerivativeCache;
pub use printer::{print, PrintError, SeparatorPolicy};
pub use regex::{MatchSplit, Regex, Symbol};
pub use zipper::{Context, Zipper};
