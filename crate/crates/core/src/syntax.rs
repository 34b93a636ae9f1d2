//! Textual regex syntax over Unicode scalar values.
//!
//! ```text
//! alt     := concat ('|' concat)*
//! concat  := postfix+
//! postfix := atom '*'*
//! atom    := '(' alt ')' | '%e' | '%0' | '\' meta | any other character
//! meta    := '|' | '*' | '(' | ')' | '\' | '%'
//! ```
//!
//! `%e` is the empty string and `%0` the empty language. Alternation and
//! concatenation associate to the left.

use std::fmt;

use crate::regex::Regex;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("regex syntax error at position {position}: {kind}")]
pub struct SyntaxError {
    /// Character (not byte) offset.
    pub position: usize,
    pub kind: SyntaxErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SyntaxErrorKind {
    UnclosedGroup,
    UnexpectedCloseParen,
    TrailingEscape,
    InvalidEscape(char),
    BadPercent,
    DanglingStar,
    EmptyBranch,
}

impl fmt::Display for SyntaxErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SyntaxErrorKind::UnclosedGroup => write!(f, "unclosed '('"),
            SyntaxErrorKind::UnexpectedCloseParen => write!(f, "unbalanced ')'"),
            SyntaxErrorKind::TrailingEscape => write!(f, "'\\' at end of input"),
            SyntaxErrorKind::InvalidEscape(c) => write!(f, "cannot escape {c:?}"),
            SyntaxErrorKind::BadPercent => write!(f, "'%' must be followed by 'e' or '0'"),
            SyntaxErrorKind::DanglingStar => write!(f, "'*' has nothing to repeat"),
            SyntaxErrorKind::EmptyBranch => {
                write!(f, "empty expression (write %e for the empty string)")
            }
        }
    }
}

const META: [char; 6] = ['|', '*', '(', ')', '\\', '%'];

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn error(&self, kind: SyntaxErrorKind) -> SyntaxError {
        SyntaxError {
            position: self.pos,
            kind,
        }
    }

    fn alt(&mut self) -> Result<Regex<char>, SyntaxError> {
        let mut left = self.concat()?;
        while self.peek() == Some('|') {
            self.pos += 1;
            left = Regex::union(left, self.concat()?);
        }
        Ok(left)
    }

    fn concat(&mut self) -> Result<Regex<char>, SyntaxError> {
        let mut acc: Option<Regex<char>> = None;
        while let Some(c) = self.peek() {
            if c == '|' || c == ')' {
                break;
            }
            let item = self.postfix()?;
            acc = Some(match acc {
                None => item,
                Some(left) => Regex::concat(left, item),
            });
        }
        acc.ok_or_else(|| self.error(SyntaxErrorKind::EmptyBranch))
    }

    fn postfix(&mut self) -> Result<Regex<char>, SyntaxError> {
        let mut r = self.atom()?;
        while self.peek() == Some('*') {
            self.pos += 1;
            r = Regex::star(r);
        }
        Ok(r)
    }

    fn atom(&mut self) -> Result<Regex<char>, SyntaxError> {
        let c = self
            .peek()
            .ok_or_else(|| self.error(SyntaxErrorKind::EmptyBranch))?;
        match c {
            '(' => {
                let open = self.pos;
                self.pos += 1;
                let inner = self.alt()?;
                if self.peek() != Some(')') {
                    return Err(SyntaxError {
                        position: open,
                        kind: SyntaxErrorKind::UnclosedGroup,
                    });
                }
                self.pos += 1;
                Ok(inner)
            }
            '*' => Err(self.error(SyntaxErrorKind::DanglingStar)),
            '%' => {
                let r = match self.chars.get(self.pos + 1) {
                    Some('e') => Regex::EmptyExpr,
                    Some('0') => Regex::EmptyLang,
                    _ => return Err(self.error(SyntaxErrorKind::BadPercent)),
                };
                self.pos += 2;
                Ok(r)
            }
            '\\' => match self.chars.get(self.pos + 1) {
                None => Err(self.error(SyntaxErrorKind::TrailingEscape)),
                Some(&e) if META.contains(&e) => {
                    self.pos += 2;
                    Ok(Regex::ElementMatch(e))
                }
                Some(&e) => Err(self.error(SyntaxErrorKind::InvalidEscape(e))),
            },
            _ => {
                self.pos += 1;
                Ok(Regex::ElementMatch(c))
            }
        }
    }
}

pub fn parse_regex_syntax(text: &str) -> Result<Regex<char>, SyntaxError> {
    let mut parser = Parser {
        chars: text.chars().collect(),
        pos: 0,
    };
    let r = parser.alt()?;
    match parser.peek() {
        None => Ok(r),
        Some(')') => Err(parser.error(SyntaxErrorKind::UnexpectedCloseParen)),
        // `alt` only stops at ')' or the end of input.
        Some(_) => unreachable!("parser stopped early"),
    }
}

/// Text that parses back to exactly `r`.
pub fn render_regex(r: &Regex<char>) -> String {
    let mut out = String::new();
    render_into(r, 0, &mut out);
    out
}

// Precedence levels: 0 alternation, 1 concatenation, 2 postfix/atom.
fn render_into(r: &Regex<char>, level: u8, out: &mut String) {
    match r {
        Regex::EmptyLang => out.push_str("%0"),
        Regex::EmptyExpr => out.push_str("%e"),
        Regex::ElementMatch(c) => {
            if META.contains(c) {
                out.push('\\');
            }
            out.push(*c);
        }
        Regex::Union(l, rr) => {
            wrap(level > 0, out, |out| {
                render_into(l, 0, out);
                out.push('|');
                render_into(rr, 1, out);
            });
        }
        Regex::Concat(l, rr) => {
            wrap(level > 1, out, |out| {
                render_into(l, 1, out);
                render_into(rr, 2, out);
            });
        }
        Regex::Star(inner) => {
            render_into(inner, 2, out);
            out.push('*');
        }
    }
}

fn wrap(parens: bool, out: &mut String, body: impl FnOnce(&mut String)) {
    if parens {
        out.push('(');
    }
    body(out);
    if parens {
        out.push(')');
    }
}
