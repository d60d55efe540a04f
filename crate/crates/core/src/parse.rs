//! Recursive-descent parser for the ASCII formula syntax.
//!
//! ```text
//! iff      ::= imp ("<->" imp)*
//! imp      ::= or ("->" imp)?
//! or       ::= and ("|" and)*
//! and      ::= temporal ("&" temporal)*
//! temporal ::= unary (("U" | "R") temporal)?
//! unary    ::= ("!" | "X" | "W" | "F" | "G") unary | atom
//! atom     ::= "true" | "false" | ident | "(" iff ")"
//! ```
//!
//! `F`, `G`, `->` and `<->` are desugared while parsing.

use std::str::FromStr;

use crate::error::{Error, Result};
use crate::syntax::{Formula, PropName};

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    True,
    False,
    Not,
    Next,
    WeakNext,
    Eventually,
    Always,
    Until,
    Release,
    And,
    Or,
    Implies,
    Iff,
    LParen,
    RParen,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("identifier `{s}`"),
            Tok::True => "`true`".into(),
            Tok::False => "`false`".into(),
            Tok::Not => "`!`".into(),
            Tok::Next => "`X`".into(),
            Tok::WeakNext => "`W`".into(),
            Tok::Eventually => "`F`".into(),
            Tok::Always => "`G`".into(),
            Tok::Until => "`U`".into(),
            Tok::Release => "`R`".into(),
            Tok::And => "`&`".into(),
            Tok::Or => "`|`".into(),
            Tok::Implies => "`->`".into(),
            Tok::Iff => "`<->`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let tok = match c {
            b'!' => Tok::Not,
            b'&' => Tok::And,
            b'|' => Tok::Or,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'-' if bytes.get(i + 1) == Some(&b'>') => {
                i += 1;
                Tok::Implies
            }
            b'<' if bytes.get(i + 1) == Some(&b'-') && bytes.get(i + 2) == Some(&b'>') => {
                i += 2;
                Tok::Iff
            }
            c if c.is_ascii_alphabetic() => {
                while i + 1 < bytes.len()
                    && (bytes[i + 1].is_ascii_alphanumeric() || bytes[i + 1] == b'_')
                {
                    i += 1;
                }
                match &text[start..=i] {
                    "true" => Tok::True,
                    "false" => Tok::False,
                    "X" => Tok::Next,
                    "W" => Tok::WeakNext,
                    "F" => Tok::Eventually,
                    "G" => Tok::Always,
                    "U" => Tok::Until,
                    "R" => Tok::Release,
                    s => Tok::Ident(s.to_owned()),
                }
            }
            _ => {
                let ch = text[start..].chars().next().unwrap_or('?');
                return Err(Error::Parse {
                    pos: start,
                    msg: format!("unknown token `{ch}`"),
                });
            }
        };
        i += 1;
        out.push((start, tok));
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(o, _)| *o)
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek() == Some(tok) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn error<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.offset(),
            msg: msg.into(),
        })
    }

    fn iff(&mut self) -> Result<Formula> {
        let mut lhs = self.imp()?;
        while self.eat(&Tok::Iff) {
            let rhs = self.imp()?;
            lhs = Formula::iff(lhs, rhs);
        }
        Ok(lhs)
    }

    fn imp(&mut self) -> Result<Formula> {
        let lhs = self.or()?;
        if self.eat(&Tok::Implies) {
            let rhs = self.imp()?;
            return Ok(Formula::implies(lhs, rhs));
        }
        Ok(lhs)
    }

    fn or(&mut self) -> Result<Formula> {
        let mut lhs = self.and()?;
        while self.eat(&Tok::Or) {
            lhs = Formula::or(lhs, self.and()?);
        }
        Ok(lhs)
    }

    fn and(&mut self) -> Result<Formula> {
        let mut lhs = self.temporal()?;
        while self.eat(&Tok::And) {
            lhs = Formula::and(lhs, self.temporal()?);
        }
        Ok(lhs)
    }

    fn temporal(&mut self) -> Result<Formula> {
        let lhs = self.unary()?;
        if self.eat(&Tok::Until) {
            return Ok(Formula::until(lhs, self.temporal()?));
        }
        if self.eat(&Tok::Release) {
            return Ok(Formula::release(lhs, self.temporal()?));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Formula> {
        let ctor: fn(Formula) -> Formula = match self.peek() {
            Some(Tok::Not) => Formula::not,
            Some(Tok::Next) => Formula::next,
            Some(Tok::WeakNext) => Formula::weak_next,
            Some(Tok::Eventually) => Formula::eventually,
            Some(Tok::Always) => Formula::always,
            _ => return self.atom(),
        };
        self.pos += 1;
        Ok(ctor(self.unary()?))
    }

    fn atom(&mut self) -> Result<Formula> {
        let Some(tok) = self.peek().cloned() else {
            return self.error("unexpected end of input");
        };
        let at = self.offset();
        self.pos += 1;
        match tok {
            Tok::True => Ok(Formula::True),
            Tok::False => Ok(Formula::False),
            Tok::Ident(name) => PropName::new(&name)
                .map(Formula::Atom)
                .map_err(|_| Error::Parse {
                    pos: at,
                    msg: format!("invalid proposition `{name}`"),
                }),
            Tok::LParen => {
                let inner = self.iff()?;
                if !self.eat(&Tok::RParen) {
                    return self.error("expected `)`");
                }
                Ok(inner)
            }
            other => Err(Error::Parse {
                pos: at,
                msg: format!("unexpected {}", other.describe()),
            }),
        }
    }
}

/// Parse a formula in the concrete ASCII syntax.
pub fn parse(text: &str) -> Result<Formula> {
    let mut p = Parser {
        toks: lex(text)?,
        pos: 0,
        end: text.len(),
    };
    let f = p.iff()?;
    if let Some(tok) = p.peek() {
        let msg = format!("unexpected {} after complete formula", tok.describe());
        return p.error(msg);
    }
    Ok(f)
}

impl FromStr for Formula {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a() -> Formula {
        Formula::atom("a")
    }
    fn b() -> Formula {
        Formula::atom("b")
    }
    fn c() -> Formula {
        Formula::atom("c")
    }

    #[test]
    fn grammar_examples() {
        assert_eq!(
            parse("a U (b R c)").unwrap(),
            Formula::until(a(), Formula::release(b(), c()))
        );
        assert_eq!(
            parse("F !a").unwrap(),
            Formula::until(Formula::True, Formula::not(a()))
        );
        assert_eq!(parse("G a").unwrap(), Formula::release(Formula::False, a()));
    }

    #[test]
    fn precedence_and_associativity() {
        assert_eq!(
            parse("a U b U c").unwrap(),
            Formula::until(a(), Formula::until(b(), c()))
        );
        assert_eq!(
            parse("a & b | c").unwrap(),
            Formula::or(Formula::and(a(), b()), c())
        );
        assert_eq!(
            parse("a | b & c").unwrap(),
            Formula::or(a(), Formula::and(b(), c()))
        );
        assert_eq!(
            parse("a & b & c").unwrap(),
            Formula::and(Formula::and(a(), b()), c())
        );
        assert_eq!(
            parse("!a U b").unwrap(),
            Formula::until(Formula::not(a()), b())
        );
        assert_eq!(
            parse("a U b & c").unwrap(),
            Formula::and(Formula::until(a(), b()), c())
        );
        assert_eq!(
            parse("a -> b -> c").unwrap(),
            Formula::implies(a(), Formula::implies(b(), c()))
        );
        assert_eq!(parse("a <-> b").unwrap(), Formula::iff(a(), b()));
        assert_eq!(parse(" ( ( a ) ) ").unwrap(), a());
        assert_eq!(
            parse("X W !a").unwrap(),
            Formula::next(Formula::weak_next(Formula::not(a())))
        );
    }

    #[test]
    fn identifiers_may_start_with_operator_letters() {
        assert_eq!(parse("Xa").unwrap(), Formula::atom("Xa"));
        assert_eq!(parse("trueish").unwrap(), Formula::atom("trueish"));
        assert_eq!(parse("p_1 & q2").unwrap(), Formula::and(Formula::atom("p_1"), Formula::atom("q2")));
    }

    #[test]
    fn errors_carry_positions() {
        assert_eq!(
            parse("a & ").unwrap_err(),
            Error::Parse { pos: 4, msg: "unexpected end of input".into() }
        );
        match parse("a # b").unwrap_err() {
            Error::Parse { pos, msg } => {
                assert_eq!(pos, 2);
                assert!(msg.contains("unknown token"));
            }
            e => panic!("{e:?}"),
        }
        assert!(matches!(parse("(a"), Err(Error::Parse { pos: 2, .. })));
        assert!(matches!(parse("a b"), Err(Error::Parse { pos: 2, .. })));
        assert!(matches!(parse("U a"), Err(Error::Parse { pos: 0, .. })));
        assert!(matches!(parse(""), Err(Error::Parse { pos: 0, .. })));
        assert!(matches!(parse("a - b"), Err(Error::Parse { pos: 2, .. })));
    }
}
