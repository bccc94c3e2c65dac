//! Parser for polynomial expressions such as `x^2*y - 3*z + 1`.
//!
//! Variables are resolved against the ambient ring's names. The grammar is
//! sums of products of powers, with unary minus and parentheses.

use crate::poly::{PolyRing, Polynomial};
use crate::scalar::Scalar;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExprError {
    /// Byte offset into the input expression.
    pub pos: usize,
    pub msg: String,
}

impl fmt::Display for ExprError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at offset {}: {}", self.pos, self.msg)
    }
}

impl std::error::Error for ExprError {}

struct Lexer<'a> {
    input: &'a [u8],
    pos: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(i64),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    End,
}

impl<'a> Lexer<'a> {
    fn new(s: &'a str) -> Self {
        Lexer {
            input: s.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.input.len() && self.input[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn next(&mut self) -> Result<(usize, Tok), ExprError> {
        self.skip_ws();
        let start = self.pos;
        if self.pos >= self.input.len() {
            return Ok((start, Tok::End));
        }
        let c = self.input[self.pos];
        let tok = match c {
            b'+' => {
                self.pos += 1;
                Tok::Plus
            }
            b'-' => {
                self.pos += 1;
                Tok::Minus
            }
            b'*' => {
                self.pos += 1;
                Tok::Star
            }
            b'^' => {
                self.pos += 1;
                Tok::Caret
            }
            b'(' => {
                self.pos += 1;
                Tok::LParen
            }
            b')' => {
                self.pos += 1;
                Tok::RParen
            }
            c if c.is_ascii_digit() => {
                let mut n: i64 = 0;
                while self.pos < self.input.len() && self.input[self.pos].is_ascii_digit() {
                    n = n
                        .checked_mul(10)
                        .and_then(|n| n.checked_add((self.input[self.pos] - b'0') as i64))
                        .ok_or_else(|| ExprError {
                            pos: start,
                            msg: "integer literal too large".into(),
                        })?;
                    self.pos += 1;
                }
                Tok::Int(n)
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while self.pos < self.input.len()
                    && (self.input[self.pos].is_ascii_alphanumeric() || self.input[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                Tok::Ident(String::from_utf8_lossy(&self.input[start..self.pos]).into_owned())
            }
            c => {
                return Err(ExprError {
                    pos: start,
                    msg: format!("unexpected character '{}'", c as char),
                })
            }
        };
        Ok((start, tok))
    }
}

struct Parser<'a, F: Scalar> {
    ring: &'a PolyRing<F>,
    toks: Vec<(usize, Tok)>,
    idx: usize,
}

impl<'a, F: Scalar> Parser<'a, F> {
    fn peek(&self) -> &Tok {
        &self.toks[self.idx].1
    }

    fn pos(&self) -> usize {
        self.toks[self.idx].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.idx].1.clone();
        if self.idx + 1 < self.toks.len() {
            self.idx += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<Polynomial<F>, ExprError> {
        let mut negate = false;
        match self.peek() {
            Tok::Minus => {
                self.bump();
                negate = true;
            }
            Tok::Plus => {
                self.bump();
            }
            _ => {}
        }
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    let t = self.term()?;
                    acc = acc.add(&t);
                }
                Tok::Minus => {
                    self.bump();
                    let t = self.term()?;
                    acc = acc.sub(&t);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Polynomial<F>, ExprError> {
        let mut acc = self.factor()?;
        while matches!(self.peek(), Tok::Star) {
            self.bump();
            let f = self.factor()?;
            acc = acc.mul(&f);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial<F>, ExprError> {
        let base = self.atom()?;
        if matches!(self.peek(), Tok::Caret) {
            self.bump();
            let pos = self.pos();
            match self.bump() {
                Tok::Int(n) if n >= 0 => {
                    if n == 0 {
                        return Ok(self.ring.constant(1));
                    }
                    Ok(base.pow(n as u32))
                }
                _ => Err(ExprError {
                    pos,
                    msg: "expected a non-negative integer exponent".into(),
                }),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Polynomial<F>, ExprError> {
        let pos = self.pos();
        match self.bump() {
            Tok::Int(n) => Ok(self.ring.constant(n)),
            Tok::Ident(name) => match self.ring.var_names.iter().position(|v| *v == name) {
                Some(i) => Ok(self.ring.var(i)),
                None => Err(ExprError {
                    pos,
                    msg: format!("unknown variable '{name}'"),
                }),
            },
            Tok::Minus => {
                let inner = self.factor()?;
                Ok(inner.neg())
            }
            Tok::LParen => {
                let inner = self.expr()?;
                let pos = self.pos();
                match self.bump() {
                    Tok::RParen => Ok(inner),
                    _ => Err(ExprError {
                        pos,
                        msg: "expected ')'".into(),
                    }),
                }
            }
            t => Err(ExprError {
                pos,
                msg: format!("unexpected token {t:?}"),
            }),
        }
    }
}

/// Parse a polynomial expression in the given ring.
pub fn parse_poly<F: Scalar>(ring: &PolyRing<F>, input: &str) -> Result<Polynomial<F>, ExprError> {
    let mut lexer = Lexer::new(input);
    let mut toks = Vec::new();
    loop {
        let t = lexer.next()?;
        let is_end = t.1 == Tok::End;
        toks.push(t);
        if is_end {
            break;
        }
    }
    let mut p = Parser {
        ring,
        toks,
        idx: 0,
    };
    let poly = p.expr()?;
    if !matches!(p.peek(), Tok::End) {
        return Err(ExprError {
            pos: p.pos(),
            msg: "trailing input after expression".into(),
        });
    }
    Ok(poly)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{Fp, Rat};
    use std::sync::Arc;

    fn ring() -> Arc<PolyRing<Fp>> {
        PolyRing::new(vec!["x".into(), "y".into()], 5)
    }

    #[test]
    fn parses_standard_forms() {
        let r = ring();
        let f = parse_poly(&r, "x^2*y - 3*y + 1").unwrap();
        assert_eq!(f.to_string_in(&r), "x^2*y + 2*y + 1");
        let g = parse_poly(&r, "(x + y)^2").unwrap();
        assert_eq!(g.to_string_in(&r), "x^2 + 2*x*y + y^2");
        let z = parse_poly(&r, "0").unwrap();
        assert!(z.is_zero());
        let neg = parse_poly(&r, "-x").unwrap();
        assert_eq!(neg.to_string_in(&r), "4*x");
    }

    #[test]
    fn parse_round_trips_display() {
        let r: Arc<PolyRing<Rat>> = PolyRing::new(vec!["x".into(), "y".into()], ());
        let f = parse_poly(&r, "x^2 - y").unwrap();
        let again = parse_poly(&r, &f.to_string_in(&r)).unwrap();
        assert_eq!(f, again);
    }

    #[test]
    fn rejects_unknown_variable() {
        let r = ring();
        let err = parse_poly(&r, "x + w").unwrap_err();
        assert!(err.msg.contains("unknown variable"));
        assert_eq!(err.pos, 4);
    }
}
