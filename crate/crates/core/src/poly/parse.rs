//! Text grammar for polynomials.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary ('*' unary)*
//! unary  := ('+' | '-') unary | power
//! power  := atom ('^' integer)?
//! atom   := integer ('/' integer)? | variable | '(' expr ')'
//! ```
//!
//! Whitespace is ignored; juxtaposition such as `2x` is rejected.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::field::Field;

use super::multi::{MultiPoly, PolyRing};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(src: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '0'..='9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((start, Tok::Num(src[start..i].parse().unwrap())));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((start, Tok::Ident(src[start..i].to_string())));
                continue;
            }
            other => return Err(Error::Parse { pos: start, msg: format!("unexpected character '{other}'") }),
        };
        out.push((start, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser<'a, F: Field> {
    ring: &'a PolyRing<F>,
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl<F: Field> Parser<'_, F> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos: self.here(), msg: msg.into() })
    }

    fn expr(&mut self) -> Result<MultiPoly<F>> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<MultiPoly<F>> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    acc = &acc * &self.unary()?;
                }
                Some(Tok::Num(_)) | Some(Tok::Ident(_)) | Some(Tok::LParen) => {
                    return self.err("juxtaposition is not allowed; use '*'");
                }
                Some(Tok::Slash) => return self.err("division is only allowed inside a numeric literal a/b"),
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<MultiPoly<F>> {
        match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                Ok(-&self.unary()?)
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<MultiPoly<F>> {
        let base = self.atom()?;
        if self.peek() == Some(&Tok::Caret) {
            self.pos += 1;
            let e = match self.peek() {
                Some(Tok::Num(n)) => n.clone(),
                _ => return self.err("expected a non-negative integer exponent"),
            };
            let e: u32 = match u32::try_from(&e) {
                Ok(v) if v <= 10_000 => v,
                _ => return self.err("exponent too large"),
            };
            self.pos += 1;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<MultiPoly<F>> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                let mut den = BigInt::from(1);
                if self.peek() == Some(&Tok::Slash) {
                    self.pos += 1;
                    match self.peek() {
                        Some(Tok::Num(d)) => den = d.clone(),
                        _ => return self.err("expected an integer denominator"),
                    }
                    if den.is_zero() {
                        return self.err("zero denominator");
                    }
                    self.pos += 1;
                }
                let q = BigRational::new(n, den);
                let c = self.ring.field().from_rational(&q)?;
                Ok(self.ring.constant(c))
            }
            Some(Tok::Ident(name)) => match self.ring.var_index(&name) {
                Some(i) => {
                    self.pos += 1;
                    Ok(self.ring.var(i))
                }
                None => self.err(format!("unknown variable '{name}'")),
            },
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return self.err("expected ')'");
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(_) => self.err("expected a number, variable or '('"),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parses `src` into a polynomial of `ring`.
pub fn parse_poly<F: Field>(ring: &PolyRing<F>, src: &str) -> Result<MultiPoly<F>> {
    let toks = tokenize(src)?;
    let mut p = Parser { ring, toks, pos: 0, end: src.len() };
    if p.toks.is_empty() {
        return p.err("empty polynomial");
    }
    let out = p.expr()?;
    if p.pos != p.toks.len() {
        return p.err("unexpected trailing input");
    }
    Ok(out)
}
