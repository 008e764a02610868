//! A small recursive-descent parser for polynomial expressions.
//!
//! Grammar: sums/differences of products of powers, with integer or rational
//! coefficients (`3`, `1/2`), explicit `*`, `^` with nonnegative integer
//! exponents, and parentheses.  Variables must come from the supplied ring.

use super::{Polynomial, Vars};
use crate::error::{Error, Result};
use crate::scalar::{rat, Rat};

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    vars: &'a Vars,
}

pub fn parse_poly(s: &str, vars: &Vars) -> Result<Polynomial> {
    let mut p = Parser { src: s.as_bytes(), pos: 0, vars };
    let poly = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(Error::structural(format!(
            "trailing input at byte {} of {s:?}",
            p.pos
        )));
    }
    Ok(poly)
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek()?;
        self.pos += 1;
        Some(c)
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.bump();
                self.term()?.neg()
            }
            Some(b'+') => {
                self.bump();
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.bump();
                    acc = acc.add(&self.term()?);
                }
                Some(b'-') => {
                    self.bump();
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.power()?;
        while let Some(b'*') = self.peek() {
            self.bump();
            acc = acc.mul(&self.power()?);
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if let Some(b'^') = self.peek() {
            self.bump();
            let n = self.integer()?;
            let n: u32 = n
                .try_into()
                .map_err(|_| Error::structural("exponent out of range"))?;
            return Ok(base.pow(n));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Some(b'(') => {
                self.bump();
                let inner = self.expr()?;
                match self.bump() {
                    Some(b')') => Ok(inner),
                    _ => Err(Error::structural("expected ')'")),
                }
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                if let Some(b'/') = self.peek() {
                    self.bump();
                    let d = self.integer()?;
                    if d == 0 {
                        return Err(Error::structural("zero denominator"));
                    }
                    return Ok(Polynomial::constant(
                        self.vars,
                        Rat::new(n.into(), d.into()),
                    ));
                }
                Ok(Polynomial::constant(self.vars, rat(n)))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let name = self.ident();
                match self.vars.index(&name) {
                    Some(i) => Ok(Polynomial::var(self.vars, i)),
                    None => Err(Error::structural(format!(
                        "unknown variable {name:?} (ring is [{}])",
                        self.vars.joined()
                    ))),
                }
            }
            other => Err(Error::structural(format!(
                "unexpected token {:?} in polynomial",
                other.map(|c| c as char)
            ))),
        }
    }

    fn integer(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(Error::structural("expected integer"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| Error::structural("integer literal too large"))
    }

    fn ident(&mut self) -> String {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len()
            && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
        {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }
}

/// Parse a vector of rationals given as strings (used for units and tables).
pub fn parse_rat_vec(strings: &[String]) -> Result<Vec<Rat>> {
    strings.iter().map(|s| crate::scalar::parse_rat(s)).collect()
}
