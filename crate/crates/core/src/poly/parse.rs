//! Recursive-descent parser for the polynomial text grammar:
//!
//! ```text
//! poly   := ['-'] term { ('+'|'-') term }
//! term   := coeff { '*' factor } | factor { '*' factor }
//! coeff  := int [ '/' int ]
//! factor := var [ '^' uint ]
//! var    := 'x[' uint ',' uint ']' | 'y[' uint ',' uint ']' | 't' uint
//! ```

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{Monomial, Poly, Rational, Ring, Var};
use crate::error::{Error, Result};

struct Parser<'a> {
    ring: Ring,
    src: &'a str,
    bytes: &'a [u8],
    pos: usize,
}

pub(super) fn parse(ring: Ring, src: &str) -> Result<Poly> {
    let mut p = Parser { ring, src, bytes: src.as_bytes(), pos: 0 };
    let poly = p.poly()?;
    p.skip_ws();
    if p.pos != p.bytes.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(poly)
}

impl Parser<'_> {
    fn error(&self, message: &str) -> Error {
        let before = &self.src[..self.pos.min(self.src.len())];
        let line = before.matches('\n').count() + 1;
        let column = before.rfind('\n').map_or(before.len(), |i| before.len() - i - 1) + 1;
        Error::Syntax { line, column, message: message.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&format!("expected `{}`", c as char)))
        }
    }

    fn uint(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer"));
        }
        Ok(self.src[start..self.pos].parse().expect("digits"))
    }

    fn small_uint(&mut self) -> Result<usize> {
        let start = self.pos;
        let n = self.uint()?;
        usize::try_from(n).map_err(|_| {
            self.pos = start;
            self.error("integer too large")
        })
    }

    fn poly(&mut self) -> Result<Poly> {
        let mut terms: Vec<(Monomial, Rational)> = Vec::new();
        let mut sign = if self.eat(b'-') { -Rational::one() } else { Rational::one() };
        loop {
            if let Some((m, c)) = self.term()? {
                terms.push((m, sign * c));
            }
            if self.eat(b'+') {
                sign = Rational::one();
            } else if self.eat(b'-') {
                sign = -Rational::one();
            } else {
                break;
            }
        }
        Ok(Poly::from_terms(self.ring, terms))
    }

    /// Returns `None` for a term that normalizes to zero (`y[a,a]`).
    fn term(&mut self) -> Result<Option<(Monomial, Rational)>> {
        let n = self.ring.nvars();
        let mut mono = Monomial::one(n);
        let mut coeff = Rational::one();
        let mut zero = false;
        let mut need_factor = match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let num = self.uint()?;
                let den = if self.eat(b'/') {
                    let d = self.uint()?;
                    if d.is_zero() {
                        return Err(self.error("zero denominator"));
                    }
                    d
                } else {
                    BigInt::one()
                };
                coeff = Rational::new(num, den);
                false
            }
            _ => true,
        };
        loop {
            if need_factor {
                let var = self.var()?;
                let exp = if self.eat(b'^') { self.small_uint()? } else { 1 };
                let exp16 = u16::try_from(exp).map_err(|_| self.error("exponent too large"))?;
                match var {
                    Some((idx, negate)) => {
                        mono = mono.mul(&Monomial::var(n, idx).pow(u32::from(exp16)));
                        if negate && exp % 2 == 1 {
                            coeff = -coeff;
                        }
                    }
                    // y[a,a] vanishes unless raised to the zeroth power
                    None => zero |= exp > 0,
                }
            }
            if self.eat(b'*') {
                need_factor = true;
            } else {
                break;
            }
        }
        Ok(if zero || coeff.is_zero() { None } else { Some((mono, coeff)) })
    }

    /// Parses a variable, returning its index and whether the canonical
    /// coordinate enters with a minus sign. `None` means the variable is
    /// identically zero.
    fn var(&mut self) -> Result<Option<(usize, bool)>> {
        let start = self.pos;
        match self.peek() {
            Some(b'x') | Some(b'y') => {
                let is_x = self.bytes[self.pos] == b'x';
                self.pos += 1;
                self.expect(b'[')?;
                let i = self.small_uint()?;
                self.expect(b',')?;
                let j = self.small_uint()?;
                self.expect(b']')?;
                let index_err = |p: &Self, msg: String| {
                    let mut e = p.error("");
                    if let Error::Syntax { line, column, .. } = e {
                        e = Error::Index(format!("{msg} at line {line}, column {column}"));
                    }
                    e
                };
                if i == 0 || j == 0 {
                    self.pos = start;
                    return Err(index_err(self, "indices are 1-based".into()));
                }
                if is_x {
                    let v = Var::X(i.min(j), i.max(j));
                    self.ring.index(v).map(|k| Some((k, false))).map_err(|e| {
                        self.pos = start;
                        index_err(self, e.to_string())
                    })
                } else {
                    if i == j {
                        if i > self.ring.skew {
                            self.pos = start;
                            return Err(index_err(self, format!("y[{i},{j}] out of range")));
                        }
                        return Ok(None);
                    }
                    let v = Var::Y(i.min(j), i.max(j));
                    self.ring.index(v).map(|k| Some((k, i > j))).map_err(|e| {
                        self.pos = start;
                        index_err(self, e.to_string())
                    })
                }
            }
            Some(b't') => {
                self.pos += 1;
                if !self.bytes.get(self.pos).is_some_and(u8::is_ascii_digit) {
                    return Err(self.error("expected index after `t`"));
                }
                let k = self.small_uint()?;
                self.ring.index(Var::T(k)).map(|k| Some((k, false))).map_err(|e| {
                    self.pos = start;
                    Error::Index(e.to_string())
                })
            }
            _ => Err(self.error("expected a coefficient or variable")),
        }
    }
}
