//! Parser for the textual polynomial format, e.g. `3*x1^2*x2 - 1/2*x3`.

use num_bigint::BigInt;

use super::{MultiPoly, PolyError};
use crate::symq::{rat_int, Rational};

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(s: &'a str) -> Self {
        Cursor {
            bytes: s.as_bytes(),
            pos: 0,
        }
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

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek()?;
        self.pos += 1;
        Some(c)
    }

    fn err(&self, message: impl Into<String>) -> PolyError {
        PolyError::Parse {
            offset: self.pos,
            message: message.into(),
        }
    }

    fn integer(&mut self) -> Result<BigInt, PolyError> {
        self.skip_ws();
        let start = self.pos;
        while self
            .bytes
            .get(self.pos)
            .is_some_and(|b| b.is_ascii_digit())
        {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected digits"));
        }
        let s = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
        Ok(s.parse().unwrap())
    }
}

/// Parses a polynomial in variables `x1..x{dim}` with rational coefficients.
pub fn parse_poly(input: &str, dim: usize) -> Result<MultiPoly, PolyError> {
    let mut cur = Cursor::new(input);
    let mut poly = MultiPoly::zero(dim);
    let mut first = true;
    loop {
        let sign = match cur.peek() {
            None if first => return Err(cur.err("empty polynomial")),
            None => break,
            Some(b'+') => {
                cur.bump();
                1
            }
            Some(b'-') => {
                cur.bump();
                -1
            }
            Some(_) if first => 1,
            Some(_) => return Err(cur.err("expected '+' or '-' between terms")),
        };
        first = false;
        poly = poly.add(&parse_term(&mut cur, dim, sign)?);
    }
    Ok(poly)
}

fn parse_term(cur: &mut Cursor, dim: usize, sign: i64) -> Result<MultiPoly, PolyError> {
    let mut coeff: Rational = rat_int(sign);
    let mut alpha = vec![0u32; dim];
    loop {
        match cur.peek() {
            Some(b'0'..=b'9') => {
                let n = cur.integer()?;
                let mut value = Rational::from_integer(n);
                if cur.peek() == Some(b'/') {
                    cur.bump();
                    let d = cur.integer()?;
                    if d == BigInt::from(0) {
                        return Err(cur.err("zero denominator"));
                    }
                    value /= Rational::from_integer(d);
                }
                coeff *= value;
            }
            Some(b'x') => {
                cur.bump();
                let idx = cur.integer()?;
                let j: usize = idx
                    .try_into()
                    .ok()
                    .filter(|&j: &usize| j >= 1 && j <= dim)
                    .ok_or_else(|| cur.err(format!("variable index out of range 1..={dim}")))?;
                let mut exp = 1u32;
                if cur.peek() == Some(b'^') {
                    cur.bump();
                    let e = cur.integer()?;
                    exp = e
                        .try_into()
                        .map_err(|_| cur.err("exponent too large"))?;
                }
                alpha[j - 1] += exp;
            }
            _ => return Err(cur.err("expected a coefficient or variable")),
        }
        match cur.peek() {
            Some(b'*') => {
                cur.bump();
            }
            Some(b'+') | Some(b'-') | None => break,
            Some(b'x') | Some(b'0'..=b'9') => {
                // juxtaposition without '*' also reads naturally
            }
            Some(_) => return Err(cur.err("unexpected character in term")),
        }
    }
    Ok(MultiPoly::monomial(dim, alpha, coeff))
}
