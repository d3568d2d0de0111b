//! Recursive-descent parser for polynomial expressions in `t`.
//!
//! Accepted syntax (whitespace ignored):
//!
//! ```text
//! expr   := sign? term (('+' | '-') term)*
//! term   := factor ('*'? factor)*
//! factor := '-' factor | atom ('^' int)?
//! atom   := int ('/' posint)? | 't' | '(' expr ')'
//! ```
//!
//! Negative exponents are allowed on monomials (`t^-2`, `(2t)^-1`).

use super::laurent::LaurentPoly;
use super::qpoly::Rational;
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Zero};

pub fn parse_poly(text: &str) -> Result<LaurentPoly> {
    let mut p = Parser { s: text.as_bytes(), pos: 0 };
    p.skip_ws();
    if p.at_end() {
        return Err(p.err("empty expression"));
    }
    let v = p.expr()?;
    p.skip_ws();
    if !p.at_end() {
        return Err(p.err(&format!("unexpected character '{}'", p.peek_char())));
    }
    Ok(v)
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse { pos: self.pos, msg: msg.to_string() }
    }

    fn at_end(&self) -> bool {
        self.pos >= self.s.len()
    }

    fn peek(&self) -> Option<u8> {
        self.s.get(self.pos).copied()
    }

    fn peek_char(&self) -> char {
        self.peek().map(|b| b as char).unwrap_or('?')
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|b| b.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: u8) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<LaurentPoly> {
        self.skip_ws();
        let mut acc = if self.eat(b'-') {
            -&self.term()?
        } else {
            self.eat(b'+');
            self.term()?
        };
        loop {
            if self.eat(b'+') {
                acc = &acc + &self.term()?;
            } else if self.eat(b'-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn starts_factor(&mut self) -> bool {
        self.skip_ws();
        matches!(self.peek(), Some(b'0'..=b'9' | b't' | b'('))
    }

    fn term(&mut self) -> Result<LaurentPoly> {
        let mut acc = self.factor()?;
        loop {
            if self.eat(b'*') {
                acc = &acc * &self.factor()?;
            } else if self.starts_factor() {
                acc = &acc * &self.factor()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<LaurentPoly> {
        if self.eat(b'-') {
            return Ok(-&self.factor()?);
        }
        let start = self.pos;
        let base = self.atom()?;
        if self.eat(b'^') {
            let e = self.signed_int()?;
            return power(&base, e).map_err(|msg| Error::Parse { pos: start, msg });
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<LaurentPoly> {
        self.skip_ws();
        match self.peek() {
            Some(b't') => {
                self.pos += 1;
                Ok(LaurentPoly::t())
            }
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.err("expected ')'"));
                }
                Ok(v)
            }
            Some(b'0'..=b'9') => {
                let n = self.uint()?;
                let mut r = Rational::from_integer(n);
                if self.eat(b'/') {
                    self.skip_ws();
                    let d = self.uint()?;
                    if d.is_zero() {
                        return Err(self.err("zero denominator"));
                    }
                    r /= Rational::from_integer(d);
                }
                Ok(LaurentPoly::constant(r))
            }
            Some(_) => Err(self.err(&format!("unexpected character '{}'", self.peek_char()))),
            None => Err(self.err("unexpected end of input")),
        }
    }

    fn uint(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected integer"));
        }
        let digits = std::str::from_utf8(&self.s[start..self.pos]).unwrap();
        Ok(digits.parse::<BigInt>().unwrap())
    }

    fn signed_int(&mut self) -> Result<i64> {
        self.skip_ws();
        let neg = if self.peek() == Some(b'-') {
            self.pos += 1;
            true
        } else {
            if self.peek() == Some(b'+') {
                self.pos += 1;
            }
            false
        };
        let start = self.pos;
        let n = self.uint()?;
        let v: i64 = n
            .try_into()
            .map_err(|_| Error::Parse { pos: start, msg: "exponent out of range".into() })?;
        if v > 100_000 {
            return Err(Error::Parse { pos: start, msg: "exponent too large".into() });
        }
        Ok(if neg { -v } else { v })
    }
}

fn power(base: &LaurentPoly, e: i64) -> std::result::Result<LaurentPoly, String> {
    if e >= 0 {
        return Ok(base.pow(e as usize));
    }
    if !base.is_unit() {
        return Err("negative exponent on a non-monomial".into());
    }
    let c = base.leading_coeff();
    let inv = LaurentPoly::monomial(Rational::one() / c, -base.low());
    Ok(inv.pow(e.unsigned_abs() as usize))
}
