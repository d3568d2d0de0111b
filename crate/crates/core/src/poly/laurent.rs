//! Laurent polynomials over Q with a canonical unit-normal form.

use super::qpoly::{rat, QPoly, Rational};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// An element of Q[t, t^-1], stored as `t^low * body` with `body(0) != 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    low: i64,
    body: QPoly,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { low: 0, body: QPoly::zero() }
    }

    pub fn one() -> Self {
        LaurentPoly { low: 0, body: QPoly::one() }
    }

    pub fn t() -> Self {
        LaurentPoly::monomial(Rational::one(), 1)
    }

    pub fn constant(c: Rational) -> Self {
        LaurentPoly::from_qpoly(QPoly::constant(c), 0)
    }

    pub fn monomial(c: Rational, e: i64) -> Self {
        LaurentPoly::from_qpoly(QPoly::constant(c), e)
    }

    /// `t^shift * p`.
    pub fn from_qpoly(p: QPoly, shift: i64) -> Self {
        if p.is_zero() {
            return LaurentPoly::zero();
        }
        let (k, body) = p.strip_x();
        LaurentPoly { low: shift + k as i64, body }
    }

    /// Coefficients of `t^low, t^(low+1), ...`.
    pub fn from_coeffs(low: i64, c: Vec<Rational>) -> Self {
        LaurentPoly::from_qpoly(QPoly::new(c), low)
    }

    pub fn from_i64(low: i64, c: &[i64]) -> Self {
        LaurentPoly::from_qpoly(QPoly::from_i64(c), low)
    }

    pub fn from_map(m: &BTreeMap<i64, Rational>) -> Self {
        let Some((&lo, _)) = m.iter().find(|(_, v)| !v.is_zero()) else {
            return LaurentPoly::zero();
        };
        let hi = *m.keys().next_back().unwrap();
        let mut c = vec![Rational::zero(); (hi - lo + 1) as usize];
        for (&e, v) in m.range(lo..) {
            c[(e - lo) as usize] = v.clone();
        }
        LaurentPoly::from_coeffs(lo, c)
    }

    /// Exponent -> nonzero coefficient map.
    pub fn to_map(&self) -> BTreeMap<i64, Rational> {
        self.terms().collect()
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, Rational)> + '_ {
        self.body
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(move |(i, v)| (self.low + i as i64, v.clone()))
    }

    pub fn coeff(&self, e: i64) -> Rational {
        if e < self.low {
            return Rational::zero();
        }
        self.body.coeff((e - self.low) as usize)
    }

    pub fn is_zero(&self) -> bool {
        self.body.is_zero()
    }

    /// Units of Q[t, t^-1] are the nonzero monomials `c t^j`.
    pub fn is_unit(&self) -> bool {
        self.body.coeffs().len() == 1
    }

    pub fn low(&self) -> i64 {
        self.low
    }

    pub fn high(&self) -> i64 {
        self.low + self.body.deg() as i64
    }

    /// Width of the exponent support (`high - low`); this is the degree of the canonical form.
    pub fn span(&self) -> usize {
        self.body.deg()
    }

    /// The ordinary polynomial `t^-low * p` (nonzero constant term).
    pub fn body(&self) -> &QPoly {
        &self.body
    }

    pub fn leading_coeff(&self) -> Rational {
        self.body.lc()
    }

    pub fn eval(&self, x: &Rational) -> Result<Rational> {
        if self.is_zero() {
            return Ok(Rational::zero());
        }
        if x.is_zero() && self.low < 0 {
            return Err(Error::InvalidArgument("evaluation of a negative power at 0".into()));
        }
        let b = self.body.eval(x);
        Ok(b * pow_rat(x, self.low))
    }

    /// `p(1)`.
    pub fn augmentation(&self) -> Rational {
        self.body.coeffs().iter().sum()
    }

    /// Canonical representative of the class of `p` up to units `±(a/b) t^j`:
    /// lowest exponent 0, primitive integer coefficients, positive leading coefficient.
    pub fn normalize(&self) -> LaurentPoly {
        if self.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly { low: 0, body: QPoly::from_z(&self.body.primitive_z()) }
    }

    pub fn is_normalized(&self) -> bool {
        *self == self.normalize()
    }

    /// Equality up to units (`≐`).
    pub fn unit_eq(&self, other: &LaurentPoly) -> bool {
        self.normalize() == other.normalize()
    }

    /// The unit `u` with `self = u * normalize(self)`, returned as `(c, j)` meaning `c t^j`.
    pub fn unit_part(&self) -> (Rational, i64) {
        if self.is_zero() {
            return (Rational::zero(), 0);
        }
        let n = self.normalize();
        (self.body.lc() / n.body.lc(), self.low)
    }

    /// `p(t^-1)` without normalization.
    pub fn conjugate(&self) -> LaurentPoly {
        if self.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly { low: -self.high(), body: self.body.reverse() }
    }

    /// `normalize(p(t^-1))`.
    pub fn reciprocal(&self) -> Result<LaurentPoly> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial("reciprocal"));
        }
        Ok(self.conjugate().normalize())
    }

    /// `p ≐ p(t^-1)`.
    pub fn is_self_reciprocal(&self) -> bool {
        !self.is_zero() && self.conjugate().unit_eq(self)
    }

    /// `p(t^n)` exactly; negative `n` allowed.
    pub fn substitute_power(&self, n: i64) -> Result<LaurentPoly> {
        if n == 0 {
            return Err(Error::InvalidArgument("substitution exponent must be nonzero".into()));
        }
        if self.is_zero() {
            return Ok(LaurentPoly::zero());
        }
        let stretched = LaurentPoly {
            low: self.low * n.abs(),
            body: self.body.compose_power(n.unsigned_abs() as usize),
        };
        Ok(if n < 0 { stretched.conjugate() } else { stretched })
    }

    pub fn scale(&self, s: &Rational) -> LaurentPoly {
        LaurentPoly::from_qpoly(self.body.scale(s), self.low)
    }

    pub fn shift(&self, j: i64) -> LaurentPoly {
        if self.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly { low: self.low + j, body: self.body.clone() }
    }

    pub fn pow(&self, e: usize) -> LaurentPoly {
        let mut acc = LaurentPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Canonical greatest common divisor in Q[t, t^-1].
    pub fn gcd(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::ZeroPolynomial("gcd of two zero polynomials"));
        }
        Ok(LaurentPoly::from_qpoly(self.body.gcd(&other.body), 0).normalize())
    }

    pub fn is_coprime(&self, other: &LaurentPoly) -> Result<bool> {
        Ok(self.gcd(other)?.is_unit())
    }

    /// Divisibility in Q[t, t^-1] (units ignored).
    pub fn divides(&self, other: &LaurentPoly) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        self.body.divides(&other.body)
    }

    /// Exact quotient `other / self` in Q[t, t^-1]; `None` if `self` does not divide `other`.
    pub fn div_exact(&self, divisor: &LaurentPoly) -> Option<LaurentPoly> {
        if divisor.is_zero() {
            return None;
        }
        let (q, r) = self.body.div_rem(&divisor.body);
        if !r.is_zero() {
            return None;
        }
        Some(LaurentPoly::from_qpoly(q, self.low - divisor.low))
    }

    /// Resultant of the integer-cleared ordinary representatives.
    pub fn resultant(&self, other: &LaurentPoly) -> Result<Rational> {
        if self.is_zero() || other.is_zero() {
            return Err(Error::ZeroPolynomial("resultant"));
        }
        let a = QPoly::from_z(&self.body.clear_denominators());
        let b = QPoly::from_z(&other.body.clear_denominators());
        Ok(resultant_q(&a, &b))
    }

    /// Integer coefficients of the canonical form, ascending.
    pub fn canonical_int_coeffs(&self) -> Vec<BigInt> {
        self.normalize().body.coeffs().iter().map(|c| c.to_integer()).collect()
    }

    /// Ordering used for deterministic factor lists: by span, then by the
    /// canonical coefficient vector read from the leading coefficient down.
    pub fn canonical_cmp(&self, other: &LaurentPoly) -> Ordering {
        self.span().cmp(&other.span()).then_with(|| {
            let a = self.body.coeffs().iter().rev();
            let b = other.body.coeffs().iter().rev();
            a.cmp(b)
        })
    }
}

pub(crate) fn pow_rat(x: &Rational, e: i64) -> Rational {
    let mut base = if e < 0 { x.recip() } else { x.clone() };
    let mut e = e.unsigned_abs();
    let mut acc = Rational::one();
    while e > 0 {
        if e & 1 == 1 {
            acc *= &base;
        }
        base = &base * &base;
        e >>= 1;
    }
    acc
}

/// Resultant over Q by the Euclidean remainder sequence.
pub fn resultant_q(a: &QPoly, b: &QPoly) -> Rational {
    if a.is_zero() || b.is_zero() {
        return Rational::zero();
    }
    let mut a = a.clone();
    let mut b = b.clone();
    let mut acc = Rational::one();
    loop {
        let m = a.deg();
        let n = b.deg();
        if n == 0 {
            return acc * pow_rat(&b.lc(), m as i64);
        }
        if m == 0 {
            return acc * pow_rat(&a.lc(), n as i64);
        }
        let r = a.rem(&b);
        if r.is_zero() {
            return Rational::zero();
        }
        let k = r.deg();
        if (m * n) % 2 == 1 {
            acc = -acc;
        }
        acc *= pow_rat(&b.lc(), (m - k) as i64);
        a = b;
        b = r;
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, o: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        let lo = self.low.min(o.low);
        let a = self.body.shift((self.low - lo) as usize);
        let b = o.body.shift((o.low - lo) as usize);
        LaurentPoly::from_qpoly(&a + &b, lo)
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, o: &LaurentPoly) -> LaurentPoly {
        self + &(-o)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { low: self.low, body: -&self.body }
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, o: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || o.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly { low: self.low + o.low, body: &self.body * &o.body }
    }
}

fn fmt_coeff(c: &Rational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// Canonical serialization: descending exponents, `*` between coefficient and `t`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms().rev() {
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let mono = match e {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{e}"),
            };
            if mono.is_empty() {
                write!(f, "{}", fmt_coeff(&a))?;
            } else if a.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{}*{mono}", fmt_coeff(&a))?;
            }
        }
        Ok(())
    }
}

impl From<i64> for LaurentPoly {
    fn from(v: i64) -> Self {
        LaurentPoly::constant(rat(v))
    }
}
