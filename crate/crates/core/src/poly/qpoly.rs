//! Dense univariate polynomials over Q and Z.
//!
//! `QPoly` stores coefficients in ascending order with no trailing zeros;
//! the zero polynomial is the empty vector. Integer polynomials are plain
//! `Vec<BigInt>` in the same layout and are only used by the factorization
//! and resultant code paths.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::ops::{Add, Mul, Neg, Sub};

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct QPoly {
    c: Vec<Rational>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly { c: Vec::new() }
    }

    pub fn one() -> Self {
        QPoly { c: vec![Rational::one()] }
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        QPoly { c: vec![Rational::zero(), Rational::one()] }
    }

    pub fn constant(r: Rational) -> Self {
        QPoly::new(vec![r])
    }

    pub fn new(mut c: Vec<Rational>) -> Self {
        while c.last().is_some_and(|v| v.is_zero()) {
            c.pop();
        }
        QPoly { c }
    }

    pub fn from_i64(c: &[i64]) -> Self {
        QPoly::new(c.iter().map(|&v| rat(v)).collect())
    }

    pub fn from_z(c: &[BigInt]) -> Self {
        QPoly::new(c.iter().map(|v| Rational::from_integer(v.clone())).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.c
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.c
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.c.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.c.len() <= 1
    }

    pub fn is_one(&self) -> bool {
        self.c.len() == 1 && self.c[0].is_one()
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn deg(&self) -> usize {
        self.c.len().saturating_sub(1)
    }

    pub fn lc(&self) -> Rational {
        self.c.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn scale(&self, s: &Rational) -> QPoly {
        if s.is_zero() {
            return QPoly::zero();
        }
        QPoly { c: self.c.iter().map(|v| v * s).collect() }
    }

    pub fn monic(&self) -> QPoly {
        if self.is_zero() {
            return QPoly::zero();
        }
        let inv = self.lc().recip();
        self.scale(&inv)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for v in self.c.iter().rev() {
            acc = acc * x + v;
        }
        acc
    }

    pub fn derivative(&self) -> QPoly {
        if self.c.len() <= 1 {
            return QPoly::zero();
        }
        QPoly::new(
            self.c
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, v)| v * rat(i as i64))
                .collect(),
        )
    }

    /// Multiply by `x^k`.
    pub fn shift(&self, k: usize) -> QPoly {
        if self.is_zero() {
            return QPoly::zero();
        }
        let mut c = vec![Rational::zero(); k];
        c.extend(self.c.iter().cloned());
        QPoly { c }
    }

    /// Number of trailing zero coefficients (power of `x` dividing the polynomial).
    pub fn low_order(&self) -> usize {
        self.c.iter().take_while(|v| v.is_zero()).count()
    }

    /// Divide out the largest power of `x`.
    pub fn strip_x(&self) -> (usize, QPoly) {
        let k = self.low_order();
        (k, QPoly { c: self.c[k.min(self.c.len())..].to_vec() })
    }

    /// Coefficient reversal `x^deg p(1/x)`.
    pub fn reverse(&self) -> QPoly {
        QPoly::new(self.c.iter().rev().cloned().collect())
    }

    /// `p(x^n)` for `n >= 1`.
    pub fn compose_power(&self, n: usize) -> QPoly {
        assert!(n >= 1);
        if self.is_zero() {
            return QPoly::zero();
        }
        let mut c = vec![Rational::zero(); (self.c.len() - 1) * n + 1];
        for (i, v) in self.c.iter().enumerate() {
            c[i * n] = v.clone();
        }
        QPoly { c }
    }

    /// `p(-x)`.
    pub fn negate_var(&self) -> QPoly {
        QPoly {
            c: self
                .c
                .iter()
                .enumerate()
                .map(|(i, v)| if i % 2 == 1 { -v } else { v.clone() })
                .collect(),
        }
    }

    pub fn div_rem(&self, d: &QPoly) -> (QPoly, QPoly) {
        assert!(!d.is_zero(), "division by zero polynomial");
        if self.c.len() < d.c.len() {
            return (QPoly::zero(), self.clone());
        }
        let mut r = self.c.clone();
        let dl = d.c.len();
        let inv = d.lc().recip();
        let mut q = vec![Rational::zero(); r.len() - dl + 1];
        for i in (0..q.len()).rev() {
            let top = &r[i + dl - 1];
            if top.is_zero() {
                continue;
            }
            let f = top * &inv;
            for (j, dv) in d.c.iter().enumerate() {
                r[i + j] -= &f * dv;
            }
            q[i] = f;
        }
        r.truncate(dl - 1);
        (QPoly::new(q), QPoly::new(r))
    }

    pub fn rem(&self, d: &QPoly) -> QPoly {
        self.div_rem(d).1
    }

    /// Exact quotient; panics in debug builds if the division leaves a remainder.
    pub fn div_exact(&self, d: &QPoly) -> QPoly {
        let (q, r) = self.div_rem(d);
        debug_assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    pub fn divides(&self, other: &QPoly) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.rem(self).is_zero()
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &QPoly) -> QPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// Extended gcd: returns `(g, s, t)` with `s*self + t*other = g`, `g` monic.
    pub fn ext_gcd(&self, other: &QPoly) -> (QPoly, QPoly, QPoly) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (QPoly::one(), QPoly::zero());
        let (mut t0, mut t1) = (QPoly::zero(), QPoly::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s2 = &s0 - &(&q * &s1);
            let t2 = &t0 - &(&q * &t1);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = r0.lc().recip();
        (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
    }

    /// Inverse of `self` modulo `m`, if it exists.
    pub fn inverse_mod(&self, m: &QPoly) -> Option<QPoly> {
        let (g, s, _) = self.rem(m).ext_gcd(m);
        if g.is_one() {
            Some(s.rem(m))
        } else {
            None
        }
    }

    pub fn pow(&self, e: usize) -> QPoly {
        let mut acc = QPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Squarefree part (monic).
    pub fn squarefree_part(&self) -> QPoly {
        if self.is_constant() {
            return QPoly::one();
        }
        let g = self.gcd(&self.derivative());
        self.div_exact(&g).monic()
    }

    /// Yun's squarefree decomposition: monic `a_i` with `self = lc * prod a_i^i`.
    pub fn squarefree_decomposition(&self) -> Vec<(QPoly, usize)> {
        let mut out = Vec::new();
        if self.is_constant() {
            return out;
        }
        let f = self.monic();
        let fp = f.derivative();
        let a0 = f.gcd(&fp);
        let mut b = f.div_exact(&a0);
        let mut c = fp.div_exact(&a0);
        let mut d = &c - &b.derivative();
        let mut i = 1;
        while !b.is_constant() {
            let a = b.gcd(&d);
            b = b.div_exact(&a);
            c = d.div_exact(&a);
            d = &c - &b.derivative();
            if !a.is_constant() {
                out.push((a, i));
            }
            i += 1;
        }
        out
    }

    /// Least common multiple of coefficient denominators.
    pub fn denominator_lcm(&self) -> BigInt {
        self.c
            .iter()
            .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
    }

    /// Integer polynomial `D * self` where `D` clears all denominators (content not removed).
    pub fn clear_denominators(&self) -> Vec<BigInt> {
        let d = self.denominator_lcm();
        self.c
            .iter()
            .map(|v| (v * Rational::from_integer(d.clone())).to_integer())
            .collect()
    }

    /// Primitive integer polynomial with positive leading coefficient.
    pub fn primitive_z(&self) -> Vec<BigInt> {
        let mut z = self.clear_denominators();
        let g = z_content(&z);
        if !g.is_zero() {
            for v in z.iter_mut() {
                *v = &*v / &g;
            }
        }
        if z.last().is_some_and(|v| v.is_negative()) {
            for v in z.iter_mut() {
                *v = -&*v;
            }
        }
        z
    }

    pub fn to_f64_coeffs(&self) -> Vec<f64> {
        use num_traits::ToPrimitive;
        self.c.iter().map(|v| v.to_f64().unwrap_or(f64::NAN)).collect()
    }
}

impl<'a> Add<&'a QPoly> for &'a QPoly {
    type Output = QPoly;
    fn add(self, o: &QPoly) -> QPoly {
        let n = self.c.len().max(o.c.len());
        let mut c = Vec::with_capacity(n);
        for i in 0..n {
            c.push(match (self.c.get(i), o.c.get(i)) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        QPoly::new(c)
    }
}

impl<'a> Sub<&'a QPoly> for &'a QPoly {
    type Output = QPoly;
    fn sub(self, o: &QPoly) -> QPoly {
        self + &(-o)
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly { c: self.c.iter().map(|v| -v).collect() }
    }
}

impl<'a> Mul<&'a QPoly> for &'a QPoly {
    type Output = QPoly;
    fn mul(self, o: &QPoly) -> QPoly {
        if self.is_zero() || o.is_zero() {
            return QPoly::zero();
        }
        let mut c = vec![Rational::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        QPoly::new(c)
    }
}

// ---- integer polynomial helpers ----

pub fn z_trim(mut p: Vec<BigInt>) -> Vec<BigInt> {
    while p.last().is_some_and(|v| v.is_zero()) {
        p.pop();
    }
    p
}

pub fn z_content(p: &[BigInt]) -> BigInt {
    p.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v))
}

pub fn z_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut c = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            c[i + j] += x * y;
        }
    }
    z_trim(c)
}

/// Exact division over Z; `None` if `d` does not divide `a` in Z[x].
pub fn z_div_exact(a: &[BigInt], d: &[BigInt]) -> Option<Vec<BigInt>> {
    let d = z_trim(d.to_vec());
    if d.is_empty() {
        return None;
    }
    let a = z_trim(a.to_vec());
    if a.is_empty() {
        return Some(Vec::new());
    }
    if a.len() < d.len() {
        return None;
    }
    let mut r = a;
    let dl = d.len();
    let lc = d[dl - 1].clone();
    let mut q = vec![BigInt::zero(); r.len() - dl + 1];
    for i in (0..q.len()).rev() {
        let top = r[i + dl - 1].clone();
        if top.is_zero() {
            continue;
        }
        let (f, rem) = top.div_rem(&lc);
        if !rem.is_zero() {
            return None;
        }
        for (j, dv) in d.iter().enumerate() {
            r[i + j] -= &f * dv;
        }
        q[i] = f;
    }
    if r.iter().any(|v| !v.is_zero()) {
        return None;
    }
    Some(z_trim(q))
}

pub fn z_norm2_ceil(p: &[BigInt]) -> BigInt {
    let s: BigInt = p.iter().map(|v| v * v).sum();
    let r = s.sqrt();
    if &r * &r == s {
        r
    } else {
        r + 1
    }
}
