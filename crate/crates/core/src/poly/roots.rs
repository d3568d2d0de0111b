//! Real root isolation by Sturm sequences, and the unit-circle reduction
//! `x = t + t^-1` for self-reciprocal Laurent polynomials.

use super::laurent::LaurentPoly;
use super::qpoly::{rat, QPoly, Rational};
use num_traits::{Signed, Zero};

/// An isolating interval: either an exact rational root (`lo == hi`) or an
/// open interval `(lo, hi)` containing exactly one root, with nonzero
/// values of opposite sign at the endpoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootInterval {
    pub lo: Rational,
    pub hi: Rational,
}

impl RootInterval {
    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / rat(2)
    }
}

#[derive(Clone, Debug)]
pub struct Sturm {
    seq: Vec<QPoly>,
}

impl Sturm {
    /// Sturm sequence of the squarefree part of `p`.
    pub fn new(p: &QPoly) -> Self {
        let p0 = p.squarefree_part();
        let mut seq = vec![p0.clone()];
        let mut a = p0.clone();
        let mut b = p0.derivative();
        while !b.is_zero() {
            let r = a.rem(&b);
            seq.push(b.clone());
            a = b;
            b = -&r;
        }
        Sturm { seq }
    }

    pub fn poly(&self) -> &QPoly {
        &self.seq[0]
    }

    fn variations(&self, x: &Rational) -> usize {
        let mut last = 0i8;
        let mut count = 0;
        for q in &self.seq {
            let v = q.eval(x);
            let s = if v.is_zero() {
                0
            } else if v.is_positive() {
                1
            } else {
                -1
            };
            if s != 0 {
                if last != 0 && s != last {
                    count += 1;
                }
                last = s;
            }
        }
        count
    }

    /// Number of distinct real roots in `(a, b]`.
    pub fn count(&self, a: &Rational, b: &Rational) -> usize {
        self.variations(a).saturating_sub(self.variations(b))
    }

    /// Isolating intervals for all distinct real roots in the open interval `(a, b)`,
    /// sorted ascending. Neither `a` nor `b` may be a root.
    pub fn isolate(&self, a: &Rational, b: &Rational) -> Vec<RootInterval> {
        let p = self.poly();
        debug_assert!(!p.eval(a).is_zero() && !p.eval(b).is_zero());
        let mut out = Vec::new();
        let mut stack = vec![(a.clone(), b.clone())];
        while let Some((lo, hi)) = stack.pop() {
            let n = self.count(&lo, &hi);
            if n == 0 {
                continue;
            }
            if n == 1 {
                out.push(RootInterval { lo, hi });
                continue;
            }
            let mid = (&lo + &hi) / rat(2);
            if p.eval(&mid).is_zero() {
                // carve an exact root out of the middle
                let mut eps = (&hi - &lo) / rat(4);
                loop {
                    let l = &mid - &eps;
                    let r = &mid + &eps;
                    if !p.eval(&l).is_zero() && !p.eval(&r).is_zero() && self.count(&l, &r) == 1 {
                        out.push(RootInterval { lo: mid.clone(), hi: mid.clone() });
                        stack.push((lo.clone(), l));
                        stack.push((r, hi.clone()));
                        break;
                    }
                    eps /= rat(2);
                }
            } else {
                stack.push((lo, mid.clone()));
                stack.push((mid, hi));
            }
        }
        out.sort_by(|x, y| x.lo.cmp(&y.lo));
        out
    }

    /// Bisect an isolating interval until its width is at most `width`.
    pub fn refine(&self, iv: &RootInterval, width: &Rational) -> RootInterval {
        let p = self.poly();
        let mut iv = iv.clone();
        if iv.is_exact() {
            return iv;
        }
        let mut slo = p.eval(&iv.lo).is_positive();
        while iv.width() > *width {
            let mid = iv.midpoint();
            let v = p.eval(&mid);
            if v.is_zero() {
                return RootInterval { lo: mid.clone(), hi: mid };
            }
            if v.is_positive() == slo {
                iv.lo = mid;
                slo = v.is_positive();
            } else {
                iv.hi = mid;
            }
        }
        iv
    }
}

/// For a self-reciprocal polynomial `p` (after removing roots at `t = ±1`)
/// with `t^-m p(t) = c_0 + sum c_k (t^k + t^-k)`, returns `Q` with
/// `t^-m p(t) = Q(t + t^-1)`. Also returns the multiplicities of the removed
/// factors `(t - 1)` and `(t + 1)`.
pub fn trace_polynomial(p: &LaurentPoly) -> (QPoly, usize, usize) {
    assert!(!p.is_zero());
    let mut body = p.body().clone();
    let mut at_one = 0;
    let mut at_minus_one = 0;
    let tm1 = QPoly::from_i64(&[-1, 1]);
    let tp1 = QPoly::from_i64(&[1, 1]);
    while body.eval(&rat(1)).is_zero() {
        body = body.div_exact(&tm1);
        at_one += 1;
    }
    while body.eval(&rat(-1)).is_zero() {
        body = body.div_exact(&tp1);
        at_minus_one += 1;
    }
    let d = body.deg();
    assert!(d % 2 == 0, "self-reciprocal polynomial expected");
    let m = d / 2;
    let c = body.coeffs();
    // after removing roots at ±1 a self-reciprocal polynomial is palindromic
    assert!((0..=d).all(|k| c[k] == c[d - k]), "self-reciprocal polynomial expected");
    // P_0 = 2, P_1 = x, P_{k+1} = x P_k - P_{k-1}  (P_k(t + 1/t) = t^k + t^-k)
    let x = QPoly::x();
    let mut pk = vec![QPoly::constant(rat(2)), x.clone()];
    for k in 2..=m {
        let next = &(&x * &pk[k - 1]) - &pk[k - 2];
        pk.push(next);
    }
    let mut q = QPoly::constant(c[m].clone());
    for k in 1..=m {
        q = &q + &pk[k].scale(&c[m + k]);
    }
    (q, at_one, at_minus_one)
}
