//! LLL lattice reduction over the integers with exact rational Gram–Schmidt,
//! and an integer relation search built on it.

use crate::error::{Error, Result};
use crate::poly::qpoly::Rational;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

fn gram_schmidt(b: &[Vec<BigInt>]) -> (Vec<Rational>, Vec<Vec<Rational>>) {
    let n = b.len();
    let mut star: Vec<Vec<Rational>> = Vec::with_capacity(n);
    let mut norms = Vec::with_capacity(n);
    let mut mu = vec![vec![Rational::zero(); n]; n];
    for i in 0..n {
        let mut v: Vec<Rational> = b[i].iter().map(|x| Rational::from_integer(x.clone())).collect();
        for j in 0..i {
            let num: Rational = b[i].iter().zip(&star[j]).map(|(x, y)| Rational::from_integer(x.clone()) * y).sum();
            let m = if norms[j] == Rational::zero() { Rational::zero() } else { num / &norms[j] };
            for (vk, sk) in v.iter_mut().zip(&star[j]) {
                *vk -= &m * sk;
            }
            mu[i][j] = m;
        }
        let nn: Rational = v.iter().map(|x| x * x).sum();
        norms.push(nn);
        star.push(v);
    }
    (norms, mu)
}

fn round(r: &Rational) -> BigInt {
    let half = Rational::new(BigInt::one(), BigInt::from(2));
    (r + half).floor().to_integer()
}

/// LLL-reduce the rows of `b` with parameter 3/4.
pub fn lll(mut b: Vec<Vec<BigInt>>) -> Vec<Vec<BigInt>> {
    let n = b.len();
    if n < 2 {
        return b;
    }
    let delta = Rational::new(BigInt::from(3), BigInt::from(4));
    let half = Rational::new(BigInt::one(), BigInt::from(2));
    let mut k = 1;
    let (mut norms, mut mu) = gram_schmidt(&b);
    while k < n {
        for j in (0..k).rev() {
            if mu[k][j].abs() > half {
                let q = round(&mu[k][j]);
                let bj = b[j].clone();
                for (x, y) in b[k].iter_mut().zip(&bj) {
                    *x -= &q * y;
                }
                (norms, mu) = gram_schmidt(&b);
            }
        }
        let lhs = &norms[k];
        let rhs = (&delta - &mu[k][k - 1] * &mu[k][k - 1]) * &norms[k - 1];
        if *lhs >= rhs {
            k += 1;
        } else {
            b.swap(k, k - 1);
            (norms, mu) = gram_schmidt(&b);
            k = (k - 1).max(1);
        }
    }
    b
}

/// Outcome of an integer relation search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Relation {
    /// `Σ c_i x_i ≈ 0` at the working precision.
    Found(Vec<BigInt>),
    NotFound,
}

/// Search for integers `c` with `max |c_i| <= max_coeff` and
/// `|Σ c_i x_i| <= Σ |c_i| · 10^-digits`, given approximations `x_i` accurate
/// to `10^-digits`.
pub fn integer_relation(x: &[Rational], max_coeff: u64, digits: u32) -> Result<Relation> {
    let n = x.len();
    if n == 0 {
        return Err(Error::InvalidArgument("no values given".into()));
    }
    let needed = (n as f64) * (max_coeff.max(2) as f64).log10() + 2.0;
    if (digits as f64) < needed {
        return Err(Error::Precondition(format!(
            "{digits} digits cannot separate relations with coefficients up to {max_coeff} among {n} values; need at least {}",
            needed.ceil()
        )));
    }
    let scale = BigInt::from(10).pow(digits);
    let rows: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            let mut r: Vec<BigInt> = (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect();
            r.push(round(&(&x[i] * Rational::from_integer(scale.clone()))));
            r
        })
        .collect();
    let tol_unit = Rational::new(BigInt::from(2), scale);
    let bound = BigInt::from(max_coeff);
    for row in lll(rows) {
        let c = &row[..n];
        if c.iter().all(|v| v.is_zero()) || c.iter().any(|v| v.abs() > bound) {
            continue;
        }
        let sum: Rational = c.iter().zip(x).map(|(ci, xi)| Rational::from_integer(ci.clone()) * xi).sum();
        let weight: BigInt = c.iter().map(|v| v.abs()).sum();
        if sum.abs() <= Rational::from_integer(weight) * &tol_unit {
            let mut c = c.to_vec();
            if c.iter().find(|v| !v.is_zero()).is_some_and(|v| v.is_negative()) {
                c.iter_mut().for_each(|v| *v = -&*v);
            }
            return Ok(Relation::Found(c));
        }
    }
    Ok(Relation::NotFound)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::qpoly::ratio;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn reduces_classic_basis() {
        let b = vec![ints(&[1, 1, 1]), ints(&[-1, 0, 2]), ints(&[3, 5, 6])];
        let r = lll(b);
        assert_eq!(r[0], ints(&[0, 1, 0]));
    }

    #[test]
    fn rational_relation() {
        let x = vec![ratio(-4, 3), ratio(-8, 3)];
        assert_eq!(integer_relation(&x, 1_000_000, 20).unwrap(), Relation::Found(ints(&[2, -1])));
    }

    #[test]
    fn no_relation_for_sqrt2() {
        // 1.414213562373095048801688724209698 ~ sqrt 2
        let s = Rational::new(
            "1414213562373095048801688724209698".parse().unwrap(),
            BigInt::from(10).pow(33),
        );
        let x = vec![Rational::one(), s];
        assert_eq!(integer_relation(&x, 1000, 30).unwrap(), Relation::NotFound);
        assert!(integer_relation(&x, 1_000_000, 5).is_err());
    }
}
