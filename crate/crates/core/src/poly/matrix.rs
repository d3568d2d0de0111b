//! Small dense matrices over Q and Q[t]: fraction-free determinants and adjugates.

use super::qpoly::{QPoly, Rational};
use num_traits::{One, Zero};

pub type PolyMatrix = Vec<Vec<QPoly>>;

/// Determinant by Bareiss elimination (exact divisions in Q[t]).
pub fn det_poly(m: &PolyMatrix) -> QPoly {
    let n = m.len();
    if n == 0 {
        return QPoly::one();
    }
    let mut a = m.clone();
    let mut prev = QPoly::one();
    let mut negate = false;
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(r) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                return QPoly::zero();
            };
            a.swap(k, r);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.div_exact(&prev);
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        -&d
    } else {
        d
    }
}

pub fn det_rat(m: &[Vec<Rational>]) -> Rational {
    let n = m.len();
    let mut a: Vec<Vec<Rational>> = m.to_vec();
    let mut det = Rational::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !a[r][k].is_zero()) else {
            return Rational::zero();
        };
        if p != k {
            a.swap(p, k);
            det = -det;
        }
        det *= &a[k][k];
        for i in k + 1..n {
            let f = &a[i][k] / &a[k][k];
            if f.is_zero() {
                continue;
            }
            for j in k..n {
                let v = &f * &a[k][j];
                a[i][j] -= v;
            }
        }
    }
    det
}

fn minor(m: &PolyMatrix, row: usize, col: usize) -> PolyMatrix {
    m.iter()
        .enumerate()
        .filter(|(i, _)| *i != row)
        .map(|(_, r)| r.iter().enumerate().filter(|(j, _)| *j != col).map(|(_, x)| x.clone()).collect())
        .collect()
}

/// `adj(M)` with `M adj(M) = det(M) I`.
pub fn adjugate_poly(m: &PolyMatrix) -> PolyMatrix {
    let n = m.len();
    let mut adj = vec![vec![QPoly::zero(); n]; n];
    if n == 1 {
        adj[0][0] = QPoly::one();
        return adj;
    }
    for i in 0..n {
        for j in 0..n {
            let c = det_poly(&minor(m, i, j));
            adj[j][i] = if (i + j) % 2 == 0 { c } else { -&c };
        }
    }
    adj
}

pub fn mat_mul_poly(a: &PolyMatrix, b: &PolyMatrix) -> PolyMatrix {
    let n = a.len();
    let m = b.first().map_or(0, |r| r.len());
    let inner = b.len();
    (0..n)
        .map(|i| {
            (0..m)
                .map(|j| {
                    let mut acc = QPoly::zero();
                    for k in 0..inner {
                        acc = &acc + &(&a[i][k] * &b[k][j]);
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::qpoly::rat;

    fn p(c: &[i64]) -> QPoly {
        QPoly::from_i64(c)
    }

    #[test]
    fn bareiss_matches_expansion() {
        // [[t, 1], [2, t+1]] -> t^2 + t - 2
        let m = vec![vec![p(&[0, 1]), p(&[1])], vec![p(&[2]), p(&[1, 1])]];
        assert_eq!(det_poly(&m), p(&[-2, 1, 1]));
        let z = vec![vec![p(&[0]), p(&[1])], vec![p(&[1]), p(&[0])]];
        assert_eq!(det_poly(&z), p(&[-1]));
    }

    #[test]
    fn adjugate_identity() {
        let m = vec![
            vec![p(&[1, 1]), p(&[0, 2]), p(&[3])],
            vec![p(&[0]), p(&[-1, 1]), p(&[1])],
            vec![p(&[2]), p(&[0]), p(&[1, 0, 1])],
        ];
        let d = det_poly(&m);
        let prod = mat_mul_poly(&m, &adjugate_poly(&m));
        for (i, row) in prod.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                assert_eq!(*x, if i == j { d.clone() } else { QPoly::zero() });
            }
        }
    }

    #[test]
    fn rational_det() {
        let m = vec![vec![rat(0), rat(1)], vec![rat(-1), rat(0)]];
        assert_eq!(det_rat(&m), rat(1));
    }
}
