#![allow(dead_code)]

use knotloc_core::{LaurentPoly, SeifertMatrix};
use nalgebra::DMatrix;
use proptest::prelude::*;

/// `S + L` with `S` symmetric and `L - L^T` the standard symplectic form, so
/// `det(V - V^T) = 1`.
pub fn seifert_from(genus: usize, sym: &[i64]) -> SeifertMatrix {
    let n = 2 * genus;
    let mut m = vec![vec![0i64; n]; n];
    let mut it = sym.iter().cycle();
    for i in 0..n {
        for j in i..n {
            let v = *it.next().unwrap();
            m[i][j] = v;
            m[j][i] = v;
        }
    }
    for b in 0..genus {
        m[2 * b][2 * b + 1] += 1;
    }
    SeifertMatrix::new(m).unwrap()
}

pub fn arb_seifert(max_genus: usize, range: i64) -> impl Strategy<Value = SeifertMatrix> {
    (1..=max_genus, prop::collection::vec(-range..=range, 21)).prop_map(|(g, v)| seifert_from(g, &v))
}

pub fn arb_poly(max_deg: usize, range: i64) -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec(-range..=range, 1..=max_deg + 1)
        .prop_filter("nonzero", |c| c.iter().any(|&x| x != 0))
        .prop_map(|c| LaurentPoly::from_i64(0, &c))
}

/// Levine–Tristram signature at `e^{iθ}` by floating-point eigenvalues of
/// the real form of `(1 - ω) V + (1 - ω̄) V^T`.
pub fn float_signature(v: &SeifertMatrix, theta: f64) -> i64 {
    let n = v.dim();
    if n == 0 {
        return 0;
    }
    let (c, s) = (theta.cos(), theta.sin());
    // (1-ω)V + (1-ω̄)V^T = A + iB with A = (1-c)(V+V^T), B = s(V^T - V)
    let a = DMatrix::from_fn(n, n, |i, j| (1.0 - c) * (v.entry(i, j) + v.entry(j, i)) as f64);
    let b = DMatrix::from_fn(n, n, |i, j| s * (v.entry(j, i) - v.entry(i, j)) as f64);
    let big = DMatrix::from_fn(2 * n, 2 * n, |i, j| match (i < n, j < n) {
        (true, true) => a[(i, j)],
        (true, false) => -b[(i, j - n)],
        (false, true) => b[(i - n, j)],
        (false, false) => a[(i - n, j - n)],
    });
    let eig = big.symmetric_eigen();
    let scale = eig.eigenvalues.iter().fold(1.0f64, |m, x| m.max(x.abs()));
    let tol = 1e-9 * scale;
    let pos = eig.eigenvalues.iter().filter(|&&x| x > tol).count() as i64;
    let neg = eig.eigenvalues.iter().filter(|&&x| x < -tol).count() as i64;
    (pos - neg) / 2
}
