//! Smith normal form over Q[t], tracking the inverse of the row transform so
//! that module generators can be read off in the original coordinates.

use crate::poly::matrix::PolyMatrix;
use crate::poly::qpoly::QPoly;

pub struct Smith {
    /// Monic diagonal entries `d_1 | d_2 | ... | d_n` (zero entries allowed).
    pub diagonal: Vec<QPoly>,
    /// `P^-1` where `P M Q = diag`; column `i` is the image of `e_i`.
    pub row_inverse: PolyMatrix,
}

fn identity(n: usize) -> PolyMatrix {
    (0..n).map(|i| (0..n).map(|j| if i == j { QPoly::one() } else { QPoly::zero() }).collect()).collect()
}

fn deg_key(p: &QPoly) -> usize {
    p.degree().unwrap_or(usize::MAX)
}

struct State {
    a: PolyMatrix,
    pinv: PolyMatrix,
    n: usize,
}

impl State {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap(i, j);
        for row in self.pinv.iter_mut() {
            row.swap(i, j);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        for row in self.a.iter_mut() {
            row.swap(i, j);
        }
    }

    /// row_i += c * row_j
    fn add_row(&mut self, i: usize, j: usize, c: &QPoly) {
        for k in 0..self.n {
            let v = &self.a[i][k] + &(c * &self.a[j][k]);
            self.a[i][k] = v;
        }
        // P^-1 <- P^-1 (I - c e_i e_j^T): col_j -= c col_i
        for row in self.pinv.iter_mut() {
            let v = &row[j] - &(c * &row[i]);
            row[j] = v;
        }
    }

    /// col_i += c * col_j
    fn add_col(&mut self, i: usize, j: usize, c: &QPoly) {
        for row in self.a.iter_mut() {
            let v = &row[i] + &(c * &row[j]);
            row[i] = v;
        }
    }

    fn make_monic(&mut self, k: usize) {
        let lc = self.a[k][k].lc();
        let inv = lc.recip();
        for j in 0..self.n {
            self.a[k][j] = self.a[k][j].scale(&inv);
        }
        for row in self.pinv.iter_mut() {
            row[k] = row[k].scale(&lc);
        }
    }
}

pub fn smith(m: &PolyMatrix) -> Smith {
    let n = m.len();
    let mut s = State { a: m.clone(), pinv: identity(n), n };
    for k in 0..n {
        loop {
            // smallest-degree nonzero entry of the trailing block
            let best = (k..n)
                .flat_map(|i| (k..n).map(move |j| (i, j)))
                .filter(|&(i, j)| !s.a[i][j].is_zero())
                .min_by_key(|&(i, j)| (deg_key(&s.a[i][j]), i, j));
            let Some((bi, bj)) = best else { break };
            if bi != k {
                s.swap_rows(bi, k);
            }
            if bj != k {
                s.swap_cols(bj, k);
            }
            let mut dirty = false;
            for i in k + 1..n {
                if s.a[i][k].is_zero() {
                    continue;
                }
                let (q, r) = s.a[i][k].div_rem(&s.a[k][k]);
                s.add_row(i, k, &-&q);
                dirty |= !r.is_zero();
            }
            for j in k + 1..n {
                if s.a[k][j].is_zero() {
                    continue;
                }
                let (q, r) = s.a[k][j].div_rem(&s.a[k][k]);
                s.add_col(j, k, &-&q);
                dirty |= !r.is_zero();
            }
            if dirty {
                continue;
            }
            // divisibility of the trailing block by the pivot
            let bad = (k + 1..n)
                .flat_map(|i| (k + 1..n).map(move |j| (i, j)))
                .find(|&(i, j)| !s.a[k][k].divides(&s.a[i][j]));
            match bad {
                Some((i, _)) => s.add_row(k, i, &QPoly::one()),
                None => break,
            }
        }
        if !s.a[k][k].is_zero() {
            s.make_monic(k);
        }
    }
    let diagonal = (0..n).map(|i| s.a[i][i].clone()).collect();
    Smith { diagonal, row_inverse: s.pinv }
}
