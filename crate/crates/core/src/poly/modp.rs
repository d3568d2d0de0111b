//! Polynomial arithmetic over small prime fields, used by the factorizer.

use num_bigint::BigUint;
use rand::Rng;

pub type MPoly = Vec<u64>;

#[derive(Clone, Copy, Debug)]
pub struct Field {
    pub p: u64,
}

impl Field {
    pub fn new(p: u64) -> Self {
        assert!(p >= 2 && p < (1 << 31));
        Field { p }
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.p
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        (a + self.p - b) % self.p
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    pub fn pow(&self, mut a: u64, mut e: u64) -> u64 {
        let mut acc = 1 % self.p;
        a %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: u64) -> u64 {
        assert!(a % self.p != 0, "inverse of zero mod p");
        self.pow(a, self.p - 2)
    }

    pub fn trim(&self, mut a: MPoly) -> MPoly {
        while a.last() == Some(&0) {
            a.pop();
        }
        a
    }

    pub fn add_poly(&self, a: &[u64], b: &[u64]) -> MPoly {
        let n = a.len().max(b.len());
        let c = (0..n)
            .map(|i| self.add(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0)))
            .collect();
        self.trim(c)
    }

    pub fn sub_poly(&self, a: &[u64], b: &[u64]) -> MPoly {
        let n = a.len().max(b.len());
        let c = (0..n)
            .map(|i| self.sub(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0)))
            .collect();
        self.trim(c)
    }

    pub fn mul_poly(&self, a: &[u64], b: &[u64]) -> MPoly {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut c = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                c[i + j] = (c[i + j] + x * y) % self.p;
            }
        }
        self.trim(c)
    }

    pub fn scale_poly(&self, a: &[u64], s: u64) -> MPoly {
        self.trim(a.iter().map(|&v| self.mul(v, s)).collect())
    }

    pub fn monic(&self, a: &[u64]) -> MPoly {
        match a.last() {
            None => Vec::new(),
            Some(&lc) => self.scale_poly(a, self.inv(lc)),
        }
    }

    pub fn div_rem(&self, a: &[u64], d: &[u64]) -> (MPoly, MPoly) {
        assert!(!d.is_empty());
        if a.len() < d.len() {
            return (Vec::new(), a.to_vec());
        }
        let mut r = a.to_vec();
        let dl = d.len();
        let inv = self.inv(d[dl - 1]);
        let mut q = vec![0u64; r.len() - dl + 1];
        for i in (0..q.len()).rev() {
            let top = r[i + dl - 1];
            if top == 0 {
                continue;
            }
            let f = self.mul(top, inv);
            for (j, &dv) in d.iter().enumerate() {
                r[i + j] = self.sub(r[i + j], self.mul(f, dv));
            }
            q[i] = f;
        }
        r.truncate(dl - 1);
        (self.trim(q), self.trim(r))
    }

    pub fn rem(&self, a: &[u64], d: &[u64]) -> MPoly {
        self.div_rem(a, d).1
    }

    pub fn gcd(&self, a: &[u64], b: &[u64]) -> MPoly {
        let mut a = self.trim(a.to_vec());
        let mut b = self.trim(b.to_vec());
        while !b.is_empty() {
            let r = self.rem(&a, &b);
            a = b;
            b = r;
        }
        self.monic(&a)
    }

    /// Returns `(g, s, t)` with `s a + t b = g`, `g` monic.
    pub fn ext_gcd(&self, a: &[u64], b: &[u64]) -> (MPoly, MPoly, MPoly) {
        let (mut r0, mut r1) = (self.trim(a.to_vec()), self.trim(b.to_vec()));
        let (mut s0, mut s1): (MPoly, MPoly) = (vec![1], vec![]);
        let (mut t0, mut t1): (MPoly, MPoly) = (vec![], vec![1]);
        while !r1.is_empty() {
            let (q, r) = self.div_rem(&r0, &r1);
            let s2 = self.sub_poly(&s0, &self.mul_poly(&q, &s1));
            let t2 = self.sub_poly(&t0, &self.mul_poly(&q, &t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        let inv = self.inv(*r0.last().expect("gcd of zero polynomials"));
        (
            self.scale_poly(&r0, inv),
            self.scale_poly(&s0, inv),
            self.scale_poly(&t0, inv),
        )
    }

    pub fn derivative(&self, a: &[u64]) -> MPoly {
        self.trim(
            a.iter()
                .enumerate()
                .skip(1)
                .map(|(i, &v)| self.mul(v, i as u64 % self.p))
                .collect(),
        )
    }

    pub fn pow_mod(&self, base: &[u64], e: &BigUint, m: &[u64]) -> MPoly {
        let mut acc: MPoly = self.rem(&[1], m);
        let b = self.rem(base, m);
        for i in (0..e.bits()).rev() {
            acc = self.rem(&self.mul_poly(&acc, &acc), m);
            if e.bit(i) {
                acc = self.rem(&self.mul_poly(&acc, &b), m);
            }
        }
        acc
    }

    /// Distinct-degree factorization of a monic squarefree polynomial.
    pub fn distinct_degree(&self, f: &[u64]) -> Vec<(MPoly, usize)> {
        let mut out = Vec::new();
        let mut f = f.to_vec();
        let x: MPoly = vec![0, 1];
        let mut h = x.clone();
        let p = BigUint::from(self.p);
        let mut d = 0;
        while f.len() > 1 {
            d += 1;
            if 2 * d > f.len() - 1 {
                out.push((f.clone(), f.len() - 1));
                break;
            }
            h = self.pow_mod(&h, &p, &f);
            let g = self.gcd(&self.sub_poly(&h, &x), &f);
            if g.len() > 1 {
                f = self.div_rem(&f, &g).0;
                h = self.rem(&h, &f);
                out.push((g, d));
            }
        }
        out
    }

    /// Cantor–Zassenhaus splitting of a monic product of degree-`d` irreducibles (odd `p`).
    pub fn equal_degree<R: Rng>(&self, f: &[u64], d: usize, rng: &mut R) -> Vec<MPoly> {
        let n = f.len() - 1;
        if n == d {
            return vec![f.to_vec()];
        }
        let e = (BigUint::from(self.p).pow(d as u32) - 1u32) / 2u32;
        loop {
            let a: MPoly = self.trim((0..n).map(|_| rng.gen_range(0..self.p)).collect());
            if a.len() < 2 {
                continue;
            }
            let g = self.gcd(&a, f);
            let split = if g.len() > 1 && g.len() < f.len() {
                g
            } else {
                let b = self.pow_mod(&a, &e, f);
                let g = self.gcd(&self.sub_poly(&b, &[1]), f);
                if g.len() <= 1 || g.len() == f.len() {
                    continue;
                }
                g
            };
            let other = self.div_rem(f, &split).0;
            let mut out = self.equal_degree(&split, d, rng);
            out.extend(self.equal_degree(&other, d, rng));
            return out;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn splits_x4_minus_1_mod_5() {
        let fld = Field::new(5);
        let f = vec![4, 0, 0, 0, 1];
        let dd = fld.distinct_degree(&f);
        assert_eq!(dd.len(), 1);
        assert_eq!(dd[0].1, 1);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
        let mut parts = fld.equal_degree(&dd[0].0, 1, &mut rng);
        parts.sort();
        assert_eq!(parts, vec![vec![1, 1], vec![2, 1], vec![3, 1], vec![4, 1]]);
    }

    #[test]
    fn ext_gcd_identity() {
        let fld = Field::new(7);
        let a = vec![1, 0, 1];
        let b = vec![3, 1];
        let (g, s, t) = fld.ext_gcd(&a, &b);
        assert_eq!(g, vec![1]);
        let lhs = fld.add_poly(&fld.mul_poly(&s, &a), &fld.mul_poly(&t, &b));
        assert_eq!(lhs, vec![1]);
    }
}
