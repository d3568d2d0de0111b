//! Complete factorization over Q: squarefree decomposition, then
//! Zassenhaus (modular factorization, Hensel lifting, recombination)
//! on each squarefree primitive part.

use super::laurent::LaurentPoly;
use super::modp::{Field, MPoly};
use super::qpoly::{z_content, z_div_exact, z_mul, z_norm2_ceil, z_trim, QPoly, Rational};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

/// `input = unit * t^t_power * prod factor^multiplicity`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub unit: Rational,
    pub t_power: i64,
    pub factors: Vec<(LaurentPoly, usize)>,
}

impl Factorization {
    pub fn expand(&self) -> LaurentPoly {
        let mut acc = LaurentPoly::monomial(self.unit.clone(), self.t_power);
        for (f, m) in &self.factors {
            acc = &acc * &f.pow(*m);
        }
        acc
    }

    pub fn is_irreducible(&self) -> bool {
        self.factors.len() == 1 && self.factors[0].1 == 1
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|(_, m)| *m == 1)
    }

    /// Distinct irreducible factors, in canonical order.
    pub fn primes(&self) -> Vec<LaurentPoly> {
        self.factors.iter().map(|(f, _)| f.clone()).collect()
    }
}

#[derive(Serialize)]
struct FactorJson {
    factor: String,
    multiplicity: usize,
}

#[derive(Serialize)]
pub struct FactorizationJson {
    unit: String,
    t_power: i64,
    factors: Vec<FactorJson>,
}

impl From<&Factorization> for FactorizationJson {
    fn from(f: &Factorization) -> Self {
        FactorizationJson {
            unit: LaurentPoly::constant(f.unit.clone()).to_string(),
            t_power: f.t_power,
            factors: f
                .factors
                .iter()
                .map(|(p, m)| FactorJson { factor: p.to_string(), multiplicity: *m })
                .collect(),
        }
    }
}

pub fn factor(p: &LaurentPoly) -> Result<Factorization> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial("factor"));
    }
    let body = p.body();
    let mut factors: Vec<(LaurentPoly, usize)> = Vec::new();
    for (part, mult) in body.squarefree_decomposition() {
        let z = part.primitive_z();
        for f in factor_squarefree_z(&z) {
            factors.push((LaurentPoly::from_qpoly(QPoly::from_z(&f), 0), mult));
        }
    }
    factors.sort_by(|a, b| a.0.canonical_cmp(&b.0).then(a.1.cmp(&b.1)));
    let mut prod = LaurentPoly::one();
    for (f, m) in &factors {
        prod = &prod * &f.pow(*m);
    }
    let unit = body.lc() / prod.leading_coeff();
    let out = Factorization { unit, t_power: p.low(), factors };
    debug_assert_eq!(&out.expand(), p);
    Ok(out)
}

/// Irreducible factors of a squarefree primitive integer polynomial with
/// nonzero constant term. Each factor is primitive with positive leading coefficient.
pub fn factor_squarefree_z(f: &[BigInt]) -> Vec<Vec<BigInt>> {
    let f = z_trim(f.to_vec());
    let deg = f.len().saturating_sub(1);
    if deg == 0 {
        return Vec::new();
    }
    let f = positive_primitive(f);
    if deg == 1 {
        return vec![f];
    }
    if deg == 2 {
        if let Some(split) = split_quadratic(&f) {
            return split;
        }
        return vec![f];
    }
    zassenhaus(&f)
}

fn positive_primitive(mut f: Vec<BigInt>) -> Vec<BigInt> {
    let g = z_content(&f);
    if !g.is_one() && !g.is_zero() {
        for v in f.iter_mut() {
            *v = &*v / &g;
        }
    }
    if f.last().is_some_and(|v| v.is_negative()) {
        for v in f.iter_mut() {
            *v = -&*v;
        }
    }
    f
}

fn split_quadratic(f: &[BigInt]) -> Option<Vec<Vec<BigInt>>> {
    let (c, b, a) = (&f[0], &f[1], &f[2]);
    let disc: BigInt = b * b - BigInt::from(4) * a * c;
    if disc.is_negative() {
        return None;
    }
    let s = disc.sqrt();
    if &s * &s != disc {
        return None;
    }
    // roots (-b ± s) / 2a
    let mk = |num: BigInt| {
        let den: BigInt = BigInt::from(2) * a;
        let g = num.gcd(&den);
        // factor den/g * t - num/g
        positive_primitive(vec![-(&num / &g), &den / &g])
    };
    let mut out = vec![mk(-b + &s), mk(-b - &s)];
    out.sort();
    Some(out)
}

const PRIMES: [u64; 40] = [
    3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
    101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173, 179,
];

fn reduce(f: &[BigInt], fld: &Field) -> MPoly {
    let p = BigInt::from(fld.p);
    fld.trim(f.iter().map(|v| v.mod_floor(&p).to_u64().unwrap()).collect())
}

fn modular_factors(f: &[BigInt], fld: &Field, rng: &mut ChaCha8Rng) -> Vec<MPoly> {
    let fp = fld.monic(&reduce(f, fld));
    let mut out = Vec::new();
    for (g, d) in fld.distinct_degree(&fp) {
        out.extend(fld.equal_degree(&g, d, rng));
    }
    out.sort();
    out
}

fn zassenhaus(f: &[BigInt]) -> Vec<Vec<BigInt>> {
    let deg = f.len() - 1;
    let lc = f[deg].clone();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_f00d);

    // Pick the prime (among the first few admissible) giving the fewest modular factors.
    let mut best: Option<(Field, Vec<MPoly>)> = None;
    let mut tried = 0;
    for &p in PRIMES.iter() {
        let fld = Field::new(p);
        if (&lc % BigInt::from(p)).is_zero() {
            continue;
        }
        let fp = reduce(f, &fld);
        if fld.gcd(&fp, &fld.derivative(&fp)).len() > 1 {
            continue;
        }
        let facs = modular_factors(f, &fld, &mut rng);
        if facs.len() == 1 {
            return vec![f.to_vec()];
        }
        if best.as_ref().is_none_or(|(_, b)| facs.len() < b.len()) {
            best = Some((fld, facs));
        }
        tried += 1;
        if tried >= 5 {
            break;
        }
    }
    let (fld, modf) = best.unwrap_or_else(|| panic!("no admissible prime for factorization"));

    // Lift until p^k exceeds twice the coefficient bound for lc * (any factor).
    let bound: BigInt =
        lc.abs() * (BigInt::one() << deg) * z_norm2_ceil(f) * BigInt::from(2) + BigInt::one();
    let (lifted, modulus) = hensel_lift(f, &fld, &modf, &bound);
    recombine(f, lifted, &modulus)
}

/// Multifactor linear Hensel lifting of `f ≡ lc * prod g_i (mod p)`.
fn hensel_lift(
    f: &[BigInt],
    fld: &Field,
    factors: &[MPoly],
    bound: &BigInt,
) -> (Vec<Vec<BigInt>>, BigInt) {
    let p = BigInt::from(fld.p);
    let lc = f.last().unwrap().clone();
    let lc_inv = fld.inv(lc.mod_floor(&p).to_u64().unwrap());
    // s_i = (prod_{j != i} g_j)^{-1} mod g_i
    let cof: Vec<MPoly> = (0..factors.len())
        .map(|i| {
            let mut prod: MPoly = vec![1];
            for (j, g) in factors.iter().enumerate() {
                if j != i {
                    prod = fld.mul_poly(&prod, g);
                }
            }
            let (g, s, _) = fld.ext_gcd(&fld.rem(&prod, &factors[i]), &factors[i]);
            debug_assert_eq!(g, vec![1]);
            s
        })
        .collect();

    let mut gs: Vec<Vec<BigInt>> = factors
        .iter()
        .map(|g| g.iter().map(|&v| BigInt::from(v)).collect())
        .collect();
    let mut q = p.clone();
    while &q <= bound {
        let mut prod = vec![lc.clone()];
        for g in &gs {
            prod = z_mul(&prod, g);
        }
        let n = f.len().max(prod.len());
        let err: Vec<BigInt> = (0..n)
            .map(|i| {
                let a = f.get(i).cloned().unwrap_or_default();
                let b = prod.get(i).cloned().unwrap_or_default();
                let d = a - b;
                debug_assert!((&d % &q).is_zero());
                d / &q
            })
            .collect();
        let e = fld.scale_poly(&reduce(&err, fld), lc_inv);
        for (g, s) in gs.iter_mut().zip(&cof) {
            let delta = fld.rem(&fld.mul_poly(&e, s), &reduce(g, fld));
            for (i, dv) in delta.iter().enumerate() {
                g[i] += &q * BigInt::from(*dv);
            }
        }
        q *= &p;
    }
    (gs, q)
}

fn symmetric(v: &BigInt, m: &BigInt) -> BigInt {
    let r = v.mod_floor(m);
    if &r * 2 > *m {
        r - m
    } else {
        r
    }
}

fn recombine(f: &[BigInt], lifted: Vec<Vec<BigInt>>, q: &BigInt) -> Vec<Vec<BigInt>> {
    let mut remaining = lifted;
    let mut cur = f.to_vec();
    let mut out = Vec::new();
    let mut s = 1;
    while 2 * s <= remaining.len() {
        let mut found = None;
        let lc = cur.last().unwrap().clone();
        for subset in combinations(remaining.len(), s) {
            let mut cand = vec![lc.clone()];
            for &i in &subset {
                cand = z_mul(&cand, &remaining[i]);
                cand = cand.iter().map(|v| symmetric(v, q)).collect();
            }
            let cand = positive_primitive(z_trim(cand));
            if let Some(quo) = z_div_exact(&cur, &cand) {
                found = Some((subset, cand, quo));
                break;
            }
        }
        match found {
            Some((subset, cand, quo)) => {
                out.push(cand);
                cur = quo;
                let mut idx = 0;
                remaining.retain(|_| {
                    let keep = !subset.contains(&idx);
                    idx += 1;
                    keep
                });
            }
            None => s += 1,
        }
    }
    if cur.len() > 1 {
        out.push(positive_primitive(cur));
    }
    out
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::with_capacity(k), &mut out);
    out
}
