//! Levine–Tristram signatures and their circle average ρ₀.
//!
//! For `ω = e^{iθ}`, `θ ∈ (0, π)`, the form `(1 - ω)V + (1 - ω̄)V^T` divided by
//! `sin θ > 0` is `u S + i A` with `u = tan(θ/2)`, `S = V + V^T`, `A = V^T - V`.
//! At rational `u` its signature is computed exactly from the real symmetric
//! embedding `[[uS, -A], [A, uS]]`, which has every eigenvalue doubled.
//! Jumps can only occur at unit-circle roots of Δ, located exactly through
//! `x = t + 1/t = 2 cos θ`; only arc lengths are evaluated numerically.

use super::numeric::{half_arccos_over_pi, pi_enclosure, to_decimal, to_f64};
use super::SeifertMatrix;
use crate::error::{Error, Result};
use crate::poly::cyclotomic::{cyclotomic_order, root_of_unity_order};
use crate::poly::cyclotomic::cyclotomic_laurent;
use crate::poly::factor::factor;
use crate::poly::laurent::LaurentPoly;
use crate::poly::qpoly::{rat, Rational};
use crate::poly::roots::{trace_polynomial, RootInterval, Sturm};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt::Write as _;

/// Exact signature of a rational symmetric matrix, as `(positive, negative)` counts.
pub fn inertia(mut m: Vec<Vec<Rational>>) -> (usize, usize) {
    let (mut pos, mut neg) = (0, 0);
    while !m.is_empty() {
        let n = m.len();
        let k = match (0..n).find(|&i| !m[i][i].is_zero()) {
            Some(k) => k,
            None => {
                let Some((i, j)) = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).find(|&(i, j)| !m[i][j].is_zero())
                else {
                    break;
                };
                // congruence: row_i += row_j, col_i += col_j makes m[i][i] = 2 m[i][j]
                for c in 0..n {
                    let v = m[j][c].clone();
                    m[i][c] += v;
                }
                for r in 0..n {
                    let v = m[r][j].clone();
                    m[r][i] += v;
                }
                i
            }
        };
        let p = m[k][k].clone();
        if p.is_positive() {
            pos += 1;
        } else {
            neg += 1;
        }
        let col: Vec<Rational> = (0..n).map(|r| m[r][k].clone()).collect();
        let mut next = Vec::with_capacity(n - 1);
        for r in (0..n).filter(|&r| r != k) {
            let f = &col[r] / &p;
            let row: Vec<Rational> =
                (0..n).filter(|&c| c != k).map(|c| &m[r][c] - &(&f * &m[k][c])).collect();
            next.push(row);
        }
        m = next;
    }
    (pos, neg)
}

/// Signature at the angle with `tan(θ/2) = u`, `u > 0`.
pub fn signature_at_tan(v: &SeifertMatrix, u: &Rational) -> i64 {
    let n = v.dim();
    if n == 0 {
        return 0;
    }
    let e = v.entries();
    let mut big = vec![vec![Rational::zero(); 2 * n]; 2 * n];
    for i in 0..n {
        for j in 0..n {
            let s = u * rat(e[i][j] + e[j][i]);
            let a = rat(e[j][i] - e[i][j]);
            big[i][j] = s.clone();
            big[n + i][n + j] = s;
            big[i][n + j] = -a.clone();
            big[n + i][j] = a;
        }
    }
    let (p, q) = inertia(big);
    (p as i64 - q as i64) / 2
}

/// A unit-circle root `e^{iθ}` of Δ with `θ ∈ (0, π)`.
#[derive(Clone, Debug)]
pub struct JumpPoint {
    /// The irreducible factor of Δ having this root.
    pub factor: LaurentPoly,
    /// Isolating interval for `x = 2 cos θ`.
    pub interval: RootInterval,
    /// `θ / π` when the root is a root of unity.
    pub exact: Option<Rational>,
    sturm: Sturm,
}

impl JumpPoint {
    /// Enclosure of `θ / π` of width at most `2^-bits`.
    pub fn enclosure(&self, bits: u32) -> (Rational, Rational) {
        if let Some(e) = &self.exact {
            return (e.clone(), e.clone());
        }
        let target = Rational::new(BigInt::one(), BigInt::one() << bits);
        let mut iv_bits = bits + 4;
        loop {
            let iv = self.sturm.refine(&self.interval, &Rational::new(BigInt::one(), BigInt::one() << iv_bits));
            // θ decreases as x increases
            let lo = half_arccos_over_pi(&iv.hi, bits + 4).0;
            let hi = half_arccos_over_pi(&iv.lo, bits + 4).1;
            if &hi - &lo <= target {
                return (lo, hi);
            }
            iv_bits += 8;
        }
    }

    fn refine_x(&mut self) {
        let w = self.interval.width() / rat(4);
        self.interval = self.sturm.refine(&self.interval, &w);
    }

    pub fn describe(&self) -> String {
        match &self.exact {
            Some(e) => format!("theta = {e}*pi (root of {})", self.factor),
            None => {
                let (lo, hi) = self.enclosure(40);
                let mid = (lo + hi) / rat(2);
                format!("theta ~ {}*pi (root of {})", to_decimal(&mid, 9), self.factor)
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignatureArc {
    /// Index of the jump that starts the arc (`None` for `θ = 0`).
    pub start: Option<usize>,
    /// Index of the jump that ends the arc (`None` for `θ = π`).
    pub end: Option<usize>,
    pub signature: i64,
}

/// Step function `θ ↦ σ(θ)` on `(0, π)`, symmetric under `θ ↦ 2π - θ`.
#[derive(Clone, Debug)]
pub struct SignatureProfile {
    pub jumps: Vec<JumpPoint>,
    /// `signatures[i]` holds on the arc between jumps `i - 1` and `i`.
    pub signatures: Vec<i64>,
    pub genus: usize,
}

impl SignatureProfile {
    pub fn arcs(&self) -> Vec<SignatureArc> {
        let n = self.jumps.len();
        (0..=n)
            .map(|i| SignatureArc {
                start: i.checked_sub(1),
                end: (i < n).then_some(i),
                signature: self.signatures[i],
            })
            .collect()
    }

    /// `θ / π` boundaries of the arcs, each as an enclosure.
    fn boundaries(&self, bits: u32) -> Vec<(Rational, Rational)> {
        let mut b = vec![(Rational::zero(), Rational::zero())];
        b.extend(self.jumps.iter().map(|j| j.enclosure(bits)));
        b.push((rat(1), rat(1)));
        b
    }

    /// `ρ₀` exactly, when every jump sits at a root of unity.
    pub fn exact_average(&self) -> Option<Rational> {
        let mut acc = Rational::zero();
        let mut prev = Rational::zero();
        for (i, j) in self.jumps.iter().enumerate() {
            let e = j.exact.clone()?;
            acc += rat(self.signatures[i]) * (&e - &prev);
            prev = e;
        }
        acc += rat(*self.signatures.last().unwrap()) * (rat(1) - prev);
        Some(acc)
    }

    /// Approximation of `ρ₀` with an error bound.
    pub fn average(&self, bits: u32) -> (Rational, Rational) {
        let b = self.boundaries(bits);
        let mut acc = Rational::zero();
        let mut err = Rational::zero();
        for (i, s) in self.signatures.iter().enumerate() {
            let start = (&b[i].0 + &b[i].1) / rat(2);
            let end = (&b[i + 1].0 + &b[i + 1].1) / rat(2);
            acc += rat(*s) * (end - start);
            err += rat(s.abs()) * (b[i].1.clone() - &b[i].0 + &b[i + 1].1 - &b[i + 1].0);
        }
        (acc, err)
    }

    /// CSV rows `theta_start,theta_end,signature` with θ in radians.
    pub fn to_csv(&self, digits: usize) -> String {
        let bits = bits_for_digits(digits) + 8;
        let b = self.boundaries(bits);
        let (pl, ph) = pi_enclosure(bits);
        let pi = (pl + ph) / rat(2);
        let mut out = String::from("theta_start,theta_end,signature\n");
        for (i, s) in self.signatures.iter().enumerate() {
            let a = (&b[i].0 + &b[i].1) / rat(2) * &pi;
            let e = (&b[i + 1].0 + &b[i + 1].1) / rat(2) * &pi;
            writeln!(out, "{},{},{}", to_decimal(&a, digits), to_decimal(&e, digits), s).unwrap();
        }
        out
    }

    /// A self-contained SVG step plot of the signature function on `[0, π]`.
    pub fn to_svg(&self) -> String {
        let (w, h, pad) = (640.0, 320.0, 40.0);
        let smax = self.signatures.iter().map(|s| s.abs()).max().unwrap_or(0).max(2) as f64;
        let b = self.boundaries(40);
        let xs: Vec<f64> = b.iter().map(|(lo, hi)| to_f64(&((lo + hi) / rat(2)))).collect();
        let px = |x: f64| pad + x * (w - 2.0 * pad);
        let py = |s: f64| h / 2.0 - s / smax * (h / 2.0 - pad);
        let mut path = String::new();
        for (i, s) in self.signatures.iter().enumerate() {
            let y = py(*s as f64);
            let cmd = if i == 0 { 'M' } else { 'L' };
            write!(path, "{cmd}{:.2},{:.2} L{:.2},{:.2} ", px(xs[i]), y, px(xs[i + 1]), y).unwrap();
        }
        let mut svg = String::new();
        writeln!(svg, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#).unwrap();
        writeln!(svg, r#"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="gray"/>"#, px(0.0), py(0.0), px(1.0), py(0.0)).unwrap();
        writeln!(svg, r#"<path d="{}" fill="none" stroke="black" stroke-width="2"/>"#, path.trim_end()).unwrap();
        for x in &xs[1..xs.len() - 1] {
            writeln!(svg, r#"<line x1="{0:.2}" y1="{1:.2}" x2="{0:.2}" y2="{2:.2}" stroke="red" stroke-dasharray="4"/>"#, px(*x), pad, h - pad).unwrap();
        }
        writeln!(svg, r#"<text x="{:.2}" y="{:.2}" font-size="12">0</text>"#, px(0.0), h - 10.0).unwrap();
        writeln!(svg, r#"<text x="{:.2}" y="{:.2}" font-size="12">pi</text>"#, px(1.0), h - 10.0).unwrap();
        writeln!(svg, r#"<text x="5" y="{:.2}" font-size="12">{}</text>"#, py(smax), smax).unwrap();
        writeln!(svg, r#"<text x="5" y="{:.2}" font-size="12">{}</text>"#, py(-smax), -smax).unwrap();
        svg.push_str("</svg>\n");
        svg
    }
}

pub fn bits_for_digits(digits: usize) -> u32 {
    (digits as f64 * std::f64::consts::LOG2_10).ceil() as u32 + 8
}

fn jumps_of_factor(f: &LaurentPoly) -> Vec<JumpPoint> {
    if f.span() < 2 || !f.is_self_reciprocal() {
        return vec![];
    }
    let (q, _, _) = trace_polynomial(f);
    let sturm = Sturm::new(&q);
    let mut roots = sturm.isolate(&rat(-2), &rat(2));
    // ascending θ is descending x
    roots.reverse();
    let angles: Option<Vec<Rational>> = cyclotomic_order(f).map(|d| {
        (1..d)
            .filter(|j| 2 * j < d && j.gcd(&d) == 1)
            .map(|j| Rational::new(BigInt::from(2 * j), BigInt::from(d)))
            .collect()
    });
    roots
        .into_iter()
        .enumerate()
        .map(|(i, iv)| JumpPoint {
            factor: f.clone(),
            interval: iv,
            exact: angles.as_ref().map(|a| a[i].clone()),
            sturm: sturm.clone(),
        })
        .collect()
}

/// Sort jumps by descending x, refining until their intervals are strictly separated.
fn separate(mut jumps: Vec<JumpPoint>) -> Vec<JumpPoint> {
    for j in jumps.iter_mut() {
        while j.interval.hi >= rat(2) || j.interval.lo <= rat(-2) {
            j.refine_x();
        }
    }
    loop {
        jumps.sort_by(|a, b| b.interval.midpoint().cmp(&a.interval.midpoint()));
        let mut clean = true;
        for i in 0..jumps.len().saturating_sub(1) {
            if jumps[i + 1].interval.hi >= jumps[i].interval.lo {
                clean = false;
                jumps[i].refine_x();
                jumps[i + 1].refine_x();
            }
        }
        if clean {
            return jumps;
        }
    }
}

/// A rational `u > 0` with `lo < u^2 < hi` (`hi = None` for no upper bound).
fn rational_sqrt_between(lo: &Rational, hi: Option<&Rational>) -> Rational {
    let mut m = 0u32;
    loop {
        let scale = BigInt::one() << (2 * m);
        let y = (lo * Rational::from_integer(scale)).floor().to_integer();
        let c = y.sqrt() + 1;
        let u = Rational::new(c, BigInt::one() << m);
        if hi.is_none_or(|h| &(&u * &u) < h) {
            return u;
        }
        m += 1;
    }
}

/// `tan^2(θ/2)` as a function of `x = 2 cos θ`.
fn tan_half_sq(x: &Rational) -> Rational {
    (rat(2) - x) / (rat(2) + x)
}

pub fn signature_profile(v: &SeifertMatrix) -> SignatureProfile {
    let delta = v.alexander_poly();
    let mut jumps = Vec::new();
    if !delta.is_unit() {
        for f in factor(&delta).expect("nonzero Alexander polynomial").primes() {
            jumps.extend(jumps_of_factor(&f));
        }
    }
    let jumps = separate(jumps);
    // sample one u per arc; arc i lies between x-intervals i-1 (above) and i (below)
    let n = jumps.len();
    let mut signatures = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let x_hi = if i == 0 { rat(2) } else { jumps[i - 1].interval.lo.clone() };
        let x_lo = if i == n { None } else { Some(jumps[i].interval.hi.clone()) };
        let lo = tan_half_sq(&x_hi);
        let hi = x_lo.as_ref().map(tan_half_sq);
        let u = rational_sqrt_between(&lo, hi.as_ref());
        signatures.push(signature_at_tan(v, &u));
    }
    SignatureProfile { jumps, signatures, genus: v.genus() }
}

/// Signature at `θ = frac · π`, `0 < frac < 1`.
pub fn signature_at(v: &SeifertMatrix, frac: &Rational) -> Result<i64> {
    if !frac.is_positive() || *frac >= rat(1) {
        return Err(Error::InvalidArgument(format!("angle {frac}*pi is outside (0, pi)")));
    }
    let (a, b) = (frac.numer().clone(), frac.denom().clone());
    use num_traits::ToPrimitive;
    let (Some(a), Some(b)) = (a.to_i64(), b.to_i64()) else {
        return Err(Error::InvalidArgument("angle denominator too large".into()));
    };
    let delta = v.alexander_poly();
    let d = root_of_unity_order(a, b);
    if d <= 100_000 && !delta.is_unit() && cyclotomic_laurent(d).divides(&delta) {
        return Err(Error::JumpPoint(format!("{frac}*pi")));
    }
    let profile = signature_profile(v);
    let mut arc = 0;
    for j in &profile.jumps {
        let below = match &j.exact {
            Some(e) => e < frac,
            None => {
                let mut bits = 32;
                loop {
                    let (lo, hi) = j.enclosure(bits);
                    if &hi < frac {
                        break true;
                    }
                    if &lo > frac {
                        break false;
                    }
                    bits += 32;
                }
            }
        };
        if below {
            arc += 1;
        }
    }
    Ok(profile.signatures[arc])
}

/// Alias taking the angle as numerator and denominator of `θ / π`.
pub fn signature_at_fraction(v: &SeifertMatrix, num: i64, den: i64) -> Result<i64> {
    if den == 0 {
        return Err(Error::InvalidArgument("zero denominator".into()));
    }
    signature_at(v, &Rational::new(num.into(), den.into()))
}

/// The circle average of the Levine–Tristram signature (normalized measure).
#[derive(Clone, Debug)]
pub struct Rho0Value {
    pub profile: SignatureProfile,
    /// Midpoint approximation.
    pub value: Rational,
    /// Rigorous bound on `|value - ρ₀|`.
    pub error: Rational,
    /// Present when every jump is at a root of unity.
    pub exact: Option<Rational>,
    pub precision: usize,
}

impl Rho0Value {
    pub fn decimal(&self) -> String {
        to_decimal(self.exact.as_ref().unwrap_or(&self.value), self.precision)
    }

    pub fn to_f64(&self) -> f64 {
        to_f64(self.exact.as_ref().unwrap_or(&self.value))
    }
}

pub fn rho0(v: &SeifertMatrix, precision: usize) -> Rho0Value {
    let profile = signature_profile(v);
    let exact = profile.exact_average();
    let bits = bits_for_digits(precision) + 2 * (64 - (profile.jumps.len() as u64 + 1).leading_zeros());
    let (value, error) = match &exact {
        Some(e) => (e.clone(), Rational::zero()),
        None => profile.average(bits),
    };
    Rho0Value { profile, value, error, exact, precision }
}
