//! Strong coprimality and isogeny of Laurent polynomials.
//!
//! `p` and `q` are isogenous when `gcd(p(t^n), q(t^k)) != 1` for some nonzero
//! integers `n, k`. A shared root `z` of `p(t^n)` and `q(t^k)` gives roots
//! `r = z^n`, `s = z^k` with `r^k = s^n`; conversely `r^k = s^n` with `n, k`
//! coprime gives `z = r^x s^y` (with `x k + y n = 1`) satisfying `z^n = r`,
//! `z^k = s`. All decisions below work with coprime exponent pairs.

use crate::error::{Error, Result};
use crate::poly::cyclotomic::cyclotomic_order;
use crate::poly::factor::factor;
use crate::poly::laurent::LaurentPoly;
use crate::poly::qpoly::{rat, QPoly, Rational};
use crate::poly::roots::{trace_polynomial, Sturm};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

pub const DEFAULT_BOUND: u32 = 12;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RootClass {
    RationalRoot(Rational),
    RootOfUnity(u64),
    GeneralAlgebraic { minimal: LaurentPoly, unit_circle: bool },
}

impl RootClass {
    /// Multiplicative order if the root is torsion (`±1` count as orders 1 and 2).
    pub fn torsion_order(&self) -> Option<u64> {
        match self {
            RootClass::RootOfUnity(d) => Some(*d),
            RootClass::RationalRoot(r) if r.is_one() => Some(1),
            RootClass::RationalRoot(r) if *r == -Rational::one() => Some(2),
            _ => None,
        }
    }
}

/// Classify the roots of an irreducible polynomial. The list has one entry
/// per complex root (all conjugates share a class).
pub fn classify_roots(f: &LaurentPoly) -> Result<Vec<RootClass>> {
    let class = classify_irreducible(f)?;
    Ok(vec![class; f.span()])
}

fn classify_irreducible(f: &LaurentPoly) -> Result<RootClass> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial("classify_roots"));
    }
    if f.is_unit() {
        return Err(Error::InvalidArgument(format!("{f} is a unit and has no roots")));
    }
    if !factor(f)?.is_irreducible() {
        return Err(Error::InvalidArgument(format!("{f} is reducible")));
    }
    Ok(classify_prime(f))
}

/// Classification for a polynomial already known to be irreducible.
fn classify_prime(f: &LaurentPoly) -> RootClass {
    let b = f.body();
    if b.deg() == 1 {
        return RootClass::RationalRoot(-b.coeff(0) / b.coeff(1));
    }
    if let Some(d) = cyclotomic_order(f) {
        return RootClass::RootOfUnity(d);
    }
    RootClass::GeneralAlgebraic { minimal: f.normalize(), unit_circle: all_roots_on_unit_circle(f) }
}

/// True iff every root of the (irreducible, degree >= 2) polynomial lies on |z| = 1.
fn all_roots_on_unit_circle(f: &LaurentPoly) -> bool {
    if !f.is_self_reciprocal() || f.span() % 2 == 1 {
        return false;
    }
    let (q, a, b) = trace_polynomial(f);
    if a + b > 0 {
        return false;
    }
    // roots z on the circle <=> x = z + 1/z real in [-2, 2]; x = ±2 would mean z = ±1
    let s = Sturm::new(&q);
    s.count(&rat(-2), &rat(2)) == s.poly().deg()
}

// ---------------------------------------------------------------------------
// rational roots

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Dependence {
    /// `r^k = s^n`.
    Dependent { k: i64, n: i64 },
    Independent,
}

/// Refine a list of positive integers into a pairwise coprime basis.
fn coprime_basis(nums: &[BigInt]) -> Vec<BigInt> {
    let mut basis: Vec<BigInt> = nums.iter().filter(|x| !x.is_one()).cloned().collect();
    loop {
        let mut split = None;
        'outer: for i in 0..basis.len() {
            for j in i + 1..basis.len() {
                let g = basis[i].gcd(&basis[j]);
                if !g.is_one() {
                    split = Some((i, j, g));
                    break 'outer;
                }
            }
        }
        let Some((i, j, g)) = split else { break };
        let a = &basis[i] / &g;
        let b = &basis[j] / &g;
        basis.remove(j);
        basis.remove(i);
        for x in [a, b, g] {
            if !x.is_one() {
                basis.push(x);
            }
        }
    }
    basis.sort();
    basis.dedup();
    basis
}

fn valuation(mut x: BigInt, b: &BigInt) -> i64 {
    let mut v = 0;
    while (&x % b).is_zero() {
        x /= b;
        v += 1;
    }
    v
}

fn exponent_vector(r: &Rational, basis: &[BigInt]) -> Vec<i64> {
    let num = r.numer().abs();
    let den = r.denom().clone();
    basis.iter().map(|b| valuation(num.clone(), b) - valuation(den.clone(), b)).collect()
}

fn torsion_order_rat(r: &Rational) -> Option<i64> {
    if r.is_one() {
        Some(1)
    } else if *r == -Rational::one() {
        Some(2)
    } else {
        None
    }
}

/// Smallest coprime `(k, n)` with `k > 0` and `|r|^k = |s|^n`, if any.
fn abs_relation(r: &Rational, s: &Rational) -> Option<(i64, i64)> {
    let basis = coprime_basis(&[r.numer().abs(), r.denom().clone(), s.numer().abs(), s.denom().clone()]);
    let a = exponent_vector(r, &basis);
    let b = exponent_vector(s, &basis);
    let i = a.iter().position(|x| *x != 0)?;
    if b[i] == 0 {
        return None;
    }
    // k a = n b
    let g = a[i].gcd(&b[i]);
    let (mut k, mut n) = (b[i] / g, a[i] / g);
    if k < 0 {
        k = -k;
        n = -n;
    }
    a.iter().zip(&b).all(|(x, y)| k * x == n * y).then_some((k, n))
}

/// Decide whether `r^k = s^n` for some nonzero integers `k, n`.
pub fn rationals_multiplicatively_dependent(r: &Rational, s: &Rational) -> Result<Dependence> {
    if r.is_zero() || s.is_zero() {
        return Err(Error::InvalidArgument("zero is not a unit".into()));
    }
    match (torsion_order_rat(r), torsion_order_rat(s)) {
        (Some(_), Some(_)) if r == s => return Ok(Dependence::Dependent { k: 1, n: 1 }),
        (Some(a), Some(b)) => return Ok(Dependence::Dependent { k: a, n: b }),
        (Some(_), None) | (None, Some(_)) => return Ok(Dependence::Independent),
        _ => {}
    }
    let Some((mut k, mut n)) = abs_relation(r, s) else {
        return Ok(Dependence::Independent);
    };
    let neg_r = r.is_negative() && k % 2 != 0;
    let neg_s = s.is_negative() && n % 2 != 0;
    if neg_r != neg_s {
        k *= 2;
        n *= 2;
    }
    Ok(Dependence::Dependent { k, n })
}

// ---------------------------------------------------------------------------
// verdicts

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    /// `p(t^n)` and `q(t^k)` share a root.
    pub n: i64,
    pub k: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IsogenyStatus {
    StronglyCoprime { exact: bool },
    Isogenous { witness: Witness },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsogenyVerdict {
    pub status: IsogenyStatus,
    pub bound_used: Option<u32>,
    /// Human-readable description of the deciding root pair.
    pub reason: String,
}

impl IsogenyVerdict {
    pub fn is_strongly_coprime(&self) -> bool {
        matches!(self.status, IsogenyStatus::StronglyCoprime { .. })
    }

    pub fn is_isogenous(&self) -> bool {
        !self.is_strongly_coprime()
    }

    pub fn is_exact(&self) -> bool {
        !matches!(self.status, IsogenyStatus::StronglyCoprime { exact: false })
    }

    pub fn witness(&self) -> Option<Witness> {
        match self.status {
            IsogenyStatus::Isogenous { witness } => Some(witness),
            _ => None,
        }
    }

    pub fn to_json(&self) -> IsogenyJson {
        IsogenyJson {
            status: if self.is_isogenous() { "isogenous" } else { "strongly_coprime" }.into(),
            exact: self.is_exact(),
            witness: self.witness(),
            bound: self.bound_used,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsogenyJson {
    pub status: String,
    pub exact: bool,
    pub witness: Option<Witness>,
    pub bound: Option<u32>,
}

enum PairOutcome {
    Isogenous(Witness, String),
    Coprime { exact: bool },
}

/// Witness from a relation `r^a = s^b` with `gcd(a, b) = 1`.
fn witness_from_relation(a: i64, b: i64) -> Witness {
    let (n, k) = if b < 0 { (-b, -a) } else { (b, a) };
    Witness { n, k }
}

fn decide_pair(f: &LaurentPoly, cf: &RootClass, g: &LaurentPoly, cg: &RootClass, bound: u32) -> PairOutcome {
    use RootClass::*;
    match (cf.torsion_order(), cg.torsion_order()) {
        (Some(d), Some(e)) => {
            let l = d.lcm(&e);
            return PairOutcome::Isogenous(
                Witness { n: (l / d) as i64, k: (l / e) as i64 },
                format!("roots of unity of orders {d} and {e}"),
            );
        }
        (Some(_), None) | (None, Some(_)) => return PairOutcome::Coprime { exact: true },
        _ => {}
    }
    match (cf, cg) {
        (RationalRoot(r), RationalRoot(s)) => match abs_relation(r, s) {
            Some((a, b)) => {
                let neg_r = r.is_negative() && a % 2 != 0;
                let neg_s = s.is_negative() && b % 2 != 0;
                if neg_r == neg_s {
                    PairOutcome::Isogenous(witness_from_relation(a, b), format!("({r})^{a} = ({s})^{b}"))
                } else {
                    PairOutcome::Coprime { exact: true }
                }
            }
            None => PairOutcome::Coprime { exact: true },
        },
        (RationalRoot(_), GeneralAlgebraic { unit_circle: true, .. })
        | (GeneralAlgebraic { unit_circle: true, .. }, RationalRoot(_)) => PairOutcome::Coprime { exact: true },
        (GeneralAlgebraic { unit_circle: a, .. }, GeneralAlgebraic { unit_circle: b, .. }) if a != b => {
            PairOutcome::Coprime { exact: true }
        }
        _ if norms_obstruct(f, g) => PairOutcome::Coprime { exact: true },
        _ => match sweep(f, g, bound) {
            Some(w) => PairOutcome::Isogenous(w, format!("shared root of {f} at t^{} and {g} at t^{}", w.n, w.k)),
            None => PairOutcome::Coprime { exact: false },
        },
    }
}

/// Norm test for irreducible `f`, `g` of degrees `a`, `b` with roots `r`, `s`.
/// If `r^k = s^n` then taking norms down to `Q(r^k)` gives
/// `|N(r)|^(k b) = |N(s)|^(n a)`, so the two absolute norms are both 1 or
/// multiplicatively dependent. True when neither holds.
fn norms_obstruct(f: &LaurentPoly, g: &LaurentPoly) -> bool {
    let norm = |h: &LaurentPoly| {
        let b = h.body();
        (b.coeff(0) / b.lc()).abs()
    };
    let (x, y) = (norm(f), norm(g));
    match (x.is_one(), y.is_one()) {
        (true, true) => false,
        (true, false) | (false, true) => true,
        (false, false) => abs_relation(&x, &y).is_none(),
    }
}

/// Power sums `s_1..s_m` of the roots of a polynomial.
fn power_sums(f: &QPoly, m: usize) -> Vec<Rational> {
    let f = f.monic();
    let d = f.deg();
    // e_i = (-1)^i a_{d-i}
    let e: Vec<Rational> = (0..=d)
        .map(|i| {
            let a = f.coeff(d - i);
            if i % 2 == 0 {
                a
            } else {
                -a
            }
        })
        .collect();
    let mut s = vec![Rational::zero(); m + 1];
    for j in 1..=m {
        let mut acc = Rational::zero();
        for i in 1..j.min(d + 1) {
            let term = &e[i] * &s[j - i];
            if i % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        if j <= d {
            let term = &e[j] * rat(j as i64);
            if j % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        s[j] = acc;
    }
    s
}

/// Monic polynomial of degree `d` from power sums `s_1..s_d` of its roots.
fn from_power_sums(s: &[Rational], d: usize) -> QPoly {
    let mut e = vec![Rational::one()];
    for m in 1..=d {
        let mut acc = Rational::zero();
        for i in 1..=m {
            let term = &e[m - i] * &s[i];
            if i % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        e.push(acc / rat(m as i64));
    }
    let c: Vec<Rational> = (0..=d)
        .map(|j| {
            // coefficient of x^j is (-1)^(d-j) e_{d-j}
            let i = d - j;
            if i % 2 == 0 {
                e[i].clone()
            } else {
                -e[i].clone()
            }
        })
        .collect();
    QPoly::new(c)
}

/// Sums of powers `s_j` for the polynomial and its reciprocal.
struct PowerTable {
    d: usize,
    pos: Vec<Rational>,
    neg: Vec<Rational>,
}

impl PowerTable {
    fn new(f: &LaurentPoly, bound: usize) -> Self {
        let d = f.span();
        PowerTable {
            d,
            pos: power_sums(f.body(), d * bound),
            neg: power_sums(&f.body().reverse(), d * bound),
        }
    }

    /// Polynomial whose roots are the `k`-th powers of the roots.
    fn power_poly(&self, k: i64) -> QPoly {
        let src = if k > 0 { &self.pos } else { &self.neg };
        let k = k.unsigned_abs() as usize;
        let s: Vec<Rational> = (0..=self.d).map(|j| if j == 0 { rat(self.d as i64) } else { src[j * k].clone() }).collect();
        from_power_sums(&s, self.d)
    }
}

/// Search coprime `(n, k)` with `1 <= n <= bound`, `1 <= |k| <= bound` for a
/// shared root of `f(t^n)` and `g(t^k)`.
fn sweep(f: &LaurentPoly, g: &LaurentPoly, bound: u32) -> Option<Witness> {
    let b = bound as usize;
    let ft = PowerTable::new(f, b);
    let gt = PowerTable::new(g, b);
    let mut g_pows: Vec<QPoly> = Vec::new();
    for n in 1..=b {
        g_pows.push(gt.power_poly(n as i64));
    }
    for kk in 1..=bound as i64 {
        for k in [kk, -kk] {
            let fk = ft.power_poly(k);
            for n in 1..=bound as i64 {
                if n.gcd(&k) != 1 {
                    continue;
                }
                if fk.gcd(&g_pows[(n - 1) as usize]).deg() > 0 {
                    let w = Witness { n, k };
                    if verify_witness(f, g, w) {
                        return Some(w);
                    }
                }
            }
        }
    }
    None
}

/// Direct check that `gcd(p(t^n), q(t^k)) != 1`.
pub fn verify_witness(p: &LaurentPoly, q: &LaurentPoly, w: Witness) -> bool {
    let (Ok(a), Ok(b)) = (p.substitute_power(w.n), q.substitute_power(w.k)) else {
        return false;
    };
    a.gcd(&b).map(|g| !g.is_unit()).unwrap_or(false)
}

/// Decide strong coprimality of `p` and `q`.
pub fn strongly_coprime(p: &LaurentPoly, q: &LaurentPoly, bound: u32) -> Result<IsogenyVerdict> {
    if p.is_zero() || q.is_zero() {
        return Err(Error::ZeroPolynomial("strongly_coprime"));
    }
    if bound == 0 {
        return Err(Error::InvalidArgument("isogeny bound must be positive".into()));
    }
    let fp: Vec<(LaurentPoly, RootClass)> = factor(p)?.primes().into_iter().map(|f| {
        let c = classify_prime(&f);
        (f, c)
    }).collect();
    let fq: Vec<(LaurentPoly, RootClass)> = factor(q)?.primes().into_iter().map(|f| {
        let c = classify_prime(&f);
        (f, c)
    }).collect();
    let mut exact = true;
    for (f, cf) in &fp {
        for (g, cg) in &fq {
            match decide_pair(f, cf, g, cg, bound) {
                PairOutcome::Isogenous(witness, reason) => {
                    return Ok(IsogenyVerdict {
                        status: IsogenyStatus::Isogenous { witness },
                        bound_used: None,
                        reason: format!("factors {f} and {g}: {reason}"),
                    });
                }
                PairOutcome::Coprime { exact: e } => exact &= e,
            }
        }
    }
    Ok(IsogenyVerdict {
        status: IsogenyStatus::StronglyCoprime { exact },
        bound_used: (!exact).then_some(bound),
        reason: if exact {
            "no pair of irreducible factors is isogenous".into()
        } else {
            format!("no shared root of p(t^n), q(t^k) for |n|, |k| <= {bound}")
        },
    })
}

// ---------------------------------------------------------------------------
// log criterion

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LogHint {
    Sufficient,
    NotSufficient,
    NotApplicable,
}

/// For polynomials with only rational roots: strong coprimality follows when
/// the logarithms of the absolute values of each root pair are linearly
/// independent over Q.
pub fn log_independence_hint(p: &LaurentPoly, q: &LaurentPoly) -> Result<LogHint> {
    if p.is_zero() || q.is_zero() {
        return Err(Error::ZeroPolynomial("log_independence_hint"));
    }
    let roots = |x: &LaurentPoly| -> Result<Option<Vec<Rational>>> {
        let mut out = Vec::new();
        for f in factor(x)?.primes() {
            if f.span() != 1 {
                return Ok(None);
            }
            let b = f.body();
            out.push((-b.coeff(0) / b.coeff(1)).abs());
        }
        Ok(Some(out))
    };
    let (Some(rp), Some(rq)) = (roots(p)?, roots(q)?) else {
        return Ok(LogHint::NotApplicable);
    };
    for r in &rp {
        for s in &rq {
            if r.is_one() || s.is_one() || abs_relation(r, s).is_some() {
                return Ok(LogHint::NotSufficient);
            }
        }
    }
    Ok(LogHint::Sufficient)
}

// ---------------------------------------------------------------------------
// sequences

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SequenceRole {
    Target,
    Orders,
}

/// An ordered tuple of nonzero polynomials: a target `P = (p_1, ..., p_n)` or
/// an order sequence listed outermost-first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolySequence {
    pub entries: Vec<LaurentPoly>,
    pub role: SequenceRole,
}

impl PolySequence {
    pub fn new(entries: Vec<LaurentPoly>, role: SequenceRole) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidArgument("empty polynomial sequence".into()));
        }
        if entries.iter().any(|e| e.is_zero()) {
            return Err(Error::ZeroPolynomial("polynomial sequence entry"));
        }
        Ok(PolySequence { entries: entries.iter().map(|e| e.normalize()).collect(), role })
    }

    pub fn target(entries: Vec<LaurentPoly>) -> Result<Self> {
        Self::new(entries, SequenceRole::Target)
    }

    pub fn orders(entries: Vec<LaurentPoly>) -> Result<Self> {
        Self::new(entries, SequenceRole::Orders)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Parse `"p:2t^2-5t+2;p:6t^2-13t+6"` (the `p:` prefix is optional).
    pub fn parse(text: &str, role: SequenceRole) -> Result<Self> {
        let mut entries = Vec::new();
        for part in text.split(';') {
            let part = part.trim();
            if part.is_empty() {
                continue;
            }
            let body = part.strip_prefix("p:").unwrap_or(part);
            entries.push(crate::poly::parse_poly(body)?);
        }
        Self::new(entries, role)
    }

    /// Every entry has augmentation `±1`.
    pub fn has_unit_augmentations(&self) -> bool {
        self.entries.iter().all(|e| e.augmentation().abs().is_one())
    }
}

impl fmt::Display for PolySequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|e| format!("p:{e}")).collect();
        write!(f, "{}", parts.join(";"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CoprimeMode {
    PlainCoprime,
    Strong,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TupleVerdict {
    /// 1-based index of the deciding entry.
    StronglyCoprime { index: usize, mode: CoprimeMode, exact: bool },
    Isogenous,
}

impl TupleVerdict {
    pub fn is_strongly_coprime(&self) -> bool {
        matches!(self, TupleVerdict::StronglyCoprime { .. })
    }

    pub fn is_exact(&self) -> bool {
        !matches!(self, TupleVerdict::StronglyCoprime { exact: false, .. })
    }
}

/// Tuple strong coprimality, pairing entries positionally: plain coprimality
/// at index 1, strong coprimality at indices > 1. Reports the first index
/// with an exact decision, falling back to the first bound-qualified one.
pub fn tuple_strongly_coprime(p: &PolySequence, q: &PolySequence, bound: u32) -> Result<TupleVerdict> {
    if p.len() != q.len() {
        return Err(Error::InvalidArgument(format!(
            "sequence lengths differ: {} vs {}",
            p.len(),
            q.len()
        )));
    }
    if q.entries[0].is_coprime(&p.entries[0])? {
        return Ok(TupleVerdict::StronglyCoprime { index: 1, mode: CoprimeMode::PlainCoprime, exact: true });
    }
    let mut fallback = None;
    for i in 1..p.len() {
        let v = strongly_coprime(&q.entries[i], &p.entries[i], bound)?;
        if v.is_strongly_coprime() {
            if v.is_exact() {
                return Ok(TupleVerdict::StronglyCoprime { index: i + 1, mode: CoprimeMode::Strong, exact: true });
            }
            fallback.get_or_insert(TupleVerdict::StronglyCoprime {
                index: i + 1,
                mode: CoprimeMode::Strong,
                exact: false,
            });
        }
    }
    Ok(fallback.unwrap_or(TupleVerdict::Isogenous))
}

/// `p_k(t) = (k t - (k+1)) ((k+1) t - k)` for `k = 1..=kmax`.
pub fn standard_family(kmax: u32) -> Vec<LaurentPoly> {
    (1..=kmax as i64).map(family_member).collect()
}

pub fn family_member(k: i64) -> LaurentPoly {
    let a = LaurentPoly::from_i64(0, &[-(k + 1), k]);
    let b = LaurentPoly::from_i64(0, &[-k, k + 1]);
    (&a * &b).normalize()
}
