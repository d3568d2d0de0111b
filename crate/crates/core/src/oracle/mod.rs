//! Decision procedures for filtration membership of operator-built knots:
//! vanishing at a target sequence `P`, survival modulo the next half level,
//! family independence certificates, disjoint images of operators, and the
//! tree of compositions over a family.

pub mod family;
pub mod lll;

pub use family::{
    family_certificate, fractal_tree, injectivity_report, Conclusion, FamilyCertificate, FamilySpec, FractalTree,
    InjectivityReport, InjectivityStatus, Rho0Status, TreePath,
};

use crate::error::{Error, Result};
use crate::isogeny::{tuple_strongly_coprime, PolySequence, TupleVerdict};
use crate::operator::{order_sequences, KnotExpression};
use crate::poly::qpoly::Rational;
use crate::seifert::{rho0, Rho0Value};
use lll::{integer_relation, Relation};
use num_bigint::BigInt;
use num_traits::{FromPrimitive, Zero};
use serde::Serialize;

/// Citation tags carried by trail entries.
pub mod cite {
    pub const VANISHING: &str = "vanishing-theorem";
    pub const SURVIVAL: &str = "survival-theorem";
    pub const ROBUST: &str = "robust-operator-definition";
    pub const FAMILY: &str = "family-independence-theorem";
    pub const INJECTIVITY: &str = "disjoint-images-theorem";
    pub const CHECKED: &str = "machine-checked";
    pub const ASSERTED: &str = "asserted-input";
    pub const NUMERIC: &str = "numeric-falsifier";
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TrailEntry {
    pub hypothesis: String,
    pub outcome: bool,
    pub cite: String,
}

impl TrailEntry {
    pub fn new(hypothesis: impl Into<String>, outcome: bool, cite: &str) -> Self {
        TrailEntry { hypothesis: hypothesis.into(), outcome, cite: cite.into() }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum VerdictStatus {
    VanishesAtP,
    SurvivesAtP,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ObstructionVerdict {
    pub status: VerdictStatus,
    pub trail: Vec<TrailEntry>,
    /// False when some deciding step relied on the isogeny search bound.
    pub exact: bool,
}

impl ObstructionVerdict {
    pub fn is_vanishing(&self) -> bool {
        self.status == VerdictStatus::VanishesAtP
    }

    pub fn is_survival(&self) -> bool {
        self.status == VerdictStatus::SurvivesAtP
    }
}

fn describe_tuple(v: &TupleVerdict) -> String {
    match v {
        TupleVerdict::StronglyCoprime { index, mode, exact } => {
            let m = match mode {
                crate::isogeny::CoprimeMode::PlainCoprime => "coprime",
                crate::isogeny::CoprimeMode::Strong => "strongly coprime",
            };
            let e = if *exact { "" } else { " within the search bound" };
            format!("entry {index} {m}{e}")
        }
        TupleVerdict::Isogenous => "every entry isogenous".into(),
    }
}

fn arf_entries(expr: &KnotExpression, trail: &mut Vec<TrailEntry>) -> Result<()> {
    for (k, arf) in expr.leaves() {
        let name = k.name().unwrap_or("base");
        trail.push(TrailEntry::new(format!("base knot {name} has Arf invariant 0"), arf == 0, cite::CHECKED));
        if arf != 0 {
            return Err(Error::Precondition(format!("base knot {name} has Arf invariant 1")));
        }
    }
    Ok(())
}

/// Vanishing in the `P`-localized filtration: every order sequence of the
/// expression must be strongly coprime to `P` as a tuple.
pub fn vanishing_verdict(expr: &KnotExpression, p: &PolySequence, bound: u32) -> Result<ObstructionVerdict> {
    let seqs = order_sequences(expr);
    if seqs.sequences.is_empty() {
        return Err(Error::InvalidArgument("expression has no operator levels".into()));
    }
    for q in &seqs.sequences {
        if q.len() != p.len() {
            return Err(Error::InvalidArgument(format!(
                "target has length {} but a path of the expression has depth {}",
                p.len(),
                q.len()
            )));
        }
    }
    let mut trail = Vec::new();
    arf_entries(expr, &mut trail)?;
    let mut all = true;
    let mut exact = true;
    for q in &seqs.sequences {
        let v = tuple_strongly_coprime(p, q, bound)?;
        let sc = v.is_strongly_coprime();
        trail.push(TrailEntry::new(
            format!("order sequence {q} strongly coprime to {p}: {}", describe_tuple(&v)),
            sc,
            cite::VANISHING,
        ));
        all &= sc;
        exact &= v.is_exact();
    }
    let status = if all { VerdictStatus::VanishesAtP } else { VerdictStatus::Inconclusive };
    Ok(ObstructionVerdict { status, trail, exact: if all { exact } else { true } })
}

/// The hypothesis that `ρ₀` of the base knot is not in the rational span of
/// the first-order signatures of the innermost operator.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Rho0Hypothesis {
    pub provenance: Option<String>,
}

impl Rho0Hypothesis {
    pub fn asserted(provenance: &str) -> Self {
        Rho0Hypothesis { provenance: Some(provenance.into()) }
    }
}

/// Digits used when testing `ρ₀` values against asserted signatures.
pub const FALSIFIER_DIGITS: u32 = 15;
/// Coefficient bound for the falsifier's relation search.
pub const FALSIFIER_MAX_COEFF: u64 = 10_000;

/// Rational approximation of an asserted float.
pub fn rational_from_f64(x: f64) -> Rational {
    Rational::from_f64(x).unwrap_or_else(Rational::zero)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FalsifierResult {
    /// A relation holding numerically at the given precision; never certified.
    RefutedRelation { coefficients: Vec<BigInt>, digits: u32 },
    NoRelationFound,
}

/// Integer relation search among `ρ₀` values computed to `digits` places.
pub fn rho0_relation_falsifier(values: &[Rho0Value], max_coeff: u64, digits: u32) -> Result<FalsifierResult> {
    let approx: Vec<Rational> = values.iter().map(|v| v.exact.clone().unwrap_or_else(|| v.value.clone())).collect();
    for v in values {
        let tol = Rational::new(BigInt::from(1), BigInt::from(10).pow(digits));
        if v.error > tol {
            return Err(Error::Precondition(format!(
                "a value is known only to ±{}, coarser than {digits} digits",
                crate::seifert::numeric::to_decimal(&v.error, digits as usize + 2)
            )));
        }
    }
    relation_among(&approx, max_coeff, digits)
}

fn relation_among(x: &[Rational], max_coeff: u64, digits: u32) -> Result<FalsifierResult> {
    match x {
        [] => Err(Error::InvalidArgument("no values given".into())),
        [v] if v.is_zero() => Ok(FalsifierResult::RefutedRelation { coefficients: vec![1.into()], digits }),
        [_] => Ok(FalsifierResult::NoRelationFound),
        _ => Ok(match integer_relation(x, max_coeff, digits)? {
            Relation::Found(c) => FalsifierResult::RefutedRelation { coefficients: c, digits },
            Relation::NotFound => FalsifierResult::NoRelationFound,
        }),
    }
}

/// Is `target` in the rational span of `span` at falsifier precision?
/// Relations not involving `target` are ignored.
pub(crate) fn in_span_numerically(target: &Rational, span: &[Rational]) -> Result<Option<Vec<BigInt>>> {
    if target.is_zero() {
        return Ok(Some(vec![1.into()]));
    }
    let mut uniq: Vec<Rational> = Vec::new();
    for s in span {
        if !s.is_zero() && !uniq.contains(s) {
            uniq.push(s.clone());
        }
    }
    let mut x = vec![target.clone()];
    x.extend(uniq);
    if x.len() == 1 {
        return Ok(None);
    }
    let max_coeff = FALSIFIER_MAX_COEFF;
    let digits = FALSIFIER_DIGITS.max(((x.len() as f64) * (max_coeff as f64).log10() + 2.0).ceil() as u32);
    match relation_among(&x, max_coeff, digits)? {
        FalsifierResult::RefutedRelation { coefficients, .. } if !coefficients[0].is_zero() => Ok(Some(coefficients)),
        _ => Ok(None),
    }
}

/// Survival modulo the next half level of the `P`-localized filtration, for
/// a single chain of operators.
pub fn survival_verdict(
    expr: &KnotExpression,
    p: &PolySequence,
    hypothesis: &Rho0Hypothesis,
) -> Result<ObstructionVerdict> {
    let ops = expr
        .chain_operators()
        .ok_or_else(|| Error::InvalidArgument("survival is decided for single chains only".into()))?;
    if ops.is_empty() {
        return Err(Error::InvalidArgument("expression has no operator levels".into()));
    }
    if ops.len() != p.len() {
        return Err(Error::InvalidArgument(format!(
            "target has length {} but the chain has depth {}",
            p.len(),
            ops.len()
        )));
    }
    let mut trail = Vec::new();
    arf_entries(expr, &mut trail)?;
    let mut ok = true;
    for op in &ops {
        let r = op.robustness()?;
        let detail = match &r {
            crate::operator::Robustness::Robust => String::new(),
            crate::operator::Robustness::NotRobust { reason } => format!(" ({reason})"),
            crate::operator::Robustness::Conditional { missing } => format!(" (missing: {})", missing.join(", ")),
        };
        trail.push(TrailEntry::new(format!("operator {} is robust{detail}", op.name), r.is_robust(), cite::ROBUST));
        ok &= r.is_robust();
    }
    let q = &order_sequences(expr).sequences[0];
    let matches = q.entries.iter().zip(&p.entries).all(|(a, b)| a.unit_eq(b));
    trail.push(TrailEntry::new(format!("order sequence {q} matches {p} entrywise"), matches, cite::SURVIVAL));
    ok &= matches;

    let (base, _) = expr.leaves()[0];
    let name = base.name().unwrap_or("base");
    let r = rho0(base, FALSIFIER_DIGITS as usize + 5);
    let value = r.exact.clone().unwrap_or_else(|| r.value.clone());
    let nonzero = !value.is_zero() || r.exact.is_none();
    trail.push(TrailEntry::new(format!("rho0({name}) = {} is nonzero", r.decimal()), nonzero, cite::CHECKED));
    ok &= nonzero;
    let innermost = ops.last().expect("nonempty chain");
    let fos: Vec<Rational> = innermost.first_order_signatures().into_iter().map(rational_from_f64).collect();
    let relation = if nonzero { in_span_numerically(&value, &fos)? } else { None };
    let no_relation = relation.is_none();
    let rel_text = match &relation {
        Some(c) => format!(
            " (relation {} found at {FALSIFIER_DIGITS} digits)",
            c.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(", ")
        ),
        None => String::new(),
    };
    trail.push(TrailEntry::new(
        format!("no small integer relation between rho0({name}) and the signatures of {}{rel_text}", innermost.name),
        no_relation,
        cite::NUMERIC,
    ));
    ok &= no_relation;
    let asserted = hypothesis.provenance.as_ref().is_some_and(|s| !s.trim().is_empty());
    trail.push(TrailEntry::new(
        format!(
            "rho0({name}) outside the rational span of the signatures of {}: {}",
            innermost.name,
            hypothesis.provenance.as_deref().unwrap_or("no assertion given")
        ),
        asserted,
        cite::ASSERTED,
    ));
    ok &= asserted;
    let status = if ok { VerdictStatus::SurvivesAtP } else { VerdictStatus::Inconclusive };
    Ok(ObstructionVerdict { status, trail, exact: true })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::isogeny::family_member;
    use crate::library::{family_operator, knot_5_2, right_trefoil, uncertified_family_operator};
    use crate::operator::compose;
    use crate::seifert::SeifertMatrix;

    fn chain(k: i64, m: i64, base: SeifertMatrix) -> KnotExpression {
        compose(&[family_operator(k), family_operator(m)], KnotExpression::base(base)).unwrap()
    }

    fn target(a: i64, b: i64) -> PolySequence {
        PolySequence::target(vec![family_member(a), family_member(b)]).unwrap()
    }

    fn hyp() -> Rho0Hypothesis {
        Rho0Hypothesis::asserted("test assertion")
    }

    #[test]
    fn vanishing_examples() {
        let e = chain(2, 3, knot_5_2());
        assert!(vanishing_verdict(&e, &target(2, 4), 12).unwrap().is_vanishing());
        assert!(vanishing_verdict(&e, &target(1, 3), 12).unwrap().is_vanishing());
        let v = vanishing_verdict(&e, &target(2, 3), 12).unwrap();
        assert_eq!(v.status, VerdictStatus::Inconclusive);
        assert!(vanishing_verdict(&e, &PolySequence::target(vec![family_member(2)]).unwrap(), 12).is_err());
        let bad = chain(2, 3, right_trefoil());
        assert!(vanishing_verdict(&bad, &target(1, 1), 12).is_err());
    }

    #[test]
    fn survival_examples() {
        let e = chain(2, 3, knot_5_2());
        let v = survival_verdict(&e, &target(2, 3), &hyp()).unwrap();
        assert!(v.is_survival(), "{:#?}", v.trail);
        assert!(!survival_verdict(&e, &target(2, 4), &hyp()).unwrap().is_survival());
        assert!(!survival_verdict(&e, &target(2, 3), &Rho0Hypothesis::default()).unwrap().is_survival());
        let u = chain(2, 3, SeifertMatrix::unknot());
        let v = survival_verdict(&u, &target(2, 3), &hyp()).unwrap();
        assert_eq!(v.status, VerdictStatus::Inconclusive);
        assert!(v.trail.iter().any(|t| !t.outcome && t.hypothesis.contains("nonzero")));
        let bare = compose(&[uncertified_family_operator(2), family_operator(3)], KnotExpression::base(knot_5_2())).unwrap();
        assert!(!survival_verdict(&bare, &target(2, 3), &hyp()).unwrap().is_survival());
    }

    #[test]
    fn falsifier_examples() {
        let t = right_trefoil();
        let a = rho0(&t, 20);
        let b = rho0(&t.connected_sum(&t), 20);
        match rho0_relation_falsifier(&[a.clone(), b], 1_000_000, 20).unwrap() {
            FalsifierResult::RefutedRelation { coefficients, .. } => {
                assert_eq!(coefficients, vec![BigInt::from(2), BigInt::from(-1)])
            }
            r => panic!("{r:?}"),
        }
        assert_eq!(rho0_relation_falsifier(&[a], 1_000_000, 20).unwrap(), FalsifierResult::NoRelationFound);
        let five = rho0(&knot_5_2(), 30);
        assert!(in_span_numerically(&five.value, &[rational_from_f64(-4.0 / 3.0)]).unwrap().is_none());
    }
}
