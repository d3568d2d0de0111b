//! Doubling operators `R_α`, robustness certificates, composition trees and
//! their order sequences.
//!
//! First-order signatures are never computed here. They enter as asserted
//! values carrying a provenance string, and the only arithmetic done on them
//! is the additivity bookkeeping under infection of the pattern by a knot.

use crate::alexander::{module_from_knot, proper_submodules_with_delta, KnotModule, SubmoduleLabel};
use crate::error::{Error, Result};
use crate::isogeny::PolySequence;
use crate::poly::factor::factor;
use crate::poly::laurent::LaurentPoly;
use crate::poly::parse_poly;
use crate::poly::qpoly::Rational;
use crate::seifert::{Rho0Value, SeifertMatrix};
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SignatureKind {
    /// The first-order signature of the submodule is asserted nonzero.
    Nonzero,
    /// The submodule corresponds to a ribbon disk for the pattern.
    Ribbon,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SignatureEntry {
    pub submodule: SubmoduleLabel,
    pub kind: SignatureKind,
    pub value: Option<f64>,
    pub provenance: String,
}

impl SignatureEntry {
    /// Whether this entry discharges the robustness condition for its submodule.
    pub fn discharges(&self) -> bool {
        if self.provenance.trim().is_empty() {
            return false;
        }
        match self.kind {
            SignatureKind::Ribbon => true,
            SignatureKind::Nonzero => self.value.is_none_or(|v| v != 0.0 && v.is_finite()),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct RobustCertificate {
    pub delta: LaurentPoly,
    pub signatures: Vec<SignatureEntry>,
}

/// A real number with a record of where it came from.
#[derive(Clone, Debug, PartialEq)]
pub struct CertifiedReal {
    pub value: Rational,
    /// Bound on the distance to the true value.
    pub error: Rational,
    pub provenance: String,
}

impl CertifiedReal {
    pub fn asserted(value: Rational, provenance: &str) -> Self {
        CertifiedReal { value, error: Rational::zero(), provenance: provenance.into() }
    }

    pub fn from_rho0(r: &Rho0Value, provenance: &str) -> Self {
        match &r.exact {
            Some(e) => CertifiedReal::asserted(e.clone(), provenance),
            None => CertifiedReal { value: r.value.clone(), error: r.error.clone(), provenance: provenance.into() },
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.value.to_f64().unwrap_or(f64::NAN)
    }

    /// Certainly nonzero: the enclosure excludes 0.
    pub fn is_certainly_nonzero(&self) -> bool {
        self.value.abs() > self.error
    }
}

/// Values obtained by infecting a pattern `R^k` along the curve dual to `P_-`
/// by a knot `T`:
/// `ρ¹(R^p) = ρ¹(R^k) + ρ₀(T)` and `ρ(R^p, φ_{P_-}) = ρ₀(T)`.
#[derive(Clone, Debug, PartialEq)]
pub struct InfectedSignatures {
    pub first_order: CertifiedReal,
    pub minus: CertifiedReal,
}

pub fn rho1_bookkeeping(base_rho1: &CertifiedReal, infection_rho0: &Rho0Value) -> Result<InfectedSignatures> {
    if base_rho1.provenance.trim().is_empty() {
        return Err(Error::Precondition("first-order signature of the pattern has no provenance".into()));
    }
    let t = CertifiedReal::from_rho0(infection_rho0, "rho0 of the infecting knot, computed");
    let first_order = CertifiedReal {
        value: &base_rho1.value + &t.value,
        error: &base_rho1.error + &t.error,
        provenance: format!("{} + {}", base_rho1.provenance, t.provenance),
    };
    let minus = CertifiedReal {
        value: t.value.clone(),
        error: t.error.clone(),
        provenance: format!("pattern signature vanishes via ribbon disk + {}", t.provenance),
    };
    Ok(InfectedSignatures { first_order, minus })
}

/// An infection operator on a ribbon pattern along a curve `α`. The linking
/// number of `α` with the pattern is assumed to vanish and `α` is assumed to
/// bound a disk in the complement; neither is checked.
#[derive(Clone, Debug, PartialEq)]
pub struct DoublingOperator {
    pub name: String,
    pub pattern: SeifertMatrix,
    pub alpha_order: LaurentPoly,
    pub generates: bool,
    pub certificate: Option<RobustCertificate>,
}

fn irreducible_nonunit(p: &LaurentPoly) -> Result<bool> {
    if p.is_zero() || p.is_unit() {
        return Ok(false);
    }
    Ok(factor(p)?.is_irreducible())
}

pub fn make_operator(
    name: &str,
    pattern: SeifertMatrix,
    alpha_order: &LaurentPoly,
    certificate: Option<RobustCertificate>,
) -> Result<DoublingOperator> {
    if alpha_order.is_zero() {
        return Err(Error::InvalidOperator("the order of alpha cannot be zero".into()));
    }
    let delta_r = pattern.alexander_poly();
    if !alpha_order.divides(&delta_r) {
        return Err(Error::InvalidOperator(format!(
            "order {alpha_order} of alpha does not divide the pattern's Alexander polynomial {delta_r}"
        )));
    }
    let alpha_order = alpha_order.normalize();
    let generates = !alpha_order.is_unit() && alpha_order.unit_eq(&delta_r);
    let certificate = match certificate {
        None => None,
        Some(c) => {
            let delta = c.delta.normalize();
            if !irreducible_nonunit(&delta)? {
                return Err(Error::InvalidOperator(format!("certificate polynomial {delta} is not an irreducible non-unit")));
            }
            let star = delta.reciprocal()?;
            if !(&delta * &star).unit_eq(&delta_r) {
                return Err(Error::InvalidOperator(format!(
                    "Alexander polynomial {delta_r} is not {delta} times its reciprocal"
                )));
            }
            for e in &c.signatures {
                match e.submodule {
                    SubmoduleLabel::P0 | SubmoduleLabel::Pplus => {}
                    SubmoduleLabel::Pminus if !star.unit_eq(&delta) => {}
                    other => {
                        return Err(Error::InvalidOperator(format!(
                            "certificate entry for {other}, which is not a proper submodule here"
                        )))
                    }
                }
            }
            Some(RobustCertificate { delta, signatures: c.signatures })
        }
    };
    Ok(DoublingOperator { name: name.into(), pattern, alpha_order, generates, certificate })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum Robustness {
    Robust,
    NotRobust { reason: String },
    Conditional { missing: Vec<String> },
}

impl Robustness {
    pub fn is_robust(&self) -> bool {
        matches!(self, Robustness::Robust)
    }
}

impl DoublingOperator {
    pub fn alexander_poly(&self) -> LaurentPoly {
        self.pattern.alexander_poly()
    }

    pub fn module(&self) -> Result<KnotModule> {
        module_from_knot(&self.pattern)
    }

    /// Asserted nonzero first-order signature values of the certificate.
    pub fn first_order_signatures(&self) -> Vec<f64> {
        self.certificate
            .iter()
            .flat_map(|c| c.signatures.iter())
            .filter(|e| e.kind == SignatureKind::Nonzero)
            .filter_map(|e| e.value)
            .collect()
    }

    pub fn robustness(&self) -> Result<Robustness> {
        let not = |r: &str| Ok(Robustness::NotRobust { reason: r.into() });
        if self.alpha_order.is_unit() {
            return not("alpha is null in the Alexander module");
        }
        let km = self.module()?;
        let Some(m) = km.module() else {
            return not("Alexander module is not cyclic");
        };
        if !self.generates {
            return not("alpha does not generate the Alexander module");
        }
        let order = m.order().clone();
        if !order.augmentation().abs().is_one() {
            return not("Alexander polynomial does not augment to a unit");
        }
        let delta = match &self.certificate {
            Some(c) => c.delta.clone(),
            None => match delta_of(&order)? {
                Some(d) => d,
                None => return not("Alexander polynomial is not of the form delta times its reciprocal, delta prime"),
            },
        };
        if !irreducible_nonunit(&delta)? || !(&delta * &delta.reciprocal()?).unit_eq(&order) {
            return not("Alexander polynomial is not of the form delta times its reciprocal, delta prime");
        }
        let mut missing = Vec::new();
        for sub in proper_submodules_with_delta(m, &delta)? {
            if !km.isotropic(&sub)? {
                continue;
            }
            let ok = self
                .certificate
                .iter()
                .flat_map(|c| c.signatures.iter())
                .any(|e| e.submodule == sub.label && e.discharges());
            if !ok {
                missing.push(format!("{} = <{}>", sub.label, sub.generator));
            }
        }
        if missing.is_empty() {
            Ok(Robustness::Robust)
        } else {
            Ok(Robustness::Conditional { missing })
        }
    }

    pub fn is_robust(&self) -> bool {
        self.robustness().map(|r| r.is_robust()).unwrap_or(false)
    }
}

/// `δ` with `order ≐ δ δ*`, `δ` prime, choosing the canonically smaller factor.
fn delta_of(order: &LaurentPoly) -> Result<Option<LaurentPoly>> {
    let f = factor(order)?;
    match f.factors.as_slice() {
        [(a, 1), (b, 1)] if a.reciprocal()?.unit_eq(b) => Ok(Some(a.clone())),
        [(a, 2)] if a.is_self_reciprocal() => Ok(Some(a.clone())),
        _ => Ok(None),
    }
}

impl fmt::Display for DoublingOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (alpha order {})", self.name, self.alpha_order)
    }
}

// ---------------------------------------------------------------------------
// expressions

#[derive(Clone, Debug, PartialEq)]
pub enum KnotExpression {
    Base { knot: SeifertMatrix, arf: u8 },
    /// Infection of the pattern along each curve (with the given order) by
    /// the corresponding sub-expression.
    Apply { op: DoublingOperator, inputs: Vec<(LaurentPoly, KnotExpression)> },
}

impl KnotExpression {
    pub fn base(knot: SeifertMatrix) -> Self {
        let arf = knot.arf();
        KnotExpression::Base { knot, arf }
    }

    /// Single-input application along the operator's own curve.
    pub fn apply(op: &DoublingOperator, input: KnotExpression) -> Self {
        KnotExpression::Apply { op: op.clone(), inputs: vec![(op.alpha_order.clone(), input)] }
    }

    /// Infection along several curves at once; each order must divide the
    /// pattern's Alexander polynomial.
    pub fn apply_multi(op: &DoublingOperator, inputs: Vec<(LaurentPoly, KnotExpression)>) -> Result<Self> {
        if inputs.is_empty() {
            return Err(Error::InvalidOperator("an operator node needs at least one input".into()));
        }
        let d = op.alexander_poly();
        for (o, _) in &inputs {
            if o.is_zero() || !o.divides(&d) {
                return Err(Error::InvalidOperator(format!("curve order {o} does not divide {d}")));
            }
        }
        let inputs = inputs.into_iter().map(|(o, e)| (o.normalize(), e)).collect();
        Ok(KnotExpression::Apply { op: op.clone(), inputs })
    }

    /// Number of operator levels along the deepest path.
    pub fn depth(&self) -> usize {
        match self {
            KnotExpression::Base { .. } => 0,
            KnotExpression::Apply { inputs, .. } => 1 + inputs.iter().map(|(_, e)| e.depth()).max().unwrap_or(0),
        }
    }

    pub fn is_chain(&self) -> bool {
        match self {
            KnotExpression::Base { .. } => true,
            KnotExpression::Apply { inputs, .. } => inputs.len() == 1 && inputs[0].1.is_chain(),
        }
    }

    /// Base knots at the leaves, left to right.
    pub fn leaves(&self) -> Vec<(&SeifertMatrix, u8)> {
        match self {
            KnotExpression::Base { knot, arf } => vec![(knot, *arf)],
            KnotExpression::Apply { inputs, .. } => inputs.iter().flat_map(|(_, e)| e.leaves()).collect(),
        }
    }

    /// Operators along a chain, outermost first; `None` when the tree branches.
    pub fn chain_operators(&self) -> Option<Vec<&DoublingOperator>> {
        let mut out = Vec::new();
        let mut cur = self;
        loop {
            match cur {
                KnotExpression::Base { .. } => return Some(out),
                KnotExpression::Apply { op, inputs } => {
                    if inputs.len() != 1 {
                        return None;
                    }
                    out.push(op);
                    cur = &inputs[0].1;
                }
            }
        }
    }

    pub fn operators(&self) -> Vec<&DoublingOperator> {
        match self {
            KnotExpression::Base { .. } => vec![],
            KnotExpression::Apply { op, inputs } => {
                let mut v = vec![op];
                for (_, e) in inputs {
                    v.extend(e.operators());
                }
                v
            }
        }
    }
}

/// `ops = [R_n, ..., R_1]` gives `R_n(...(R_1(base)))`.
pub fn compose(ops: &[DoublingOperator], base: KnotExpression) -> Result<KnotExpression> {
    if ops.is_empty() {
        return Err(Error::InvalidArgument("compose needs at least one operator".into()));
    }
    Ok(ops.iter().rev().fold(base, |acc, op| KnotExpression::apply(op, acc)))
}

/// One order sequence per root-to-leaf path, outermost first.
#[derive(Clone, Debug, PartialEq)]
pub struct OrderSequenceSet {
    pub sequences: Vec<PolySequence>,
}

fn paths(e: &KnotExpression) -> Vec<Vec<LaurentPoly>> {
    match e {
        KnotExpression::Base { .. } => vec![vec![]],
        KnotExpression::Apply { inputs, .. } => inputs
            .iter()
            .flat_map(|(o, sub)| {
                paths(sub).into_iter().map(move |mut p| {
                    p.insert(0, o.clone());
                    p
                })
            })
            .collect(),
    }
}

pub fn order_sequences(e: &KnotExpression) -> OrderSequenceSet {
    let sequences = paths(e)
        .into_iter()
        .filter(|p| !p.is_empty())
        .map(|p| PolySequence::orders(p).expect("orders are nonzero"))
        .collect();
    OrderSequenceSet { sequences }
}

// ---------------------------------------------------------------------------
// JSON

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SignatureJson {
    pub submodule: String,
    pub kind: SignatureKind,
    pub value: Option<f64>,
    pub provenance: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CertificateJson {
    pub delta: String,
    pub signatures: Vec<SignatureJson>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct OperatorJson {
    pub name: String,
    pub pattern_seifert: Vec<Vec<i64>>,
    pub alpha_order: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub robust: Option<CertificateJson>,
}

impl DoublingOperator {
    pub fn to_json(&self) -> OperatorJson {
        OperatorJson {
            name: self.name.clone(),
            pattern_seifert: self.pattern.entries().to_vec(),
            alpha_order: self.alpha_order.to_string(),
            robust: self.certificate.as_ref().map(|c| CertificateJson {
                delta: c.delta.to_string(),
                signatures: c
                    .signatures
                    .iter()
                    .map(|e| SignatureJson {
                        submodule: e.submodule.to_string(),
                        kind: e.kind,
                        value: e.value,
                        provenance: e.provenance.clone(),
                    })
                    .collect(),
            }),
        }
    }

    pub fn from_json(j: &OperatorJson) -> Result<Self> {
        let pattern = SeifertMatrix::named(j.pattern_seifert.clone(), &format!("{}-pattern", j.name))?;
        let alpha = parse_poly(&j.alpha_order)?;
        let cert = match &j.robust {
            None => None,
            Some(c) => {
                let mut signatures = Vec::new();
                for s in &c.signatures {
                    signatures.push(SignatureEntry {
                        submodule: s.submodule.parse()?,
                        kind: s.kind,
                        value: s.value,
                        provenance: s.provenance.clone(),
                    });
                }
                Some(RobustCertificate { delta: parse_poly(&c.delta)?, signatures })
            }
        };
        make_operator(&j.name, pattern, &alpha, cert)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct InputJson {
    pub alpha_order: String,
    pub expr: ExpressionJson,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ExpressionJson {
    Apply { op: String, inputs: Vec<InputJson> },
    Base { base: String, arf: u8 },
}

/// Named knots and operators against which expression JSON is resolved.
pub trait Resolver {
    fn knot(&self, name: &str) -> Option<&SeifertMatrix>;
    fn operator(&self, name: &str) -> Option<&DoublingOperator>;
}

impl KnotExpression {
    pub fn to_json(&self) -> ExpressionJson {
        match self {
            KnotExpression::Base { knot, arf } => {
                ExpressionJson::Base { base: knot.name().unwrap_or("unnamed").to_string(), arf: *arf }
            }
            KnotExpression::Apply { op, inputs } => ExpressionJson::Apply {
                op: op.name.clone(),
                inputs: inputs
                    .iter()
                    .map(|(o, e)| InputJson { alpha_order: o.to_string(), expr: e.to_json() })
                    .collect(),
            },
        }
    }

    pub fn from_json(j: &ExpressionJson, lib: &dyn Resolver) -> Result<Self> {
        match j {
            ExpressionJson::Base { base, arf } => {
                let knot = lib.knot(base).ok_or_else(|| Error::Format(format!("unknown knot {base:?}")))?;
                if *arf > 1 || *arf != knot.arf() {
                    return Err(Error::Format(format!(
                        "knot {base:?} has Arf invariant {}, expression says {arf}",
                        knot.arf()
                    )));
                }
                Ok(KnotExpression::Base { knot: knot.clone(), arf: *arf })
            }
            ExpressionJson::Apply { op, inputs } => {
                let o = lib.operator(op).ok_or_else(|| Error::Format(format!("unknown operator {op:?}")))?;
                let mut parsed = Vec::new();
                for i in inputs {
                    parsed.push((parse_poly(&i.alpha_order)?, KnotExpression::from_json(&i.expr, lib)?));
                }
                KnotExpression::apply_multi(o, parsed)
            }
        }
    }
}

/// A plain map-backed resolver.
#[derive(Clone, Debug, Default)]
pub struct NameTable {
    pub knots: BTreeMap<String, SeifertMatrix>,
    pub operators: BTreeMap<String, DoublingOperator>,
}

impl Resolver for NameTable {
    fn knot(&self, name: &str) -> Option<&SeifertMatrix> {
        self.knots.get(name)
    }
    fn operator(&self, name: &str) -> Option<&DoublingOperator> {
        self.operators.get(name)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::isogeny::family_member;
    use crate::poly::poly;
    use crate::seifert::rho0;

    fn pattern(k: i64) -> SeifertMatrix {
        SeifertMatrix::new(vec![vec![0, k + 1], vec![k, 0]]).unwrap()
    }

    fn trefoil() -> SeifertMatrix {
        SeifertMatrix::named(vec![vec![-1, 1], vec![0, -1]], "trefoil").unwrap()
    }

    fn entry(l: SubmoduleLabel, kind: SignatureKind, v: Option<f64>) -> SignatureEntry {
        SignatureEntry { submodule: l, kind, value: v, provenance: "test".into() }
    }

    fn full_cert(k: i64) -> RobustCertificate {
        RobustCertificate {
            delta: LaurentPoly::from_i64(0, &[-(k + 1), k]),
            signatures: vec![
                entry(SubmoduleLabel::P0, SignatureKind::Nonzero, Some(-4.0 / 3.0)),
                entry(SubmoduleLabel::Pplus, SignatureKind::Ribbon, None),
                entry(SubmoduleLabel::Pminus, SignatureKind::Nonzero, Some(-4.0 / 3.0)),
            ],
        }
    }

    fn op(k: i64) -> DoublingOperator {
        make_operator(&format!("R{k}"), pattern(k), &family_member(k), Some(full_cert(k))).unwrap()
    }

    #[test]
    fn robust_family() {
        for k in 1..=5 {
            let o = op(k);
            assert!(o.generates);
            assert_eq!(o.robustness().unwrap(), Robustness::Robust, "k = {k}");
        }
    }

    #[test]
    fn degenerate_and_conditional() {
        let o = make_operator("null", pattern(2), &poly("1"), None).unwrap();
        assert!(matches!(o.robustness().unwrap(), Robustness::NotRobust { .. }));
        let mut c = full_cert(2);
        c.signatures.remove(0);
        let o = make_operator("partial", pattern(2), &family_member(2), Some(c)).unwrap();
        match o.robustness().unwrap() {
            Robustness::Conditional { missing } => assert_eq!(missing.len(), 1),
            r => panic!("{r:?}"),
        }
        let o = make_operator("bare", pattern(2), &family_member(2), None).unwrap();
        assert!(matches!(o.robustness().unwrap(), Robustness::Conditional { .. }));
        // reducible Δ not of the δδ* shape
        let sum = pattern(1).connected_sum(&pattern(2));
        let o = make_operator("sum", sum.clone(), &sum.alexander_poly(), None).unwrap();
        assert!(matches!(o.robustness().unwrap(), Robustness::NotRobust { .. }));
    }

    #[test]
    fn certificate_validation() {
        assert!(make_operator("x", pattern(2), &poly("t-5"), None).is_err());
        let mut c = full_cert(2);
        c.delta = poly("t-2");
        assert!(make_operator("x", pattern(2), &family_member(2), Some(c)).is_err());
        let mut c = full_cert(2);
        c.delta = family_member(2);
        assert!(make_operator("x", pattern(2), &family_member(2), Some(c)).is_err());
    }

    #[test]
    fn bookkeeping() {
        let r = rho0(&trefoil(), 20);
        let zero = CertifiedReal::asserted(Rational::zero(), "asserted");
        let out = rho1_bookkeeping(&zero, &r).unwrap();
        assert_eq!(out.first_order.value, Rational::new((-4).into(), 3.into()));
        assert_eq!(out.minus.value, Rational::new((-4).into(), 3.into()));
        let u = rho0(&SeifertMatrix::unknot(), 20);
        let base = CertifiedReal::asserted(Rational::new(1.into(), 2.into()), "asserted");
        assert_eq!(rho1_bookkeeping(&base, &u).unwrap().first_order.value, base.value);
        assert!(rho1_bookkeeping(&CertifiedReal::asserted(Rational::zero(), ""), &u).is_err());
    }

    #[test]
    fn composition_and_orders() {
        let base = KnotExpression::base(trefoil());
        let e = compose(&[op(3), op(1)], base.clone()).unwrap();
        assert_eq!(e.depth(), 2);
        let s = order_sequences(&e);
        assert_eq!(s.sequences.len(), 1);
        assert_eq!(s.sequences[0].entries, vec![family_member(3), family_member(1)]);
        let nested = compose(&[op(3)], compose(&[op(1)], base.clone()).unwrap()).unwrap();
        assert_eq!(nested, e);
        let branch = KnotExpression::apply_multi(
            &op(2),
            vec![
                (poly("2t-3"), KnotExpression::apply(&op(1), base.clone())),
                (poly("3t-2"), KnotExpression::apply(&op(4), base.clone())),
            ],
        )
        .unwrap();
        let s = order_sequences(&branch);
        assert_eq!(s.sequences.len(), 2);
        assert_eq!(s.sequences[0].entries[0], poly("2t-3"));
        assert!(!branch.is_chain());
    }

    #[test]
    fn json_round_trip() {
        let o = op(2);
        let j = serde_json::to_string(&o.to_json()).unwrap();
        let back = DoublingOperator::from_json(&serde_json::from_str(&j).unwrap()).unwrap();
        assert_eq!(back.alpha_order, o.alpha_order);
        assert!(back.is_robust());
        let mut table = NameTable::default();
        table.knots.insert("trefoil".into(), trefoil());
        table.operators.insert("R2".into(), o.clone());
        let e = KnotExpression::apply(&o, KnotExpression::base(trefoil()));
        let text = serde_json::to_string(&e.to_json()).unwrap();
        let back = KnotExpression::from_json(&serde_json::from_str(&text).unwrap(), &table).unwrap();
        assert_eq!(order_sequences(&back), order_sequences(&e));
    }
}
