//! Family certificates, disjoint-image reports and composition trees.

use super::{cite, in_span_numerically, TrailEntry, FALSIFIER_DIGITS};
use crate::error::{Error, Result};
use crate::isogeny::{tuple_strongly_coprime, PolySequence};
use crate::operator::{DoublingOperator, Robustness};
use crate::poly::qpoly::Rational;
use crate::seifert::{rho0, SeifertMatrix};
use num_bigint::BigInt;
use serde::Serialize;
use std::fmt::Write;

/// One family: a target `P`, a chain of operators (outermost first) and the
/// base knots fed into it.
#[derive(Clone, Debug)]
pub struct FamilySpec {
    pub index: PolySequence,
    pub chain: Vec<DoublingOperator>,
    pub bases: Vec<SeifertMatrix>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum Rho0Status {
    RefutedRelation { family: usize, coefficients: Vec<String> },
    AssertedIndependent { provenance: String },
    Inconclusive,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Conclusion {
    IndependentCertified,
    Refuted,
    Conditional,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairVerdict {
    pub i: usize,
    pub j: usize,
    pub strongly_coprime: bool,
    pub exact: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyCertificate {
    pub indices: Vec<String>,
    pub pairwise: Vec<PairVerdict>,
    pub rho0: Rho0Status,
    pub trail: Vec<TrailEntry>,
    pub conclusion: Conclusion,
}

/// Certificate that the knots of all families are independent modulo the
/// next half level: pairwise strongly coprime indices, robust operators, and
/// base `ρ₀` values independent of each other and of the innermost
/// operators' signatures (asserted, after a numeric search for relations).
pub fn family_certificate(families: &[FamilySpec], fos_provenance: Option<&str>, bound: u32) -> Result<FamilyCertificate> {
    let mut trail = Vec::new();
    let mut structural = true;
    let depth = families.first().map(|f| f.chain.len()).unwrap_or(0);
    for (i, f) in families.iter().enumerate() {
        let same = f.chain.len() == depth && f.index.len() == depth && depth > 0;
        trail.push(TrailEntry::new(format!("family {i} has depth {depth}"), same, super::cite::CHECKED));
        structural &= same;
        if !same {
            continue;
        }
        let matches = f.chain.iter().zip(&f.index.entries).all(|(op, p)| op.alpha_order.unit_eq(p));
        trail.push(TrailEntry::new(
            format!("family {i}: curve orders of the chain match {}", f.index),
            matches,
            cite::SURVIVAL,
        ));
        structural &= matches;
        let arf = f.bases.iter().all(|b| b.arf() == 0) && !f.bases.is_empty();
        trail.push(TrailEntry::new(format!("family {i}: base knots given, all with Arf invariant 0"), arf, cite::CHECKED));
        structural &= arf;
    }
    let mut robust = true;
    let mut seen = std::collections::BTreeSet::new();
    for op in families.iter().flat_map(|f| f.chain.iter()) {
        if !seen.insert(op.name.clone()) {
            continue;
        }
        let r = op.robustness()?;
        trail.push(TrailEntry::new(format!("operator {} is robust", op.name), r.is_robust(), cite::ROBUST));
        robust &= matches!(r, Robustness::Robust);
    }

    let mut pairwise = Vec::new();
    let mut all_coprime = true;
    for i in 0..families.len() {
        for j in i + 1..families.len() {
            let (a, b) = (&families[i].index, &families[j].index);
            let (sc, exact, detail) = if a.len() != b.len() {
                (false, true, "lengths differ".to_string())
            } else {
                let v = tuple_strongly_coprime(a, b, bound)?;
                (v.is_strongly_coprime(), v.is_exact(), super::describe_tuple(&v))
            };
            all_coprime &= sc;
            pairwise.push(PairVerdict { i, j, strongly_coprime: sc, exact, detail });
        }
    }
    trail.push(TrailEntry::new("indices pairwise strongly coprime", all_coprime, cite::FAMILY));

    let mut rho0_status = Rho0Status::Inconclusive;
    'search: for (i, f) in families.iter().enumerate() {
        let values: Vec<Rational> = f
            .bases
            .iter()
            .map(|b| {
                let r = rho0(b, FALSIFIER_DIGITS as usize + 5);
                r.exact.unwrap_or(r.value)
            })
            .collect();
        let fos: Vec<Rational> = f
            .chain
            .last()
            .map(|op| op.first_order_signatures().into_iter().map(super::rational_from_f64).collect())
            .unwrap_or_default();
        // each base against the others of its family and the signatures
        for k in 0..values.len() {
            let mut span: Vec<Rational> = values[..k].to_vec();
            span.extend(fos.iter().cloned());
            if let Some(c) = in_span_numerically(&values[k], &span)? {
                rho0_status = Rho0Status::RefutedRelation {
                    family: i,
                    coefficients: c.iter().map(BigInt::to_string).collect(),
                };
                break 'search;
            }
        }
    }
    if rho0_status == Rho0Status::Inconclusive {
        if let Some(p) = fos_provenance.filter(|p| !p.trim().is_empty()) {
            rho0_status = Rho0Status::AssertedIndependent { provenance: p.to_string() };
        }
    }
    let rho0_ok = matches!(rho0_status, Rho0Status::AssertedIndependent { .. });
    trail.push(TrailEntry::new(
        "base rho0 values independent of each other and of the innermost signatures",
        rho0_ok,
        if rho0_ok { cite::ASSERTED } else { cite::NUMERIC },
    ));
    let refuted = matches!(rho0_status, Rho0Status::RefutedRelation { .. }) || !all_coprime;
    let conclusion = if refuted {
        Conclusion::Refuted
    } else if structural && robust && rho0_ok {
        Conclusion::IndependentCertified
    } else {
        Conclusion::Conditional
    };
    Ok(FamilyCertificate {
        indices: families.iter().map(|f| f.index.to_string()).collect(),
        pairwise,
        rho0: rho0_status,
        trail,
        conclusion,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum InjectivityStatus {
    DisjointImagesOnSubgroup,
    SamePolynomial,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InjectivityReport {
    pub status: InjectivityStatus,
    pub reason: String,
    /// The subgroup the conclusion is about.
    pub scope: String,
}

const INJECTIVITY_SCOPE: &str = "the subgroup generated by the images of the robust families \
(knots built from Arf-zero bases with independent rho0); not all of the concordance group";

pub fn injectivity_report(a: &DoublingOperator, b: &DoublingOperator) -> Result<InjectivityReport> {
    let scope = INJECTIVITY_SCOPE.to_string();
    for op in [a, b] {
        if !op.is_robust() {
            return Ok(InjectivityReport {
                status: InjectivityStatus::Inconclusive,
                reason: format!("operator {} is not certified robust", op.name),
                scope,
            });
        }
    }
    let (da, db) = (a.alexander_poly(), b.alexander_poly());
    let (status, reason) = if da.unit_eq(&db) {
        (InjectivityStatus::SamePolynomial, format!("both patterns have Alexander polynomial {da}"))
    } else if da.is_coprime(&db)? {
        (InjectivityStatus::DisjointImagesOnSubgroup, format!("{da} and {db} are coprime"))
    } else {
        (InjectivityStatus::Inconclusive, format!("{da} and {db} share the factor {}", da.gcd(&db)?))
    };
    Ok(InjectivityReport { status, reason, scope })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TreePath {
    /// Operator names, outermost first.
    pub operators: Vec<String>,
    pub tuple: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FractalTree {
    pub depth: usize,
    pub paths: Vec<TreePath>,
    pub pairwise: Vec<PairVerdict>,
}

/// Refuse trees with more leaves than this.
pub const MAX_TREE_PATHS: usize = 4096;

/// Every length-`depth` composition over `family`, with the pairwise tuple
/// verdicts between their order sequences.
pub fn fractal_tree(depth: usize, family: &[DoublingOperator], bound: u32) -> Result<FractalTree> {
    if depth == 0 || family.is_empty() {
        return Err(Error::InvalidArgument("need depth >= 1 and a nonempty family".into()));
    }
    let count = family.len().checked_pow(depth as u32).filter(|&c| c <= MAX_TREE_PATHS);
    let Some(count) = count else {
        return Err(Error::InvalidArgument(format!("tree has more than {MAX_TREE_PATHS} paths")));
    };
    let mut paths = Vec::with_capacity(count);
    let mut seqs = Vec::with_capacity(count);
    for mut code in 0..count {
        let mut idx = vec![0; depth];
        for slot in idx.iter_mut().rev() {
            *slot = code % family.len();
            code /= family.len();
        }
        let ops: Vec<&DoublingOperator> = idx.iter().map(|&i| &family[i]).collect();
        let seq = PolySequence::target(ops.iter().map(|o| o.alpha_order.clone()).collect())?;
        paths.push(TreePath { operators: ops.iter().map(|o| o.name.clone()).collect(), tuple: seq.to_string() });
        seqs.push(seq);
    }
    let mut pairwise = Vec::new();
    for i in 0..count {
        for j in i + 1..count {
            let v = tuple_strongly_coprime(&seqs[i], &seqs[j], bound)?;
            pairwise.push(PairVerdict {
                i,
                j,
                strongly_coprime: v.is_strongly_coprime(),
                exact: v.is_exact(),
                detail: super::describe_tuple(&v),
            });
        }
    }
    Ok(FractalTree { depth, paths, pairwise })
}

impl FractalTree {
    pub fn all_pairwise_coprime(&self) -> bool {
        self.pairwise.iter().all(|p| p.strongly_coprime)
    }

    /// Graphviz rendering: one node per prefix, leaves labelled with tuples.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph compositions {\n  rankdir=LR;\n  root [label=\"K\"];\n");
        let mut seen = std::collections::BTreeSet::new();
        for p in &self.paths {
            let mut parent = "root".to_string();
            for level in 1..=p.operators.len() {
                let id = format!("n_{}", p.operators[..level].join("_").replace(['-', '.'], "_"));
                if seen.insert(id.clone()) {
                    let label = if level == p.operators.len() {
                        format!("{}\\n{}", p.operators[level - 1], p.tuple)
                    } else {
                        p.operators[level - 1].clone()
                    };
                    let _ = writeln!(out, "  {id} [label=\"{label}\"];");
                    let _ = writeln!(out, "  {parent} -> {id};");
                }
                parent = id;
            }
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::isogeny::family_member;
    use crate::library::{family_operator, knot_5_2, right_trefoil, torus_2, uncertified_family_operator};

    fn spec(a: i64, b: i64, bases: Vec<SeifertMatrix>) -> FamilySpec {
        FamilySpec {
            index: PolySequence::target(vec![family_member(a), family_member(b)]).unwrap(),
            chain: vec![family_operator(a), family_operator(b)],
            bases,
        }
    }

    #[test]
    fn certificate_cases() {
        let f = vec![spec(1, 1, vec![knot_5_2()]), spec(2, 3, vec![knot_5_2()])];
        let c = family_certificate(&f, Some("asserted"), 12).unwrap();
        assert!(c.pairwise.iter().all(|p| p.strongly_coprime));
        assert_eq!(c.conclusion, Conclusion::IndependentCertified);
        assert_eq!(family_certificate(&f, None, 12).unwrap().conclusion, Conclusion::Conditional);
        let dup = vec![spec(1, 2, vec![knot_5_2()]), spec(1, 2, vec![knot_5_2()])];
        assert_eq!(family_certificate(&dup, Some("asserted"), 12).unwrap().conclusion, Conclusion::Refuted);
        // rational rho0, dependent on the -4/3 signatures
        let g = spec(1, 1, vec![right_trefoil().connected_sum(&right_trefoil().mirror()).connected_sum(&torus_2(2))]);
        let c = family_certificate(&[g], Some("asserted"), 12).unwrap();
        assert_eq!(c.conclusion, Conclusion::Refuted);
    }

    #[test]
    fn injectivity() {
        let (a, b) = (family_operator(1), family_operator(2));
        assert_eq!(injectivity_report(&a, &b).unwrap().status, InjectivityStatus::DisjointImagesOnSubgroup);
        assert_eq!(injectivity_report(&a, &a).unwrap().status, InjectivityStatus::SamePolynomial);
        let c = uncertified_family_operator(3);
        assert_eq!(injectivity_report(&a, &c).unwrap().status, InjectivityStatus::Inconclusive);
    }

    #[test]
    fn trees() {
        let fam = vec![family_operator(1), family_operator(2)];
        let t = fractal_tree(1, &fam, 12).unwrap();
        assert_eq!(t.paths.len(), 2);
        assert!(t.all_pairwise_coprime());
        let t = fractal_tree(2, &fam, 12).unwrap();
        assert_eq!(t.paths.len(), 4);
        assert!(t.all_pairwise_coprime());
        let p = t.pairwise.iter().find(|p| p.i == 0 && p.j == 1).unwrap();
        assert_eq!(p.detail, "entry 2 strongly coprime");
        assert!(t.to_dot().contains("n_Rp1_Rp2"));
    }
}
