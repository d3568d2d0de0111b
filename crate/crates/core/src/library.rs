//! Built-in knots and operators, addressable by name.

use crate::alexander::SubmoduleLabel;
use crate::isogeny::family_member;
use crate::operator::{
    make_operator, rho1_bookkeeping, CertifiedReal, DoublingOperator, NameTable, RobustCertificate, SignatureEntry,
    SignatureKind,
};
use crate::poly::laurent::LaurentPoly;
use crate::poly::qpoly::Rational;
use crate::seifert::{rho0, SeifertMatrix};
use num_traits::Zero;

/// Largest `k` for which `Rp{k}` is built in.
pub const FAMILY_SIZE: i64 = 20;

pub fn right_trefoil() -> SeifertMatrix {
    SeifertMatrix::named(vec![vec![-1, 1], vec![0, -1]], "trefoil").expect("valid")
}

pub fn figure_eight() -> SeifertMatrix {
    SeifertMatrix::named(vec![vec![-1, 1], vec![0, 1]], "figure-eight").expect("valid")
}

pub fn knot_5_2() -> SeifertMatrix {
    SeifertMatrix::named(vec![vec![-1, 1], vec![0, -2]], "5_2").expect("valid")
}

/// `T(2, 2g+1)`: `-1` on the diagonal, `1` just above it.
pub fn torus_2(g: usize) -> SeifertMatrix {
    let n = 2 * g;
    let m = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { -1 } else if j == i + 1 { 1 } else { 0 })
                .collect()
        })
        .collect();
    SeifertMatrix::named(m, &format!("T(2,{})", 2 * g + 1)).expect("valid")
}

/// Genus one ribbon pattern with Alexander polynomial `p_k`.
pub fn family_pattern(k: i64) -> SeifertMatrix {
    SeifertMatrix::named(vec![vec![0, k + 1], vec![k, 0]], &format!("Rp{k}-pattern")).expect("valid")
}

/// The robust operator with Alexander polynomial `p_k`, in the variant whose
/// pattern is infected by the right-handed trefoil: the untwisted pattern's
/// first-order signature is taken to be 0, so the `P_0` and `P_-` signatures
/// both equal `ρ₀(trefoil)`, and `P_+` corresponds to a ribbon disk.
pub fn family_operator(k: i64) -> DoublingOperator {
    assert!(k >= 1);
    let base = CertifiedReal::asserted(Rational::zero(), "first-order signature of the untwisted pattern, assumed 0");
    let sig = rho1_bookkeeping(&base, &rho0(&right_trefoil(), 20)).expect("provenance present");
    let cert = RobustCertificate {
        delta: LaurentPoly::from_i64(0, &[-(k + 1), k]),
        signatures: vec![
            SignatureEntry {
                submodule: SubmoduleLabel::P0,
                kind: SignatureKind::Nonzero,
                value: Some(sig.first_order.to_f64()),
                provenance: sig.first_order.provenance.clone(),
            },
            SignatureEntry {
                submodule: SubmoduleLabel::Pplus,
                kind: SignatureKind::Ribbon,
                value: None,
                provenance: "cutting the band linked by the plus curve gives a ribbon disk".into(),
            },
            SignatureEntry {
                submodule: SubmoduleLabel::Pminus,
                kind: SignatureKind::Nonzero,
                value: Some(sig.minus.to_f64()),
                provenance: sig.minus.provenance.clone(),
            },
        ],
    };
    make_operator(&format!("Rp{k}"), family_pattern(k), &family_member(k), Some(cert)).expect("valid operator")
}

/// The same pattern with no certificate attached.
pub fn uncertified_family_operator(k: i64) -> DoublingOperator {
    make_operator(&format!("Rp{k}-bare"), family_pattern(k), &family_member(k), None).expect("valid operator")
}

pub fn builtin_knots() -> Vec<SeifertMatrix> {
    let t = right_trefoil();
    vec![
        SeifertMatrix::unknot(),
        t.clone(),
        t.mirror().with_name("left-trefoil"),
        figure_eight(),
        knot_5_2(),
        torus_2(2),
        t.connected_sum(&t).with_name("trefoil#trefoil"),
    ]
}

/// Every built-in knot and operator `Rp1 ..= Rp20`.
pub fn builtin() -> NameTable {
    let mut t = NameTable::default();
    for k in builtin_knots() {
        t.knots.insert(k.name().expect("named").to_string(), k);
    }
    for k in 1..=FAMILY_SIZE {
        let p = family_pattern(k);
        t.knots.insert(p.name().expect("named").to_string(), p);
        let o = family_operator(k);
        t.operators.insert(o.name.clone(), o);
    }
    t
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::poly;

    #[test]
    fn alexander_polynomials() {
        assert_eq!(right_trefoil().alexander_poly(), poly("t^2-t+1"));
        assert_eq!(figure_eight().alexander_poly(), poly("t^2-3t+1"));
        assert_eq!(knot_5_2().alexander_poly(), poly("2t^2-3t+2"));
        assert_eq!(torus_2(2).alexander_poly(), poly("t^4-t^3+t^2-t+1"));
        for k in 1..=5 {
            assert_eq!(family_pattern(k).alexander_poly(), family_member(k));
        }
    }

    #[test]
    fn arf_values() {
        assert_eq!(right_trefoil().arf(), 1);
        assert_eq!(figure_eight().arf(), 1);
        assert_eq!(knot_5_2().arf(), 0);
        assert_eq!(family_pattern(3).arf(), 0);
    }

    #[test]
    fn torus_rho0() {
        let r = rho0(&torus_2(2), 10);
        assert_eq!(r.exact, Some(Rational::new((-12).into(), 5.into())));
    }

    #[test]
    fn family_is_robust() {
        let lib = builtin();
        assert_eq!(lib.operators.len(), FAMILY_SIZE as usize);
        for k in [1, 7, 20] {
            assert!(lib.operators[&format!("Rp{k}")].is_robust());
        }
        assert!(!uncertified_family_operator(2).is_robust());
    }
}
