use knotloc_core::library::{family_operator, knot_5_2};
use knotloc_core::operator::{compose, order_sequences, KnotExpression};
use knotloc_core::oracle::{survival_verdict, vanishing_verdict, Rho0Hypothesis};
use knotloc_core::isogeny::{family_member, PolySequence};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(30))]

    #[test]
    fn chain_orders_are_levels(ks in prop::collection::vec(1i64..8, 1..4)) {
        let ops: Vec<_> = ks.iter().map(|&k| family_operator(k)).collect();
        let e = compose(&ops, KnotExpression::base(knot_5_2())).unwrap();
        let s = order_sequences(&e);
        prop_assert_eq!(s.sequences.len(), 1);
        let want: Vec<_> = ks.iter().map(|&k| family_member(k)).collect();
        prop_assert_eq!(&s.sequences[0].entries, &want);
    }

    #[test]
    fn verdicts_exclude_each_other(k in 1i64..5, m in 1i64..5, a in 1i64..5, b in 1i64..5) {
        let e = compose(&[family_operator(k), family_operator(m)], KnotExpression::base(knot_5_2())).unwrap();
        let p = PolySequence::target(vec![family_member(a), family_member(b)]).unwrap();
        let v = vanishing_verdict(&e, &p, 12).unwrap();
        let s = survival_verdict(&e, &p, &Rho0Hypothesis::asserted("assumed")).unwrap();
        prop_assert!(!(v.is_vanishing() && s.is_survival()));
        prop_assert!(v.is_vanishing() || s.is_survival());
    }
}
