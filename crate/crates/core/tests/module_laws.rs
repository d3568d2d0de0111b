mod common;

use common::arb_seifert;
use knotloc_core::alexander::{
    divisor_lattice, element_order, localize, module_from_knot, CyclicModule, LocalizationMode, LocalizationStatus,
};
use knotloc_core::isogeny::standard_family;
use knotloc_core::LaurentPoly;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn module_order_is_alexander_polynomial(v in arb_seifert(2, 3)) {
        let m = module_from_knot(&v).unwrap();
        prop_assert!(m.order().unit_eq(&v.alexander_poly()));
    }

    #[test]
    fn element_orders_divide(i in 0usize..6, j in 0usize..6) {
        let fam = standard_family(6);
        let order = &fam[i] * &fam[j];
        let m = CyclicModule::new(&order).unwrap();
        for d in divisor_lattice(&m).unwrap() {
            let o = element_order(&m, &d.generator).unwrap();
            prop_assert!(o.divides(m.order()));
            prop_assert!((&o * &d.generator).unit_eq(m.order()) || o.is_unit() && d.generator.unit_eq(m.order()));
        }
    }
}

#[test]
fn pure_clauses() {
    let fam = standard_family(6);
    for a in 0..6 {
        for b in 0..6 {
            let m = CyclicModule::new(&fam[a]).unwrap();
            let v = localize(&m, &fam[b], LocalizationMode::StrongCoprime, 12).unwrap();
            let expect = if a == b { LocalizationStatus::TorsionFree } else { LocalizationStatus::Torsion };
            assert_eq!(v.status, expect, "p_{} at p_{}", a + 1, b + 1);
        }
    }
    let m = CyclicModule::new(&LaurentPoly::one()).unwrap();
    assert_eq!(localize(&m, &fam[0], LocalizationMode::ClassicalCoprime, 12).unwrap().status, LocalizationStatus::Torsion);
}
