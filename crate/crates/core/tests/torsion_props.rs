mod common;

use common::*;
use kgt_core::torsion::{bs_check, gt_order_search, is_reversible};
use kgt_core::{Element, Generator, SearchBounds, TorsionCertificate};
use proptest::prelude::*;

fn bs_groups() -> impl Strategy<Value = kgt_core::GroupSpec> {
    proptest::sample::select(vec![t23(), t35(), c23()])
}

fn exponent() -> impl Strategy<Value = i64> {
    prop_oneof![-4i64..=-1, 1i64..=4]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn reversibility_respects_conjugation((_, v) in spec_and_elements(2, 6)) {
        let (g, z) = (&v[0], &v[1]);
        prop_assume!(!g.is_identity());
        let conj = g.conjugated_by(z).unwrap();
        let here = is_reversible(g).unwrap();
        let there = is_reversible(&conj).unwrap();
        prop_assert_eq!(here.is_some(), there.is_some());
        if let Some(x) = here {
            prop_assert_eq!(g.conjugated_by(&x).unwrap(), g.inverse());
        }
    }

    #[test]
    fn commutators_reversible_iff_search_finds_order_two((_, v) in spec_and_elements(2, 4)) {
        let g = v[0].commutator(&v[1]).unwrap();
        prop_assume!(!g.is_identity());
        let bounds = SearchBounds::new(1, 2).unwrap();
        let cert = gt_order_search(&g, bounds).unwrap();
        prop_assert!(cert.order() != Some(1));
        if cert.order().is_some() {
            prop_assert!(cert.verify(&g));
        }
        if is_reversible(&g).unwrap().is_some() {
            prop_assert_eq!(cert.order(), Some(2));
        } else {
            prop_assert_ne!(cert.order(), Some(2));
        }
    }

    #[test]
    fn nonzero_abelianization_is_obstructed((spec, v) in spec_and_elements(1, 6)) {
        let g = &v[0];
        prop_assume!(!g.abelianize().is_zero());
        let cert = gt_order_search(g, SearchBounds::new(2, 3).unwrap()).unwrap();
        let obstructed = matches!(cert, TorsionCertificate::Obstructed { .. });
        prop_assert!(obstructed, "{} in {}", g, spec);
    }

    #[test]
    fn no_baumslag_solitar_relations(
        (spec, x, y, m, n) in bs_groups().prop_flat_map(|spec| {
            (Just(spec), element_in(spec, 6), element_in(spec, 6), exponent(), exponent())
        })
    ) {
        prop_assume!(!y.is_identity() && m != n && m != -n);
        prop_assert!(!bs_check(&x, &y, m, n).unwrap(), "{} {} {} {} in {}", x, y, m, n, spec);
    }

    #[test]
    fn central_elements_satisfy_bs((spec, x) in bs_groups().prop_flat_map(|spec| (Just(spec), element_in(spec, 6)))) {
        let h = Element::generator(spec, Generator::H).unwrap();
        prop_assert!(bs_check(&x, &h, 2, 2).unwrap());
    }
}
