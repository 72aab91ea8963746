use std::collections::HashSet;

use kgt_core::freeprod::{reduce, Factor, Syllable};
use kgt_core::{FactorSpec, ReducedWord};
use num_bigint::BigInt;
use proptest::prelude::*;

fn specs_strategy() -> impl Strategy<Value = [FactorSpec; 2]> {
    prop_oneof![
        Just([FactorSpec::Finite(2), FactorSpec::Finite(3)]),
        Just([FactorSpec::Finite(3), FactorSpec::Finite(5)]),
        Just([FactorSpec::Finite(4), FactorSpec::Finite(3)]),
        Just([FactorSpec::Finite(3), FactorSpec::Infinite]),
        Just([FactorSpec::Finite(2), FactorSpec::Infinite]),
    ]
}

fn raw(max_len: usize) -> impl Strategy<Value = Vec<(Factor, BigInt)>> {
    let factor = prop_oneof![Just(Factor::First), Just(Factor::Second)];
    proptest::collection::vec((factor, -9i64..=9), 0..=max_len)
        .prop_map(|v| v.into_iter().map(|(f, e)| (f, BigInt::from(e))).collect())
}

fn words(n: usize) -> impl Strategy<Value = ([FactorSpec; 2], Vec<ReducedWord>)> {
    specs_strategy().prop_flat_map(move |specs| {
        (
            Just(specs),
            proptest::collection::vec(raw(10).prop_map(move |r| reduce(r, specs)), n),
        )
    })
}

fn raw_of(w: &ReducedWord) -> Vec<(Factor, BigInt)> {
    w.syllables().iter().map(|s| (s.factor, s.exponent.clone())).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn reduce_is_idempotent(specs in specs_strategy(), r in raw(16)) {
        let once = reduce(r, specs);
        let twice = reduce(raw_of(&once), specs);
        prop_assert_eq!(once, twice);
    }

    #[test]
    fn concat_is_a_group_law((specs, w) in words(3)) {
        let e = ReducedWord::identity(specs);
        let (x, y, z) = (&w[0], &w[1], &w[2]);
        let left = x.concat(y).unwrap().concat(z).unwrap();
        let right = x.concat(&y.concat(z).unwrap()).unwrap();
        prop_assert_eq!(left, right);
        prop_assert_eq!(&x.concat(&e).unwrap(), x);
        prop_assert_eq!(&e.concat(x).unwrap(), x);
        prop_assert!(x.concat(&x.inverse()).unwrap().is_empty());
        prop_assert!(x.inverse().concat(x).unwrap().is_empty());
    }

    #[test]
    fn cyclic_reduction_verifies((_, w) in words(1)) {
        let u = &w[0];
        let (core, conj) = u.cyclically_reduce();
        prop_assert_eq!(&conj.inverse().concat(&core).unwrap().concat(&conj).unwrap(), u);
        if core.len() >= 2 {
            let s = core.syllables();
            prop_assert_ne!(s[0].factor, s[s.len() - 1].factor);
        }
    }

    #[test]
    fn conjugacy_is_reflexive_and_symmetric((_, w) in words(3)) {
        let (u, x) = (&w[0], &w[1]);
        prop_assert!(u.conjugator_to(u).unwrap().is_some());
        let v = u.conjugated_by(x).unwrap();
        let forward = u.conjugator_to(&v).unwrap().expect("conjugate by construction");
        prop_assert_eq!(&u.conjugated_by(&forward).unwrap(), &v);
        let back = v.conjugator_to(u).unwrap().expect("symmetric");
        prop_assert_eq!(&v.conjugated_by(&back).unwrap(), u);
        let other = &w[2];
        if let Some(y) = u.conjugator_to(other).unwrap() {
            prop_assert_eq!(&u.conjugated_by(&y).unwrap(), other);
            prop_assert!(other.conjugator_to(u).unwrap().is_some());
        } else {
            prop_assert!(other.conjugator_to(u).unwrap().is_none());
        }
    }
}

/// Reduced words with at most `max_syllables` syllables.
fn all_words(specs: [FactorSpec; 2], max_syllables: usize) -> Vec<ReducedWord> {
    let exponents = |f: Factor| -> Vec<i64> {
        match specs[f.index()] {
            FactorSpec::Finite(m) => (1..m as i64).collect(),
            FactorSpec::Infinite => vec![-2, -1, 1, 2],
        }
    };
    let mut out = vec![ReducedWord::identity(specs)];
    let mut frontier: Vec<Vec<Syllable>> = vec![vec![]];
    for _ in 0..max_syllables {
        let mut next = Vec::new();
        for w in &frontier {
            for f in [Factor::First, Factor::Second] {
                if w.last().is_some_and(|s| s.factor == f) {
                    continue;
                }
                for e in exponents(f) {
                    let mut v = w.clone();
                    v.push(Syllable::new(f, e));
                    out.push(ReducedWord::from_syllables(v.clone(), specs).unwrap());
                    next.push(v);
                }
            }
        }
        frontier = next;
    }
    out
}

fn agrees_with_enumeration(specs: [FactorSpec; 2]) {
    let elements = all_words(specs, 4);
    let conjugators = all_words(specs, 5);
    let mut disagreements = Vec::new();
    for u in &elements {
        let orbit: HashSet<ReducedWord> = conjugators
            .iter()
            .map(|x| x.inverse().concat(u).unwrap().concat(x).unwrap())
            .collect();
        for v in &elements {
            let decided = u.conjugator_to(v).unwrap();
            if let Some(x) = &decided {
                assert_eq!(&u.conjugated_by(x).unwrap(), v);
            }
            if decided.is_some() != orbit.contains(v) {
                disagreements.push((u.clone(), v.clone()));
            }
        }
    }
    assert!(disagreements.is_empty(), "{} disagreements, first {:?}", disagreements.len(), disagreements.first());
}

#[test]
fn conjugacy_agrees_with_enumeration_z2_z3() {
    agrees_with_enumeration([FactorSpec::Finite(2), FactorSpec::Finite(3)]);
}

#[test]
fn conjugacy_agrees_with_enumeration_z3_z5() {
    agrees_with_enumeration([FactorSpec::Finite(3), FactorSpec::Finite(5)]);
}
