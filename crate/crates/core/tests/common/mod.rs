#![allow(dead_code)]

use std::collections::HashSet;

use kgt_core::{Element, Generator, GroupKind, GroupSpec};
use proptest::prelude::*;

pub fn t23() -> GroupSpec {
    GroupSpec::torus_knot(2, 3).unwrap()
}

pub fn t35() -> GroupSpec {
    GroupSpec::torus_knot(3, 5).unwrap()
}

pub fn c23() -> GroupSpec {
    GroupSpec::cable(2, 3).unwrap()
}

pub fn specs() -> Vec<GroupSpec> {
    vec![
        t23(),
        t35(),
        GroupSpec::torus_knot(4, 3).unwrap(),
        c23(),
        GroupSpec::cable(3, 2).unwrap(),
        GroupSpec::cable(5, 1).unwrap(),
    ]
}

pub fn generators(spec: GroupSpec) -> Vec<Generator> {
    match spec.kind() {
        GroupKind::TorusKnot => vec![Generator::A, Generator::B],
        GroupKind::Cable => vec![Generator::A, Generator::B, Generator::C],
    }
}

/// Multiplies out `(generator, exponent)` letters one generator at a time.
pub fn evaluate(spec: GroupSpec, letters: &[(Generator, i64)]) -> Element {
    let mut acc = Element::identity(spec);
    for &(gen, exp) in letters {
        let step = Element::generator(spec, gen).unwrap();
        let step = if exp < 0 { step.inverse() } else { step };
        for _ in 0..exp.unsigned_abs() {
            acc = acc.multiply(&step).unwrap();
        }
    }
    acc
}

pub fn spec_strategy() -> impl Strategy<Value = GroupSpec> {
    proptest::sample::select(specs())
}

pub fn letters(spec: GroupSpec, max_len: usize) -> impl Strategy<Value = Vec<(Generator, i64)>> {
    let gens = generators(spec);
    let letter = (proptest::sample::select(gens), prop_oneof![-3i64..=-1, 1i64..=3]);
    proptest::collection::vec(letter, 0..=max_len)
}

pub fn element_in(spec: GroupSpec, max_len: usize) -> impl Strategy<Value = Element> {
    letters(spec, max_len).prop_map(move |w| evaluate(spec, &w))
}

pub fn spec_and_elements(n: usize, max_len: usize) -> impl Strategy<Value = (GroupSpec, Vec<Element>)> {
    spec_strategy().prop_flat_map(move |spec| {
        (Just(spec), proptest::collection::vec(element_in(spec, max_len), n))
    })
}

/// Every element spelled by a freely reduced word of at most `radius`
/// letters over the generators and their inverses.
pub fn spelled_elements(spec: GroupSpec, radius: usize) -> Vec<Element> {
    let mut alphabet = Vec::new();
    for g in generators(spec) {
        let x = Element::generator(spec, g).unwrap();
        alphabet.push((g, false, x.inverse()));
        alphabet.push((g, true, x));
    }
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let identity = Element::identity(spec);
    seen.insert(identity.clone());
    out.push(identity.clone());
    let mut frontier: Vec<(Option<(Generator, bool)>, Element)> = vec![(None, identity)];
    for _ in 0..radius {
        let mut next = Vec::new();
        for (last, el) in &frontier {
            for (g, positive, x) in &alphabet {
                if *last == Some((*g, !*positive)) {
                    continue;
                }
                let y = el.multiply(x).unwrap();
                if seen.insert(y.clone()) {
                    out.push(y.clone());
                }
                next.push((Some((*g, *positive)), y));
            }
        }
        frontier = next;
    }
    out
}

/// All `x⁻¹ u x` for `x` in the given conjugator set.
pub fn conjugacy_orbit(u: &Element, conjugators: &[Element]) -> HashSet<Element> {
    conjugators
        .iter()
        .map(|x| x.inverse().multiply(u).unwrap().multiply(x).unwrap())
        .collect()
}
