//! Brute-force reference computations used to cross-check the decision
//! procedures. Everything here is built from generator multiplication alone.

use std::collections::HashSet;

use kgt_core::{Element, Generator, GroupKind, GroupSpec};
use rand::Rng;

pub fn generators(spec: GroupSpec) -> Vec<Generator> {
    match spec.kind() {
        GroupKind::TorusKnot => vec![Generator::A, Generator::B],
        GroupKind::Cable => vec![Generator::A, Generator::B, Generator::C],
    }
}

/// A generator word, one letter per entry, exponent `±1`.
pub type Spelling = Vec<(Generator, i64)>;

pub fn evaluate(spec: GroupSpec, word: &[(Generator, i64)]) -> Element {
    let mut acc = Element::identity(spec);
    for &(gen, exp) in word {
        let x = Element::generator(spec, gen).expect("generator of its own group");
        let x = if exp < 0 { x.inverse() } else { x };
        for _ in 0..exp.unsigned_abs() {
            acc = acc.multiply(&x).expect("same group");
        }
    }
    acc
}

pub fn spelling_text(word: &[(Generator, i64)]) -> String {
    if word.is_empty() {
        return "1".into();
    }
    let parts: Vec<String> = word
        .iter()
        .map(|&(g, e)| if e == 1 { g.as_char().to_string() } else { format!("{}^{e}", g.as_char()) })
        .collect();
    parts.join(" ")
}

/// Distinct elements spelled by freely reduced words of at most `radius`
/// letters, in length-lex order of their first spelling.
pub fn enumerate(spec: GroupSpec, radius: usize) -> Vec<(Spelling, Element)> {
    let letters: Vec<(Generator, i64)> = generators(spec)
        .into_iter()
        .flat_map(|g| [(g, 1), (g, -1)])
        .collect();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let mut layer: Vec<Spelling> = vec![Vec::new()];
    seen.insert(Element::identity(spec));
    out.push((Vec::new(), Element::identity(spec)));
    for _ in 0..radius {
        let mut next = Vec::new();
        for word in &layer {
            for &(g, e) in &letters {
                if word.last() == Some(&(g, -e)) {
                    continue;
                }
                let mut w = word.clone();
                w.push((g, e));
                let x = evaluate(spec, &w);
                if seen.insert(x.clone()) {
                    out.push((w.clone(), x));
                }
                next.push(w);
            }
        }
        layer = next;
    }
    out
}

/// First `x` in `conjugators` with `x⁻¹ u x = v`.
pub fn find_conjugator<'a>(u: &Element, v: &Element, conjugators: &'a [Element]) -> Option<&'a Element> {
    conjugators
        .iter()
        .find(|x| &x.inverse().multiply(u).unwrap().multiply(x).unwrap() == v)
}

pub fn orbit(u: &Element, conjugators: &[Element]) -> HashSet<Element> {
    conjugators
        .iter()
        .map(|x| x.inverse().multiply(u).unwrap().multiply(x).unwrap())
        .collect()
}

pub fn random_spelling<R: Rng>(rng: &mut R, spec: GroupSpec, min_len: usize, max_len: usize) -> Spelling {
    let gens = generators(spec);
    let len = rng.random_range(min_len..=max_len);
    (0..len)
        .map(|_| {
            let g = gens[rng.random_range(0..gens.len())];
            (g, if rng.random_bool(0.5) { 1 } else { -1 })
        })
        .collect()
}

pub fn random_element<R: Rng>(rng: &mut R, spec: GroupSpec, max_len: usize) -> Element {
    evaluate(spec, &random_spelling(rng, spec, 0, max_len))
}

/// A defining relator of the group as a letter sequence.
pub fn relator(spec: GroupSpec, variant: usize) -> Spelling {
    let (p, q) = (spec.p() as usize, spec.q() as usize);
    let run = |g: Generator, n: usize, e: i64| std::iter::repeat_n((g, e), n);
    match spec.kind() {
        GroupKind::TorusKnot => run(Generator::A, p, 1).chain(run(Generator::B, q, -1)).collect(),
        GroupKind::Cable if variant.is_multiple_of(2) => run(Generator::B, q, 1)
            .chain(run(Generator::C, p, 1))
            .chain(run(Generator::A, p, -1))
            .collect(),
        GroupKind::Cable => vec![
            (Generator::B, 1),
            (Generator::C, 1),
            (Generator::B, -1),
            (Generator::C, -1),
        ],
    }
}
