//! Deterministic inputs for the benchmarks in `benches/`.

use kgt_core::{Element, GroupSpec};

/// `[a, b]` followed by `a b^-1` repeated, giving words whose syllable length
/// grows linearly in `n`.
pub fn long_element(spec: GroupSpec, n: usize) -> Element {
    let mut text = String::from("[a,b]");
    for _ in 0..n {
        text.push_str(" a b^-1");
    }
    spec.parse_element(&text).expect("valid word")
}

/// A conjugate of `g` by a long fixed word.
pub fn shuffled_conjugate(g: &Element, n: usize) -> Element {
    let x = long_element(g.spec(), n).multiply(&g.spec().parse_element("b a^-1 b").expect("valid word"));
    g.conjugated_by(&x.expect("same group")).expect("same group")
}
