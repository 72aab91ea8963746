//! The verification suite run by `kgt verify-paper` and by the acceptance
//! test target. Each check reports its own pass/fail line.

use kgt_core::jsj::{classify, even_type, parse_jsj, GtExistence, PieceKind};
use kgt_core::sclbounds::{gap_lower_bound, longitude_scl, order_upper_bound, scl_interval};
use kgt_core::torsion::{bs_check, gt_order_search, is_reversible, roots_search, unique_root_failure_witness};
use kgt_core::{
    AbelianImage, Element, FactorSpec, Generator, GroupKind, GroupSpec, SearchBounds, TorsionCertificate,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

use crate::json;
use crate::oracle;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub id: String,
    pub title: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(id: impl Into<String>, title: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check {
            id: id.into(),
            title: title.into(),
            passed,
            detail: detail.into(),
        }
    }

    pub fn line(&self) -> String {
        let status = if self.passed { "PASS" } else { "FAIL" };
        format!("[{status}] {} {}: {}", self.id, self.title, self.detail)
    }
}

pub struct GoldenCase {
    pub file: &'static str,
    pub source: &'static str,
    pub golden: &'static str,
    /// `(is_R, is_Rbar, has_order_two_gt)`.
    pub expected: (bool, bool, bool),
}

pub const GOLDEN: [GoldenCase; 6] = [
    GoldenCase {
        file: "hyperbolic.jsj",
        source: include_str!("../data/hyperbolic.jsj"),
        golden: include_str!("../data/hyperbolic.json"),
        expected: (true, true, false),
    },
    GoldenCase {
        file: "trefoil.jsj",
        source: include_str!("../data/trefoil.jsj"),
        golden: include_str!("../data/trefoil.json"),
        expected: (false, false, true),
    },
    GoldenCase {
        file: "torus_3_5.jsj",
        source: include_str!("../data/torus_3_5.jsj"),
        golden: include_str!("../data/torus_3_5.json"),
        expected: (false, false, false),
    },
    GoldenCase {
        file: "cable_trefoil.jsj",
        source: include_str!("../data/cable_trefoil.jsj"),
        golden: include_str!("../data/cable_trefoil.json"),
        expected: (false, false, true),
    },
    GoldenCase {
        file: "cable_hyperbolic.jsj",
        source: include_str!("../data/cable_hyperbolic.jsj"),
        golden: include_str!("../data/cable_hyperbolic.json"),
        expected: (false, false, false),
    },
    GoldenCase {
        file: "composite.jsj",
        source: include_str!("../data/composite.jsj"),
        golden: include_str!("../data/composite.json"),
        expected: (true, true, false),
    },
];

fn rng_for(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

fn spec(kind: GroupKind, p: u64, q: u64) -> GroupSpec {
    GroupSpec::new(kind, p, q).expect("valid built-in group")
}

fn el(spec: GroupSpec, text: &str) -> Element {
    spec.parse_element(text).expect("valid built-in word")
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn is_conjugation(g: &Element, x: &Element, target: &Element) -> bool {
    g.conjugated_by(x).ok().as_ref() == Some(target)
}

fn example(id: &str, title: &str, run: impl FnOnce() -> Result<String, String>) -> Check {
    match run() {
        Ok(detail) => Check::new(id, title, true, detail),
        Err(detail) => Check::new(id, title, false, detail),
    }
}

fn ensure(ok: bool, detail: String) -> Result<String, String> {
    if ok { Ok(detail) } else { Err(detail) }
}

fn t23() -> GroupSpec {
    spec(GroupKind::TorusKnot, 2, 3)
}

fn t35() -> GroupSpec {
    spec(GroupKind::TorusKnot, 3, 5)
}

fn c23() -> GroupSpec {
    spec(GroupKind::Cable, 2, 3)
}

/// Worked examples for single operations.
pub fn examples() -> Vec<Check> {
    let mut out = Vec::new();
    out.push(example("E01", "trefoil quotient", || {
        let specs = t23().quotient_specs();
        ensure(
            specs == [FactorSpec::Finite(2), FactorSpec::Finite(3)],
            format!("quotient {specs:?}"),
        )
    }));
    out.push(example("E02", "a a is the fiber", || {
        let g = el(t23(), "a a");
        let prod = Element::generator(t23(), Generator::A)
            .and_then(|a| a.multiply(&a))
            .map_err(|e| e.to_string())?;
        ensure(
            g.central() == &BigInt::from(1) && g.word().is_empty() && prod == g,
            format!("a a = {g}, multiply(a, a) = {prod}"),
        )
    }));
    out.push(example("E03", "a^2 = b^3", || {
        let eq = el(t23(), "a^2").equals(&el(t23(), "b^3")).map_err(|e| e.to_string())?;
        ensure(eq, format!("equals = {eq}"))
    }));
    out.push(example("E04", "abelianization", || {
        let s = t23();
        let images: Vec<AbelianImage> = ["a", "b", "h"].iter().map(|w| el(s, w).abelianize()).collect();
        let expected: Vec<AbelianImage> = [3, 2, 6].iter().map(|&n| AbelianImage::TorusKnot(n.into())).collect();
        let h = el(c23(), "h").abelianize();
        ensure(
            images == expected && h == AbelianImage::Cable(6.into(), 2.into()),
            format!("T(2,3): a, b, h -> {}, {}, {}; C(2,3): h -> {h}", images[0], images[1], images[2]),
        )
    }));
    out.push(example("E05", "[a,b] reversed by a", || {
        let g = el(t23(), "[a,b]");
        let a = el(t23(), "a");
        let by_a = g.conjugated_by(&a).map_err(|e| e.to_string())?;
        let found = g.conjugator_to(&g.inverse()).map_err(|e| e.to_string())?;
        let ok = by_a == g.inverse() && found.as_ref().is_some_and(|x| is_conjugation(&g, x, &g.inverse()));
        let found = found.map_or("none".to_string(), |x| x.to_string());
        ensure(ok, format!("a^-1 g a = {by_a}, decided conjugator {found}"))
    }));
    out.push(example("E06", "reversibility witnesses", || {
        let mut details = Vec::new();
        for s in [t23(), c23()] {
            let g = el(s, "[a,b]");
            let x = is_reversible(&g).map_err(|e| e.to_string())?;
            match x {
                Some(x) if x == el(s, "a") && is_conjugation(&g, &x, &g.inverse()) => {
                    details.push(format!("{s}: conjugator {x}"))
                }
                other => return Err(format!("{s}: got {other:?}")),
            }
        }
        Ok(details.join("; "))
    }));
    out.push(example("E07", "order two found by search", || {
        let g = el(t23(), "[a,b]");
        let bounds = SearchBounds::new(2, 4).map_err(|e| e.to_string())?;
        let cert = gt_order_search(&g, bounds).map_err(|e| e.to_string())?;
        let expected = TorsionCertificate::OrderFound {
            order: 2,
            conjugators: vec![Element::identity(t23()), el(t23(), "a")],
        };
        ensure(cert == expected && cert.verify(&g), cert.to_string())
    }));
    out.push(example("E08", "square roots of h in T(2,3)", || {
        let c = criterion_1();
        ensure(c.passed, c.detail)
    }));
    out.push(example("E09", "unique roots fail", || {
        let mut details = Vec::new();
        for (s, n) in [(t23(), 2), (t35(), 3)] {
            let w = unique_root_failure_witness(s).map_err(|e| e.to_string())?;
            let ok = w.n == n
                && w.x == el(s, "a")
                && w.y == el(s, "inv(b a) a b a")
                && w.x != w.y
                && w.x.pow(n as i64) == w.y.pow(n as i64);
            if !ok {
                return Err(format!("{s}: {w:?}"));
            }
            details.push(format!("{s}: ({}, {}, {n})", w.x, w.y));
        }
        Ok(details.join("; "))
    }));
    out.push(example("E10", "reversibility as a BS relation", || {
        let holds = bs_check(&el(t23(), "a"), &el(t23(), "[a,b]"), 1, -1).map_err(|e| e.to_string())?;
        ensure(holds, format!("bs_check = {holds}"))
    }));
    out.push(example("E11", "order upper bounds", || {
        let two = order_upper_bound(2).map_err(|e| e.to_string())?;
        let three = order_upper_bound(3).map_err(|e| e.to_string())?;
        ensure(two == rat(0, 1) && three == rat(1, 6), format!("k=2 -> {two}, k=3 -> {three}"))
    }));
    out.push(example("E12", "scl of order-two commutators", || {
        let bounds = SearchBounds::new(3, 3).map_err(|e| e.to_string())?;
        let mut details = Vec::new();
        for s in [t23(), c23()] {
            let iv = scl_interval(&el(s, "[a,b]"), bounds).map_err(|e| e.to_string())?;
            if iv.lower != rat(0, 1) || iv.upper != Some(rat(0, 1)) {
                return Err(format!("{s}: {iv}"));
            }
            details.push(format!("{s}: {iv}"));
        }
        Ok(details.join("; "))
    }));
    out.push(example("E13", "longitude scl", || {
        let one = longitude_scl(1).map_err(|e| e.to_string())?;
        let three = longitude_scl(3).map_err(|e| e.to_string())?;
        let zero = longitude_scl(0).is_err();
        ensure(
            one == rat(1, 2) && three == rat(5, 2) && zero,
            format!("genus 1 -> {one}, genus 3 -> {three}, genus 0 rejected = {zero}"),
        )
    }));
    out.push(example("E14", "even type", || {
        let cases = [
            (PieceKind::TorusKnot { p: 2, q: 3 }, true),
            (PieceKind::TorusKnot { p: 3, q: 5 }, false),
            (PieceKind::Cable { p: 3, q: 2 }, false),
        ];
        for (kind, expected) in cases {
            let got = even_type(&kind).map_err(|e| e.to_string())?;
            if got != expected {
                return Err(format!("{kind}: {got}"));
            }
        }
        Ok("torus_knot(2, 3) even, torus_knot(3, 5) odd, cable(3, 2) odd".into())
    }));
    out.push(example("E15", "single-piece classification", || {
        let single = |kind: &str| {
            let tree = parse_jsj(&format!("knot \"k\" {{ piece X = {kind}; root X; }}")).map_err(|e| e.to_string())?;
            classify(&tree).map_err(|e| e.to_string())
        };
        let hyp = single("hyperbolic(\"k\")")?;
        let tre = single("torus_knot(2, 3)")?;
        let odd = single("torus_knot(3, 5)")?;
        let witness_ok = tre.witnesses.len() == 1
            && tre.witnesses[0].certificate
                == TorsionCertificate::OrderTwo {
                    element: el(t23(), "[a,b]"),
                    conjugator: el(t23(), "a"),
                };
        let ok = hyp.is_r
            && !hyp.has_order_two_gt
            && !tre.is_r
            && tre.has_order_two_gt
            && witness_ok
            && !odd.is_r
            && !odd.has_order_two_gt
            && odd.has_any_gt == GtExistence::Unknown;
        ensure(ok, "hyperbolic R; torus_knot(2, 3) witness [a,b] by a; torus_knot(3, 5) unknown".into())
    }));
    out.push(example("E16", "command-line examples", || {
        let (code, report) = crate::app::run_to_json([
            "kgt", "gentorsion", "--group", "torus:2,3", "--word", "[a,b]", "--max-order", "4", "--radius", "2",
        ]);
        let order = report.pointer("/result/order").and_then(Value::as_u64);
        if code != 0 || order != Some(2) {
            return Err(format!("gentorsion exit {code}, order {order:?}"));
        }
        let (code, report) = crate::app::classify_source("trefoil.jsj", GOLDEN[1].source);
        let is_r = report.pointer("/is_R").and_then(Value::as_bool);
        let gt2 = report.pointer("/has_order_two_gt").and_then(Value::as_bool);
        ensure(
            code == 0 && is_r == Some(false) && gt2 == Some(true),
            format!("gentorsion order 2; classify trefoil is_R {is_r:?}, has_order_two_gt {gt2:?}"),
        )
    }));
    out
}

pub fn criterion_1() -> Check {
    let title = "trefoil square roots of h";
    let s = t23();
    let h = el(s, "h");
    let a = el(s, "a");
    let y = el(s, "inv(b a) a b a");
    match roots_search(&h, 2, 4) {
        Ok(roots) => {
            let has_a = roots.contains(&a);
            let has_y = roots.contains(&y);
            let distinct = !a.equals(&y).unwrap_or(true);
            let square = a.pow(2) == h && y.pow(2) == h;
            Check::new(
                "C01",
                title,
                has_a && has_y && distinct && square,
                format!(
                    "radius 4: {} roots; contains a: {has_a}; contains (ba)^-1 a (ba) = {y}: {has_y}; distinct: {distinct}; both square to h: {square}",
                    roots.len()
                ),
            )
        }
        Err(e) => Check::new("C01", title, false, e.to_string()),
    }
}

fn even_witness_check(id: &str, title: &str, groups: [GroupSpec; 2]) -> Check {
    let mut details = Vec::new();
    let mut passed = true;
    for s in groups {
        let r = s.p() / 2;
        let ar = el(s, &format!("a^{r}"));
        let g = el(s, &format!("[a^{r}, b]"));
        let reversed = is_reversible(&g);
        let cert = SearchBounds::new(2, 4).ok().map(|b| gt_order_search(&g, b));
        let ok_rev = matches!(&reversed, Ok(Some(x)) if x == &ar && is_conjugation(&g, x, &g.inverse()));
        let ok_order = matches!(&cert, Some(Ok(c)) if c.order() == Some(2) && c.verify(&g));
        passed &= ok_rev && ok_order;
        let x = match &reversed {
            Ok(Some(x)) => x.to_string(),
            other => format!("{other:?}"),
        };
        let order = match &cert {
            Some(Ok(c)) => format!("{:?}", c.order()),
            other => format!("{other:?}"),
        };
        details.push(format!("{s}: conjugator {x}, order {order}"));
    }
    Check::new(id, title, passed, details.join("; "))
}

pub fn criterion_2() -> Check {
    even_witness_check(
        "C02",
        "order-two witness, even torus knot",
        [t23(), spec(GroupKind::TorusKnot, 4, 3)],
    )
}

pub fn criterion_3() -> Check {
    even_witness_check(
        "C03",
        "order-two witness, even cable",
        [c23(), spec(GroupKind::Cable, 4, 3)],
    )
}

fn odd_groups() -> [GroupSpec; 2] {
    [t35(), spec(GroupKind::Cable, 3, 2)]
}

/// 200 random null-homologous non-identity elements per odd group.
pub fn odd_samples(seed: u64) -> Vec<(GroupSpec, Vec<Element>)> {
    let mut rng = rng_for(seed, 4);
    odd_groups()
        .into_iter()
        .map(|s| {
            let mut v = Vec::with_capacity(200);
            while v.len() < 200 {
                let g = oracle::evaluate(s, &oracle::random_spelling(&mut rng, s, 2, 6));
                if !g.is_identity() && g.abelianize().is_zero() {
                    v.push(g);
                }
            }
            (s, v)
        })
        .collect()
}

pub fn criterion_4(seed: u64) -> Check {
    let mut failures = Vec::new();
    let mut details = Vec::new();
    for (s, samples) in odd_samples(seed) {
        let mut reversible = 0;
        for g in &samples {
            match is_reversible(g) {
                Ok(None) => {}
                Ok(Some(x)) => {
                    reversible += 1;
                    failures.push(format!("{s}: {g} reversed by {x}"));
                }
                Err(e) => failures.push(format!("{s}: {g}: {e}")),
            }
        }
        let conjugators: Vec<Element> = oracle::enumerate(s, 5).into_iter().map(|(_, x)| x).collect();
        let mut oracle_hits = 0;
        for g in samples.iter().take(20) {
            if let Some(x) = oracle::find_conjugator(g, &g.inverse(), &conjugators) {
                oracle_hits += 1;
                failures.push(format!("{s}: oracle reverses {g} by {x}"));
            }
        }
        details.push(format!(
            "{s}: {reversible}/200 reversible, oracle (radius 5, {} conjugators) reverses {oracle_hits}/20",
            conjugators.len()
        ));
    }
    if let Some(first) = failures.first() {
        details.push(format!("first failure: {first}"));
    }
    Check::new("C04", "odd type has no order-two witnesses", failures.is_empty(), details.join("; "))
}

pub fn criterion_5() -> Check {
    let mut details = Vec::new();
    let mut passed = true;
    let cases = [(t23(), Some(rat(0, 1)), rat(0, 1)), (t35(), None, rat(1, 6))];
    for (s, upper, lower) in cases {
        let g = el(s, "[a,b]");
        let result = SearchBounds::new(3, 3)
            .map_err(|e| e.to_string())
            .and_then(|b| scl_interval(&g, b).map_err(|e| e.to_string()));
        match result {
            Ok(iv) => {
                let ok = iv.lower == lower && iv.upper == upper;
                passed &= ok;
                let want = match &upper {
                    Some(u) => format!("[{lower}, {u}]"),
                    None => format!("[{lower}, +inf)"),
                };
                details.push(format!("{s}: {iv} (expected {want}; {})", iv.upper_source));
            }
            Err(e) => {
                passed = false;
                details.push(format!("{s}: {e}"));
            }
        }
    }
    Check::new("C05", "scl intervals of [a,b]", passed, details.join("; "))
}

/// Elements exercised by criteria 2 to 5.
pub fn fuzzed_pool(seed: u64) -> Vec<Element> {
    let mut pool = Vec::new();
    for s in [t23(), spec(GroupKind::TorusKnot, 4, 3), c23(), spec(GroupKind::Cable, 4, 3)] {
        pool.push(el(s, &format!("[a^{}, b]", s.p() / 2)));
    }
    for s in [t23(), t35()] {
        pool.push(el(s, "[a,b]"));
    }
    for (_, samples) in odd_samples(seed) {
        pool.extend(samples);
    }
    pool
}

pub fn criterion_6(seed: u64) -> Check {
    let mut rng = rng_for(seed, 6);
    let mut checked = 0usize;
    let mut violations = Vec::new();
    for g in fuzzed_pool(seed) {
        let z = oracle::random_element(&mut rng, g.spec(), 4);
        let conjugate = g.conjugated_by(&z).expect("same group");
        for x in [g, conjugate] {
            checked += 1;
            let reversible = matches!(is_reversible(&x), Ok(Some(_)));
            let gap = gap_lower_bound(&x).unwrap_or_else(|_| BigRational::zero());
            if reversible && gap > BigRational::zero() {
                violations.push(format!("{x} in {}", x.spec()));
            }
        }
    }
    let mut detail = format!("{checked} elements, {} violations", violations.len());
    if let Some(v) = violations.first() {
        detail.push_str(&format!("; first {v}"));
    }
    Check::new("C06", "reversible implies zero gap bound", violations.is_empty(), detail)
}

pub fn criterion_7(seed: u64) -> Check {
    let mut rng = rng_for(seed, 7);
    let groups = [t23(), t35(), c23()];
    let mut failures = Vec::new();
    let mut negatives = 0;
    while negatives < 1000 {
        let s = groups[negatives % 3];
        let x = oracle::random_element(&mut rng, s, 6);
        let y = oracle::evaluate(s, &oracle::random_spelling(&mut rng, s, 1, 6));
        let m: i64 = rng.random_range(-4..=4);
        let n: i64 = rng.random_range(-4..=4);
        if y.is_identity() || m == n || m == -n {
            continue;
        }
        negatives += 1;
        match bs_check(&x, &y, m, n) {
            Ok(false) => {}
            other => failures.push(format!("{s}: x={x}, y={y}, m={m}, n={n}: {other:?}")),
        }
    }
    let mut positives = 0;
    for s in groups {
        let h = el(s, "h");
        for _ in 0..20 {
            let x = oracle::random_element(&mut rng, s, 6);
            let m: i64 = rng.random_range(-4..=4);
            positives += 1;
            if !matches!(bs_check(&x, &h, m, m), Ok(true)) {
                failures.push(format!("{s}: central y = h, x={x}, m=n={m}"));
            }
        }
    }
    for s in [t23(), spec(GroupKind::TorusKnot, 4, 3), c23()] {
        let r = s.p() / 2;
        let x = el(s, &format!("a^{r}"));
        let y = el(s, &format!("[a^{r}, b]"));
        positives += 1;
        if !matches!(bs_check(&x, &y, 1, -1), Ok(true)) {
            failures.push(format!("{s}: reversal of {y} by {x}"));
        }
    }
    let mut detail = format!("{negatives} negative and {positives} positive cases, {} failures", failures.len());
    if let Some(f) = failures.first() {
        detail.push_str(&format!("; first {f}"));
    }
    Check::new("C07", "Baumslag-Solitar relations", failures.is_empty(), detail)
}

pub fn criterion_8(seed: u64) -> Check {
    let mut rng = rng_for(seed, 8);
    let groups = [
        t23(),
        t35(),
        spec(GroupKind::TorusKnot, 4, 3),
        c23(),
        spec(GroupKind::Cable, 3, 2),
        spec(GroupKind::Cable, 5, 1),
    ];
    let mut failures = Vec::new();
    for s in groups {
        for i in 0..500 {
            let word = oracle::random_spelling(&mut rng, s, 0, 10);
            let pos = rng.random_range(0..=word.len());
            let mut with = word.clone();
            with.splice(pos..pos, oracle::relator(s, i));
            if oracle::evaluate(s, &word) != oracle::evaluate(s, &with) {
                failures.push(format!("{s}: relator at {pos} in {}", oracle::spelling_text(&word)));
            }
        }
        for _ in 0..500 {
            let x = oracle::random_element(&mut rng, s, 8);
            let y = oracle::random_element(&mut rng, s, 8);
            let z = oracle::random_element(&mut rng, s, 8);
            if &(&x * &y) * &z != &x * &(&y * &z) {
                failures.push(format!("{s}: associativity for {x}, {y}, {z}"));
            }
        }
        for _ in 0..500 {
            let x = oracle::random_element(&mut rng, s, 8);
            let y = oracle::random_element(&mut rng, s, 8);
            let xy = &x * &y;
            let inverse_ok = (&x * &x.inverse()).is_identity() && (&x.inverse() * &x).is_identity();
            let project_ok = x.project().concat(&y.project()).ok() == Some(xy.project());
            let abelian_ok = xy.abelianize() == x.abelianize() + y.abelianize();
            if !(inverse_ok && project_ok && abelian_ok) {
                failures.push(format!("{s}: laws for {x}, {y}"));
            }
        }
    }
    let mut detail = format!("{} groups x 1500 cases, {} failures", groups.len(), failures.len());
    if let Some(f) = failures.first() {
        detail.push_str(&format!("; first {f}"));
    }
    Check::new("C08", "word problem soundness", failures.is_empty(), detail)
}

pub fn criterion_9() -> Check {
    let mut details = Vec::new();
    let mut passed = true;
    for s in [t23(), t35()] {
        let elements: Vec<Element> = oracle::enumerate(s, 5).into_iter().map(|(_, x)| x).collect();
        let conjugators: Vec<Element> = oracle::enumerate(s, 4).into_iter().map(|(_, x)| x).collect();
        let mut disagreements = 0usize;
        let mut unverified = 0usize;
        let mut first = None;
        for u in &elements {
            let orbit = oracle::orbit(u, &conjugators);
            for v in &elements {
                let decided = match u.conjugator_to(v) {
                    Ok(d) => d,
                    Err(_) => {
                        unverified += 1;
                        continue;
                    }
                };
                if let Some(x) = &decided {
                    if !is_conjugation(u, x, v) {
                        unverified += 1;
                    }
                }
                if decided.is_some() != orbit.contains(v) {
                    disagreements += 1;
                    first.get_or_insert_with(|| format!("{u} ~ {v}: decided {}", decided.is_some()));
                }
            }
        }
        passed &= disagreements == 0 && unverified == 0;
        let mut d = format!(
            "{s}: {} elements, {} pairs, {disagreements} disagreements, {unverified} unverified",
            elements.len(),
            elements.len() * elements.len()
        );
        if let Some(f) = first {
            d.push_str(&format!(" (first {f})"));
        }
        details.push(d);
    }
    Check::new("C09", "conjugacy against enumeration", passed, details.join("; "))
}

fn golden_case(case: &GoldenCase) -> Result<String, String> {
    let tree = parse_jsj(case.source).map_err(|e| format!("{}: {e}", case.file))?;
    let c = classify(&tree).map_err(|e| format!("{}: {e}", case.file))?;
    let triple = (c.is_r, c.is_rbar, c.has_order_two_gt);
    if triple != case.expected {
        return Err(format!("{}: got {triple:?}, expected {:?}", case.file, case.expected));
    }
    for w in &c.witnesses {
        let TorsionCertificate::OrderTwo { element, conjugator } = &w.certificate else {
            return Err(format!("{}: piece {} has a non order-two witness", case.file, w.piece));
        };
        let reversible = matches!(is_reversible(element), Ok(Some(_)));
        if !is_conjugation(element, conjugator, &element.inverse()) || !reversible {
            return Err(format!("{}: witness for {} does not verify", case.file, w.piece));
        }
    }
    let golden: Value = serde_json::from_str(case.golden).map_err(|e| format!("{}: {e}", case.file))?;
    let got = json::classification(&c);
    if got != golden {
        return Err(format!("{}: JSON {got} differs from golden {golden}", case.file));
    }
    Ok(format!("{} {triple:?}", case.file))
}

pub fn criterion_10() -> Check {
    let results: Vec<Result<String, String>> = GOLDEN.iter().map(golden_case).collect();
    let passed = results.iter().all(Result::is_ok);
    let detail = results
        .into_iter()
        .map(|r| r.unwrap_or_else(|e| format!("FAILED {e}")))
        .collect::<Vec<_>>()
        .join("; ");
    Check::new("C10", "classifier truth table", passed, detail)
}

pub fn criteria(seed: u64) -> Vec<Check> {
    vec![
        criterion_1(),
        criterion_2(),
        criterion_3(),
        criterion_4(seed),
        criterion_5(),
        criterion_6(seed),
        criterion_7(seed),
        criterion_8(seed),
        criterion_9(),
        criterion_10(),
    ]
}
