//! Generalized torsion, root equations and Baumslag–Solitar relations.
//!
//! A nontrivial `g` is a generalized torsion element when some product of
//! conjugates `g^{x_1} g^{x_2} ⋯ g^{x_n}` is the identity, with `g^x = x⁻¹gx`;
//! the least such `n` is its order. Order two is the same as `g` being
//! conjugate to `g⁻¹`, which the conjugacy decision procedure settles exactly.
//! Higher orders are only searched for within explicit bounds.

mod ball;

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::seifert::{AbelianImage, Element, Generator, GroupError, GroupKind, GroupSpec};

pub use ball::{alphabet, ball, BallEntry, Letter};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TorsionError {
    #[error("the identity has no generalized torsion order")]
    IdentityInput,
    #[error("search bounds need max_order >= 2, got {0}")]
    BadBounds(usize),
    #[error("root index must be at least 1")]
    BadRootIndex,
    #[error("no unique-root failure witness family is known for {0}")]
    UnsupportedGroup(GroupSpec),
    #[error("internal check failed: {0}")]
    Unverified(&'static str),
    #[error(transparent)]
    Group(#[from] GroupError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SearchBounds {
    /// Maximum generator-word length of a conjugator.
    pub radius: usize,
    pub max_order: usize,
}

impl SearchBounds {
    pub fn new(radius: usize, max_order: usize) -> Result<Self, TorsionError> {
        if max_order < 2 {
            return Err(TorsionError::BadBounds(max_order));
        }
        Ok(SearchBounds { radius, max_order })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TorsionCertificate {
    /// `conjugator⁻¹ · element · conjugator = element⁻¹`.
    OrderTwo { element: Element, conjugator: Element },
    /// `g^{x_1} ⋯ g^{x_n} = 1` with `x_1 = 1`.
    OrderFound { order: usize, conjugators: Vec<Element> },
    NotFoundWithinBounds { max_order: usize, radius: usize },
    /// The abelianization of `g` is nonzero, so no product of conjugates of
    /// `g` can vanish.
    Obstructed { abelianization: AbelianImage },
}

impl TorsionCertificate {
    /// Re-checks a positive certificate for `g` by direct multiplication.
    /// Negative certificates carry nothing to check and return `true`.
    pub fn verify(&self, g: &Element) -> bool {
        match self {
            TorsionCertificate::OrderTwo { element, conjugator } => {
                element == g
                    && !g.is_identity()
                    && g.conjugated_by(conjugator).ok().as_ref() == Some(&g.inverse())
            }
            TorsionCertificate::OrderFound { order, conjugators } => {
                if *order < 2 || conjugators.len() != *order || g.is_identity() {
                    return false;
                }
                let mut acc = Element::identity(g.spec());
                for x in conjugators {
                    match g.conjugated_by(x) {
                        Ok(c) => acc = acc.mul_unchecked(&c),
                        Err(_) => return false,
                    }
                }
                acc.is_identity()
            }
            TorsionCertificate::NotFoundWithinBounds { .. } => true,
            TorsionCertificate::Obstructed { abelianization } => {
                !abelianization.is_zero() && &g.abelianize() == abelianization
            }
        }
    }

    pub fn order(&self) -> Option<usize> {
        match self {
            TorsionCertificate::OrderTwo { .. } => Some(2),
            TorsionCertificate::OrderFound { order, .. } => Some(*order),
            _ => None,
        }
    }
}

impl fmt::Display for TorsionCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TorsionCertificate::OrderTwo { element, conjugator } => {
                write!(f, "order two: ({element}) conjugated by ({conjugator}) is its inverse")
            }
            TorsionCertificate::OrderFound { order, conjugators } => {
                let xs: Vec<String> = conjugators.iter().map(|x| format!("({x})")).collect();
                write!(f, "order {order} with conjugators {}", xs.join(", "))
            }
            TorsionCertificate::NotFoundWithinBounds { max_order, radius } => {
                write!(f, "no relation of order <= {max_order} with conjugators of length <= {radius}")
            }
            TorsionCertificate::Obstructed { abelianization } => {
                write!(f, "obstructed: abelianization {abelianization} is nonzero")
            }
        }
    }
}

/// Returns `x` with `x⁻¹gx = g⁻¹` when `g` is reversible, i.e. a generalized
/// torsion element of order two.
pub fn is_reversible(g: &Element) -> Result<Option<Element>, TorsionError> {
    if g.is_identity() {
        return Err(TorsionError::IdentityInput);
    }
    if !g.abelianize().is_zero() {
        return Ok(None);
    }
    Ok(g.conjugator_to(&g.inverse())?)
}

/// Smallest order of a product-of-conjugates relation for `g` within `bounds`.
pub fn gt_order_search(g: &Element, bounds: SearchBounds) -> Result<TorsionCertificate, TorsionError> {
    if g.is_identity() {
        return Err(TorsionError::IdentityInput);
    }
    if bounds.max_order < 2 {
        return Err(TorsionError::BadBounds(bounds.max_order));
    }
    let abelianization = g.abelianize();
    if !abelianization.is_zero() {
        return Ok(TorsionCertificate::Obstructed { abelianization });
    }
    if let Some(x) = is_reversible(g)? {
        return Ok(TorsionCertificate::OrderFound {
            order: 2,
            conjugators: vec![Element::identity(g.spec()), x],
        });
    }
    if bounds.max_order == 2 {
        return Ok(TorsionCertificate::NotFoundWithinBounds {
            max_order: bounds.max_order,
            radius: bounds.radius,
        });
    }

    // distinct conjugates of g, each with its first conjugator in length-lex order
    let mut conjugates: Vec<(Element, Element)> = Vec::new();
    let mut index: HashMap<Element, usize> = HashMap::new();
    for entry in ball(g.spec(), bounds.radius) {
        let c = g.conjugated_unchecked(&entry.element);
        if !index.contains_key(&c) {
            index.insert(c.clone(), conjugates.len());
            conjugates.push((c, entry.element));
        }
    }

    for order in 3..=bounds.max_order {
        let mut chosen = Vec::with_capacity(order);
        if let Some(found) = search_products(&conjugates, &index, order - 1, g.clone(), &mut chosen) {
            let mut xs = vec![Element::identity(g.spec())];
            xs.extend(found.into_iter().map(|i| conjugates[i].1.clone()));
            let cert = TorsionCertificate::OrderFound { order, conjugators: xs };
            if !cert.verify(g) {
                return Err(TorsionError::Unverified("order certificate"));
            }
            return Ok(cert);
        }
    }
    Ok(TorsionCertificate::NotFoundWithinBounds {
        max_order: bounds.max_order,
        radius: bounds.radius,
    })
}

/// Chooses `remaining` more conjugates so that `partial · c_1 ⋯ c_remaining`
/// is the identity; the last one is looked up rather than enumerated.
fn search_products(
    conjugates: &[(Element, Element)],
    index: &HashMap<Element, usize>,
    remaining: usize,
    partial: Element,
    chosen: &mut Vec<usize>,
) -> Option<Vec<usize>> {
    if remaining == 1 {
        let needed = partial.inverse();
        return index.get(&needed).map(|&i| {
            let mut out = chosen.clone();
            out.push(i);
            out
        });
    }
    for (i, (c, _)) in conjugates.iter().enumerate() {
        chosen.push(i);
        let next = partial.mul_unchecked(c);
        if let Some(found) = search_products(conjugates, index, remaining - 1, next, chosen) {
            return Some(found);
        }
        chosen.pop();
    }
    None
}

/// All `x` spelled by generator words of length at most `radius` with
/// `xⁿ = g`, deduplicated and sorted.
pub fn roots_search(g: &Element, n: u32, radius: usize) -> Result<Vec<Element>, TorsionError> {
    if n == 0 {
        return Err(TorsionError::BadRootIndex);
    }
    let mut roots: Vec<Element> = ball(g.spec(), radius)
        .into_iter()
        .map(|entry| entry.element)
        .filter(|x| &x.pow(i64::from(n)) == g)
        .collect();
    roots.sort();
    Ok(roots)
}

/// Two distinct elements with equal `n`-th powers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootFailureWitness {
    pub x: Element,
    pub y: Element,
    pub n: u64,
}

/// `a` and `(ba)⁻¹ a (ba)` share their `p`-th power in `T(p,q)`.
pub fn unique_root_failure_witness(spec: GroupSpec) -> Result<RootFailureWitness, TorsionError> {
    if spec.kind() != GroupKind::TorusKnot {
        return Err(TorsionError::UnsupportedGroup(spec));
    }
    let a = Element::generator(spec, Generator::A)?;
    let b = Element::generator(spec, Generator::B)?;
    let ba = b.mul_unchecked(&a);
    let y = a.conjugated_unchecked(&ba);
    let n = spec.p();
    let power = i64::try_from(n).map_err(|_| TorsionError::Unverified("exponent too large"))?;
    if a.pow(power) != y.pow(power) || a == y {
        return Err(TorsionError::Unverified("unique-root failure witness"));
    }
    Ok(RootFailureWitness { x: a, y, n })
}

/// Whether `x⁻¹ yᵐ x = yⁿ` holds.
pub fn bs_check(x: &Element, y: &Element, m: i64, n: i64) -> Result<bool, TorsionError> {
    Ok(y.pow(m).conjugated_by(x)? == y.pow(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t23() -> GroupSpec {
        GroupSpec::torus_knot(2, 3).unwrap()
    }

    fn t35() -> GroupSpec {
        GroupSpec::torus_knot(3, 5).unwrap()
    }

    fn el(spec: GroupSpec, text: &str) -> Element {
        spec.parse_element(text).unwrap()
    }

    #[test]
    fn reversible_commutators() {
        for spec in [t23(), GroupSpec::cable(2, 3).unwrap()] {
            let g = el(spec, "[a,b]");
            let x = is_reversible(&g).unwrap().unwrap();
            assert_eq!(x, el(spec, "a"));
            assert_eq!(g.conjugated_by(&x).unwrap(), g.inverse());
        }
        assert_eq!(is_reversible(&el(t35(), "[a,b]")).unwrap(), None);
        assert_eq!(
            is_reversible(&Element::identity(t23())),
            Err(TorsionError::IdentityInput)
        );
    }

    #[test]
    fn order_search_examples() {
        let g = el(t23(), "[a,b]");
        let cert = gt_order_search(&g, SearchBounds::new(2, 4).unwrap()).unwrap();
        assert_eq!(
            cert,
            TorsionCertificate::OrderFound {
                order: 2,
                conjugators: vec![Element::identity(t23()), el(t23(), "a")]
            }
        );
        assert!(cert.verify(&g));

        let h = el(t23(), "h");
        let cert = gt_order_search(&h, SearchBounds::new(2, 4).unwrap()).unwrap();
        assert_eq!(
            cert,
            TorsionCertificate::Obstructed {
                abelianization: AbelianImage::TorusKnot(6.into())
            }
        );
        assert!(cert.verify(&h));
    }

    #[test]
    fn odd_torus_commutator_has_order_three() {
        // [a^3, b] = [a,b]^{a^2} [a,b]^a [a,b] and a^3 = h is central
        let spec = t35();
        let g = el(spec, "[a,b]");
        let by_hand = g
            .conjugated_by(&el(spec, "a^2"))
            .unwrap()
            .multiply(&g.conjugated_by(&el(spec, "a")).unwrap())
            .unwrap()
            .multiply(&g)
            .unwrap();
        assert!(by_hand.is_identity());

        let cert = gt_order_search(&g, SearchBounds::new(3, 3).unwrap()).unwrap();
        assert_eq!(cert.order(), Some(3));
        assert!(cert.verify(&g));
        let cert = gt_order_search(&g, SearchBounds::new(1, 4).unwrap()).unwrap();
        assert_eq!(cert.order(), Some(3));
    }

    #[test]
    fn small_bounds_report_not_found() {
        let g = el(t35(), "[a,b]");
        let cert = gt_order_search(&g, SearchBounds::new(0, 3).unwrap()).unwrap();
        assert_eq!(
            cert,
            TorsionCertificate::NotFoundWithinBounds { max_order: 3, radius: 0 }
        );
        let cert = gt_order_search(&g, SearchBounds::new(3, 2).unwrap()).unwrap();
        assert_eq!(cert.order(), None);
    }

    #[test]
    fn certificates_reject_wrong_relations() {
        let spec = t23();
        let g = el(spec, "[a,b]");
        let x = el(spec, "a");
        let cert = TorsionCertificate::OrderFound {
            order: 3,
            conjugators: vec![Element::identity(spec), x.clone(), x.clone()],
        };
        assert!(!cert.verify(&g));
        let cert = TorsionCertificate::OrderTwo {
            element: g.clone(),
            conjugator: el(spec, "b"),
        };
        assert!(!cert.verify(&g));
        let cert = TorsionCertificate::OrderTwo { element: g.clone(), conjugator: x };
        assert!(cert.verify(&g));
    }

    #[test]
    fn search_bounds_validation() {
        assert_eq!(SearchBounds::new(2, 1), Err(TorsionError::BadBounds(1)));
        let g = el(t23(), "[a,b]");
        assert!(gt_order_search(&g, SearchBounds { radius: 1, max_order: 1 }).is_err());
        assert!(gt_order_search(&Element::identity(t23()), SearchBounds::new(1, 2).unwrap()).is_err());
    }

    #[test]
    fn trefoil_square_roots_of_the_fiber() {
        let spec = t23();
        let h = el(spec, "h");
        let a = el(spec, "a");
        let conj = el(spec, "inv(b a) a b a");
        assert_ne!(a, conj);
        let roots = roots_search(&h, 2, 5).unwrap();
        assert!(roots.contains(&a));
        assert!(roots.contains(&conj));
        assert!(roots.iter().all(|x| x.pow(2) == h));
        let mut sorted = roots.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted, roots);
    }

    #[test]
    fn roots_edge_cases() {
        let spec = t23();
        let g = el(spec, "a b^-1");
        assert_eq!(roots_search(&g, 1, 3).unwrap(), vec![g.clone()]);
        assert!(roots_search(&el(spec, "a"), 2, 3).unwrap().is_empty());
        assert_eq!(roots_search(&g, 0, 3), Err(TorsionError::BadRootIndex));
    }

    #[test]
    fn unique_root_failures() {
        for (p, q) in [(2, 3), (3, 5), (4, 3)] {
            let spec = GroupSpec::torus_knot(p, q).unwrap();
            let w = unique_root_failure_witness(spec).unwrap();
            assert_eq!(w.n, p);
            assert_eq!(w.x, el(spec, "a"));
            assert_eq!(w.y, el(spec, "a^-1 b^-1 a b a"));
        }
        assert!(matches!(
            unique_root_failure_witness(GroupSpec::cable(2, 3).unwrap()),
            Err(TorsionError::UnsupportedGroup(_))
        ));
    }

    #[test]
    fn baumslag_solitar_examples() {
        let spec = t23();
        let h = el(spec, "h");
        let a = el(spec, "a");
        let b = el(spec, "b");
        let g = el(spec, "[a,b]");
        assert!(bs_check(&b, &h, 2, 2).unwrap());
        assert!(bs_check(&a, &g, 1, -1).unwrap());
        assert!(!bs_check(&a, &b, 1, 2).unwrap());
    }
}
