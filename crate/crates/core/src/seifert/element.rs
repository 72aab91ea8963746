use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{GroupError, GroupKind, GroupSpec};
use crate::freeprod::{reduce_with_wraps, Factor, ReducedWord};

/// Generator letters of the word grammar.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Generator {
    A,
    B,
    C,
    D,
    H,
}

impl Generator {
    pub fn from_char(c: char) -> Option<Generator> {
        Some(match c {
            'a' => Generator::A,
            'b' => Generator::B,
            'c' => Generator::C,
            'd' => Generator::D,
            'h' => Generator::H,
            _ => return None,
        })
    }

    pub fn as_char(self) -> char {
        match self {
            Generator::A => 'a',
            Generator::B => 'b',
            Generator::C => 'c',
            Generator::D => 'd',
            Generator::H => 'h',
        }
    }
}

/// A group element in normal form `h^central · lift(word)`.
///
/// `h` is the regular fiber (`a^p`), `word` is the image in the quotient free
/// product, and the lift sends each syllable `x^e` to the literal power of
/// `a`, `b` (torus knot) or `d = b^r c^s` (cable space).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Element {
    spec: GroupSpec,
    central: BigInt,
    word: ReducedWord,
}

/// Image in the first homology group.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum AbelianImage {
    TorusKnot(BigInt),
    /// Coordinates in the basis `([μ], [c])`.
    Cable(BigInt, BigInt),
}

impl AbelianImage {
    pub fn is_zero(&self) -> bool {
        match self {
            AbelianImage::TorusKnot(x) => x.is_zero(),
            AbelianImage::Cable(x, y) => x.is_zero() && y.is_zero(),
        }
    }

    fn scaled(&self, k: &BigInt) -> AbelianImage {
        match self {
            AbelianImage::TorusKnot(x) => AbelianImage::TorusKnot(x * k),
            AbelianImage::Cable(x, y) => AbelianImage::Cable(x * k, y * k),
        }
    }
}

impl Add for AbelianImage {
    type Output = AbelianImage;

    fn add(self, rhs: AbelianImage) -> AbelianImage {
        match (self, rhs) {
            (AbelianImage::TorusKnot(x), AbelianImage::TorusKnot(y)) => AbelianImage::TorusKnot(x + y),
            (AbelianImage::Cable(x1, y1), AbelianImage::Cable(x2, y2)) => {
                AbelianImage::Cable(x1 + x2, y1 + y2)
            }
            _ => panic!("adding abelian images of different groups"),
        }
    }
}

impl fmt::Display for AbelianImage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AbelianImage::TorusKnot(x) => write!(f, "{x}"),
            AbelianImage::Cable(x, y) => write!(f, "({x}, {y})"),
        }
    }
}

impl Element {
    pub fn identity(spec: GroupSpec) -> Element {
        Element {
            spec,
            central: BigInt::zero(),
            word: ReducedWord::identity(spec.quotient_specs()),
        }
    }

    /// The regular fiber `h` raised to `k`.
    pub fn fiber_power(spec: GroupSpec, k: impl Into<BigInt>) -> Element {
        Element {
            central: k.into(),
            ..Element::identity(spec)
        }
    }

    /// `h^central · lift(word)`.
    pub fn from_parts(
        spec: GroupSpec,
        central: impl Into<BigInt>,
        word: ReducedWord,
    ) -> Result<Element, GroupError> {
        if word.specs() != spec.quotient_specs() {
            return Err(GroupError::SpecMismatch);
        }
        Ok(Element {
            spec,
            central: central.into(),
            word,
        })
    }

    /// The canonical lift of a quotient word (central exponent zero).
    pub fn lift(spec: GroupSpec, word: ReducedWord) -> Result<Element, GroupError> {
        Element::from_parts(spec, 0, word)
    }

    /// `gen^exponent`, rewritten into normal form.
    pub fn generator_power(
        spec: GroupSpec,
        gen: Generator,
        exponent: impl Into<BigInt>,
    ) -> Result<Element, GroupError> {
        let e: BigInt = exponent.into();
        let specs = spec.quotient_specs();
        let from_syllable = |factor: Factor, exp: BigInt, extra: BigInt| {
            let (word, wraps) = reduce_with_wraps([(factor, exp)], specs);
            Element {
                spec,
                central: wraps + extra,
                word,
            }
        };
        let unknown = || GroupError::UnknownGenerator {
            generator: gen.as_char(),
            spec,
        };
        Ok(match (spec.kind(), gen) {
            (_, Generator::H) => Element::fiber_power(spec, e),
            (_, Generator::A) => from_syllable(Factor::First, e, BigInt::zero()),
            (GroupKind::TorusKnot, Generator::B) => from_syllable(Factor::Second, e, BigInt::zero()),
            (GroupKind::TorusKnot, _) => return Err(unknown()),
            (GroupKind::Cable, gen) => {
                let (r, s) = spec.cable_basis().expect("cable spaces carry a basis");
                let (p, q) = (BigInt::from(spec.p()), BigInt::from(spec.q()));
                let (r, s) = (BigInt::from(r), BigInt::from(s));
                match gen {
                    // b = h^{-s} d^{p}
                    Generator::B => from_syllable(Factor::Second, &p * &e, -(&s * &e)),
                    // c = h^{r} d^{-q}
                    Generator::C => from_syllable(Factor::Second, -(&q * &e), &r * &e),
                    Generator::D => from_syllable(Factor::Second, e, BigInt::zero()),
                    Generator::A | Generator::H => unreachable!(),
                }
            }
        })
    }

    pub fn generator(spec: GroupSpec, gen: Generator) -> Result<Element, GroupError> {
        Element::generator_power(spec, gen, 1)
    }

    pub fn spec(&self) -> GroupSpec {
        self.spec
    }

    /// Exponent of the fiber `h` in the normal form.
    pub fn central(&self) -> &BigInt {
        &self.central
    }

    pub fn word(&self) -> &ReducedWord {
        &self.word
    }

    pub fn is_identity(&self) -> bool {
        self.central.is_zero() && self.word.is_empty()
    }

    pub fn is_central(&self) -> bool {
        self.word.is_empty()
    }

    fn check_spec(&self, other: &Element) -> Result<(), GroupError> {
        if self.spec == other.spec {
            Ok(())
        } else {
            Err(GroupError::SpecMismatch)
        }
    }

    pub fn multiply(&self, other: &Element) -> Result<Element, GroupError> {
        self.check_spec(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn mul_unchecked(&self, other: &Element) -> Element {
        let (word, wraps) = self.word.concat_with_wraps(&other.word);
        Element {
            spec: self.spec,
            central: &self.central + &other.central + wraps,
            word,
        }
    }

    pub fn inverse(&self) -> Element {
        let (word, wraps) = reduce_with_wraps(self.word.inverse_raw(), self.spec.quotient_specs());
        Element {
            spec: self.spec,
            central: wraps - &self.central,
            word,
        }
    }

    pub fn pow(&self, n: i64) -> Element {
        let mut base = if n < 0 { self.inverse() } else { self.clone() };
        let mut n = n.unsigned_abs();
        let mut acc = Element::identity(self.spec);
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul_unchecked(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul_unchecked(&base);
            }
        }
        acc
    }

    /// `x⁻¹ · self · x`.
    pub fn conjugated_by(&self, x: &Element) -> Result<Element, GroupError> {
        self.check_spec(x)?;
        Ok(self.conjugated_unchecked(x))
    }

    pub(crate) fn conjugated_unchecked(&self, x: &Element) -> Element {
        x.inverse().mul_unchecked(self).mul_unchecked(x)
    }

    /// The commutator `[self, y] = self⁻¹ y⁻¹ self y`.
    pub fn commutator(&self, y: &Element) -> Result<Element, GroupError> {
        self.check_spec(y)?;
        Ok(self
            .inverse()
            .mul_unchecked(&y.inverse())
            .mul_unchecked(self)
            .mul_unchecked(y))
    }

    /// Word-problem equality. Normal forms are unique, so this is structural;
    /// the spec check makes cross-group comparison an error.
    pub fn equals(&self, other: &Element) -> Result<bool, GroupError> {
        self.check_spec(other)?;
        Ok(self == other)
    }

    /// The natural projection onto the quotient free product.
    pub fn project(&self) -> ReducedWord {
        self.word.clone()
    }

    pub fn abelianize(&self) -> AbelianImage {
        let p = BigInt::from(self.spec.p());
        let q = BigInt::from(self.spec.q());
        match self.spec.kind() {
            GroupKind::TorusKnot => {
                // a -> q, b -> p, h -> pq
                let mut total = &p * &q * &self.central;
                for syl in self.word.syllables() {
                    let weight = match syl.factor {
                        Factor::First => &q,
                        Factor::Second => &p,
                    };
                    total += weight * &syl.exponent;
                }
                AbelianImage::TorusKnot(total)
            }
            GroupKind::Cable => {
                // a -> (q,1), d -> (rp, s), h -> (pq, p)
                let (r, s) = self.spec.cable_basis().expect("cable spaces carry a basis");
                let h = AbelianImage::Cable(&p * &q, p.clone());
                let a = AbelianImage::Cable(q.clone(), BigInt::one());
                let d = AbelianImage::Cable(BigInt::from(r) * &p, BigInt::from(s));
                let mut total = h.scaled(&self.central);
                for syl in self.word.syllables() {
                    let gen = match syl.factor {
                        Factor::First => &a,
                        Factor::Second => &d,
                    };
                    total = total + gen.scaled(&syl.exponent);
                }
                total
            }
        }
    }

    /// Decides conjugacy: returns `x` with `x⁻¹ · self · x = other`, or `None`.
    ///
    /// Candidate conjugators are the lifts of the quotient conjugators from
    /// cyclic-rotation matches; each is checked exactly in the group.
    pub fn conjugator_to(&self, other: &Element) -> Result<Option<Element>, GroupError> {
        self.check_spec(other)?;
        if self.abelianize() != other.abelianize() {
            return Ok(None);
        }
        let candidates = self
            .word
            .conjugator_candidates(&other.word)
            .expect("same quotient");
        for word in candidates {
            let x = Element {
                spec: self.spec,
                central: BigInt::zero(),
                word,
            };
            if &self.conjugated_unchecked(&x) == other {
                return Ok(Some(x));
            }
        }
        Ok(None)
    }
}

impl Mul for &Element {
    type Output = Element;

    /// Panics if the operands belong to different groups; use
    /// [`Element::multiply`] for a checked product.
    fn mul(self, rhs: &Element) -> Element {
        self.multiply(rhs).expect("multiplying elements of different groups")
    }
}

impl PartialOrd for Element {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Quotient word first (shortest, then lexicographic), then central exponent.
impl Ord for Element {
    fn cmp(&self, other: &Self) -> Ordering {
        self.word
            .cmp(&other.word)
            .then_with(|| self.central.cmp(&other.central))
            .then_with(|| self.spec.cmp(&other.spec))
    }
}

impl fmt::Display for Element {
    /// Prints the normal form in the generator-word grammar, e.g.
    /// `h^-2 a b^2 a b`; the identity prints as `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return f.write_str("1");
        }
        if !self.central.is_zero() {
            f.write_str("h")?;
            if !self.central.is_one() {
                write!(f, "^{}", self.central)?;
            }
            if !self.word.is_empty() {
                f.write_str(" ")?;
            }
        }
        write!(f, "{}", self.word.display_with(self.spec.factor_letters()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t23() -> GroupSpec {
        GroupSpec::torus_knot(2, 3).unwrap()
    }

    fn gen(spec: GroupSpec, g: Generator) -> Element {
        Element::generator(spec, g).unwrap()
    }

    #[test]
    fn a_squared_is_the_fiber() {
        let spec = t23();
        let a = gen(spec, Generator::A);
        let b = gen(spec, Generator::B);
        assert_eq!(&a * &a, Element::fiber_power(spec, 1));
        assert_eq!(b.pow(3), Element::fiber_power(spec, 1));
        assert_ne!(a, b);
        assert!(a.pow(-2).equals(&Element::fiber_power(spec, -1)).unwrap());
    }

    #[test]
    fn inverse_law() {
        let spec = t23();
        let a = gen(spec, Generator::A);
        let b = gen(spec, Generator::B);
        let c = a.commutator(&b).unwrap();
        assert!((&c * &c.inverse()).is_identity());
        assert!((&c.inverse() * &c).is_identity());
        let h = Element::fiber_power(spec, 1);
        assert_eq!(h.inverse(), Element::fiber_power(spec, -1));
        assert!(Element::identity(spec).inverse().is_identity());
    }

    #[test]
    fn abelianization_of_generators() {
        let spec = t23();
        assert_eq!(gen(spec, Generator::A).abelianize(), AbelianImage::TorusKnot(3.into()));
        assert_eq!(gen(spec, Generator::B).abelianize(), AbelianImage::TorusKnot(2.into()));
        assert_eq!(gen(spec, Generator::H).abelianize(), AbelianImage::TorusKnot(6.into()));

        let cable = GroupSpec::cable(2, 3).unwrap();
        assert_eq!(gen(cable, Generator::A).abelianize(), AbelianImage::Cable(3.into(), 1.into()));
        assert_eq!(gen(cable, Generator::B).abelianize(), AbelianImage::Cable(2.into(), 0.into()));
        assert_eq!(gen(cable, Generator::C).abelianize(), AbelianImage::Cable(0.into(), 1.into()));
        assert_eq!(gen(cable, Generator::H).abelianize(), AbelianImage::Cable(6.into(), 2.into()));
        assert_eq!(gen(cable, Generator::D).abelianize(), AbelianImage::Cable(4.into(), 1.into()));
    }

    #[test]
    fn cable_relations_hold() {
        for (p, q) in [(2, 3), (4, 3), (3, 2), (2, 1), (5, 7)] {
            let spec = GroupSpec::cable(p, q).unwrap();
            let a = gen(spec, Generator::A);
            let b = gen(spec, Generator::B);
            let c = gen(spec, Generator::C);
            assert_eq!(&b * &c, &c * &b);
            assert_eq!(&b.pow(q as i64) * &c.pow(p as i64), a.pow(p as i64));
            assert_eq!(a.pow(p as i64), gen(spec, Generator::H));
        }
    }

    #[test]
    fn torus_generators_reject_cable_letters() {
        assert!(matches!(
            Element::generator(t23(), Generator::C),
            Err(GroupError::UnknownGenerator { generator: 'c', .. })
        ));
        assert!(Element::generator(t23(), Generator::D).is_err());
    }

    #[test]
    fn spec_mismatch_is_an_error() {
        let a = gen(t23(), Generator::A);
        let other = gen(GroupSpec::torus_knot(3, 5).unwrap(), Generator::A);
        assert_eq!(a.multiply(&other), Err(GroupError::SpecMismatch));
        assert_eq!(a.equals(&other), Err(GroupError::SpecMismatch));
        assert_eq!(a.conjugated_by(&other), Err(GroupError::SpecMismatch));
    }

    #[test]
    fn display_normal_forms() {
        let spec = t23();
        let c = gen(spec, Generator::A).commutator(&gen(spec, Generator::B)).unwrap();
        assert_eq!(c.to_string(), "h^-2 a b^2 a b");
        assert_eq!(Element::identity(spec).to_string(), "1");
        assert_eq!(Element::fiber_power(spec, 1).to_string(), "h");
    }
}
