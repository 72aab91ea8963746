//! Words in a free product of two cyclic groups.
//!
//! The first factor is always finite (`Z_p`), the second is either finite
//! (`Z_q`) or infinite cyclic. A [`ReducedWord`] is an alternating sequence
//! of nontrivial syllables; finite-factor exponents are kept in the canonical
//! range `[1, m-1]`, so two words are equal as group elements exactly when
//! their syllable sequences are equal.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FreeProductError {
    #[error("finite factor order must be at least 2, got {0}")]
    InvalidOrder(u64),
    #[error("words live in different free products")]
    SpecMismatch,
    #[error("misuse: {0}")]
    Misuse(&'static str),
}

/// Order of one cyclic factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FactorSpec {
    Finite(u64),
    Infinite,
}

impl FactorSpec {
    pub fn finite(order: u64) -> Result<Self, FreeProductError> {
        if order < 2 {
            return Err(FreeProductError::InvalidOrder(order));
        }
        Ok(FactorSpec::Finite(order))
    }

    pub fn order(self) -> Option<u64> {
        match self {
            FactorSpec::Finite(m) => Some(m),
            FactorSpec::Infinite => None,
        }
    }

    /// Splits `exponent` into its canonical representative and the number of
    /// full turns around the factor (the Euclidean quotient).
    pub fn canonicalize(self, exponent: &BigInt) -> (BigInt, BigInt) {
        match self {
            FactorSpec::Finite(m) => {
                let m = BigInt::from(m);
                let (quot, rem) = exponent.div_mod_floor(&m);
                (rem, quot)
            }
            FactorSpec::Infinite => (exponent.clone(), BigInt::zero()),
        }
    }
}

/// Index of a factor: `First` is `Z_p`, `Second` is `Z_q` or `Z`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Factor {
    First,
    Second,
}

impl Factor {
    pub fn index(self) -> usize {
        match self {
            Factor::First => 0,
            Factor::Second => 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Syllable {
    pub factor: Factor,
    pub exponent: BigInt,
}

impl Syllable {
    pub fn new(factor: Factor, exponent: impl Into<BigInt>) -> Self {
        Syllable {
            factor,
            exponent: exponent.into(),
        }
    }
}

/// Order of a syllable's factor element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SyllableOrder {
    Finite(u64),
    Infinite,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ReducedWord {
    specs: [FactorSpec; 2],
    syllables: Vec<Syllable>,
}

/// Reduces a raw sequence of `(factor, exponent)` pairs.
pub fn reduce<I, E>(raw: I, specs: [FactorSpec; 2]) -> ReducedWord
where
    I: IntoIterator<Item = (Factor, E)>,
    E: Into<BigInt>,
{
    reduce_with_wraps(raw, specs).0
}

/// Like [`reduce`], but also returns the total number of times an exponent
/// wrapped around a finite factor while canonicalizing. In a central
/// extension whose fiber is `x^m` for every finite factor generator `x`, this
/// is exactly the fiber exponent produced by the reduction.
pub fn reduce_with_wraps<I, E>(raw: I, specs: [FactorSpec; 2]) -> (ReducedWord, BigInt)
where
    I: IntoIterator<Item = (Factor, E)>,
    E: Into<BigInt>,
{
    let mut word = ReducedWord::identity(specs);
    let mut wraps = BigInt::zero();
    for (factor, exponent) in raw {
        word.push(factor, exponent.into(), &mut wraps);
    }
    (word, wraps)
}

impl ReducedWord {
    pub fn identity(specs: [FactorSpec; 2]) -> Self {
        ReducedWord {
            specs,
            syllables: Vec::new(),
        }
    }

    /// Builds a word from syllables that already satisfy the normal-form
    /// invariants.
    pub fn from_syllables(
        syllables: Vec<Syllable>,
        specs: [FactorSpec; 2],
    ) -> Result<Self, FreeProductError> {
        for pair in syllables.windows(2) {
            if pair[0].factor == pair[1].factor {
                return Err(FreeProductError::Misuse("adjacent syllables share a factor"));
            }
        }
        for syl in &syllables {
            let ok = match specs[syl.factor.index()] {
                FactorSpec::Finite(m) => {
                    syl.exponent.is_positive() && syl.exponent < BigInt::from(m)
                }
                FactorSpec::Infinite => !syl.exponent.is_zero(),
            };
            if !ok {
                return Err(FreeProductError::Misuse("syllable exponent is not canonical"));
            }
        }
        Ok(ReducedWord { specs, syllables })
    }

    pub fn specs(&self) -> [FactorSpec; 2] {
        self.specs
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.syllables
    }

    pub fn len(&self) -> usize {
        self.syllables.len()
    }

    pub fn is_empty(&self) -> bool {
        self.syllables.is_empty()
    }

    fn check_specs(&self, other: &ReducedWord) -> Result<(), FreeProductError> {
        if self.specs == other.specs {
            Ok(())
        } else {
            Err(FreeProductError::SpecMismatch)
        }
    }

    /// Appends one syllable, merging with the tail until the word is reduced.
    fn push(&mut self, factor: Factor, exponent: BigInt, wraps: &mut BigInt) {
        let spec = self.specs[factor.index()];
        let (exponent, turns) = spec.canonicalize(&exponent);
        *wraps += turns;
        if exponent.is_zero() {
            return;
        }
        match self.syllables.last_mut() {
            Some(top) if top.factor == factor => {
                let (sum, turns) = spec.canonicalize(&(&top.exponent + exponent));
                *wraps += turns;
                if sum.is_zero() {
                    self.syllables.pop();
                } else {
                    top.exponent = sum;
                }
            }
            _ => self.syllables.push(Syllable { factor, exponent }),
        }
    }

    /// Product in the free product, reduced.
    pub fn concat(&self, other: &ReducedWord) -> Result<ReducedWord, FreeProductError> {
        self.check_specs(other)?;
        Ok(self.concat_with_wraps(other).0)
    }

    pub(crate) fn concat_with_wraps(&self, other: &ReducedWord) -> (ReducedWord, BigInt) {
        let mut word = self.clone();
        let mut wraps = BigInt::zero();
        for syl in &other.syllables {
            word.push(syl.factor, syl.exponent.clone(), &mut wraps);
        }
        (word, wraps)
    }

    /// The raw letters of the inverse: syllables reversed with negated
    /// exponents, before canonicalization.
    pub(crate) fn inverse_raw(&self) -> impl Iterator<Item = (Factor, BigInt)> + '_ {
        self.syllables
            .iter()
            .rev()
            .map(|s| (s.factor, -s.exponent.clone()))
    }

    pub fn inverse(&self) -> ReducedWord {
        reduce(self.inverse_raw(), self.specs)
    }

    fn mul(&self, other: &ReducedWord) -> ReducedWord {
        self.concat_with_wraps(other).0
    }

    /// Returns `(core, conjugator)` with `self = conjugator⁻¹ · core · conjugator`
    /// and `core` cyclically reduced.
    pub fn cyclically_reduce(&self) -> (ReducedWord, ReducedWord) {
        let mut core = self.clone();
        let mut conjugator = ReducedWord::identity(self.specs);
        loop {
            let n = core.syllables.len();
            if n < 2 || core.syllables[0].factor != core.syllables[n - 1].factor {
                return (core, conjugator);
            }
            let first = core.syllables[0].clone();
            let last = core.syllables[n - 1].clone();
            let spec = self.specs[first.factor.index()];
            let (sum, _) = spec.canonicalize(&(&first.exponent + &last.exponent));
            let tail = ReducedWord::single(self.specs, last);
            if sum.is_zero() {
                // core = s · M · s⁻¹
                core.syllables.remove(0);
                core.syllables.pop();
                conjugator = tail.mul(&conjugator);
            } else {
                // conjugate by the last syllable: merge it into the front
                core.syllables.pop();
                core.syllables[0].exponent = sum;
                conjugator = tail.mul(&conjugator);
            }
        }
    }

    fn single(specs: [FactorSpec; 2], syllable: Syllable) -> ReducedWord {
        ReducedWord {
            specs,
            syllables: vec![syllable],
        }
    }

    fn prefix(&self, len: usize) -> ReducedWord {
        ReducedWord {
            specs: self.specs,
            syllables: self.syllables[..len].to_vec(),
        }
    }

    fn rotation_equals(&self, shift: usize, other: &ReducedWord) -> bool {
        let n = self.syllables.len();
        n == other.syllables.len()
            && (0..n).all(|i| self.syllables[(i + shift) % n] == other.syllables[i])
    }

    /// Every conjugator `x` with `x⁻¹ · self · x = other` that arises from a
    /// cyclic-rotation match of the cyclically reduced cores, sorted
    /// canonically (shortest first, then lexicographic). Empty when the words
    /// are not conjugate.
    pub fn conjugator_candidates(
        &self,
        other: &ReducedWord,
    ) -> Result<Vec<ReducedWord>, FreeProductError> {
        self.check_specs(other)?;
        let (core_u, conj_u) = self.cyclically_reduce();
        let (core_v, conj_v) = other.cyclically_reduce();
        let outer = conj_u.inverse();
        let mut found = Vec::new();
        if core_u.len() <= 1 {
            if core_u == core_v {
                found.push(outer.mul(&conj_v));
            }
        } else if core_u.len() == core_v.len() {
            let core_u_inv = core_u.inverse();
            for shift in 0..core_u.len() {
                if core_u.rotation_equals(shift, &core_v) {
                    let t = core_u.prefix(shift);
                    let t_alt = core_u_inv.mul(&t);
                    for t in [t, t_alt] {
                        found.push(outer.mul(&t).mul(&conj_v));
                    }
                }
            }
        }
        found.sort();
        found.dedup();
        Ok(found)
    }

    /// The canonical conjugator `x` with `x⁻¹ · self · x = other`, if any.
    pub fn conjugator_to(&self, other: &ReducedWord) -> Result<Option<ReducedWord>, FreeProductError> {
        Ok(self.conjugator_candidates(other)?.into_iter().next())
    }

    /// Conjugate `x⁻¹ · self · x`.
    pub fn conjugated_by(&self, x: &ReducedWord) -> Result<ReducedWord, FreeProductError> {
        self.check_specs(x)?;
        Ok(x.inverse().mul(self).mul(x))
    }

    /// Minimum order of the syllables of a cyclically reduced word of
    /// syllable length at least two.
    pub fn min_syllable_order(&self) -> Result<SyllableOrder, FreeProductError> {
        let n = self.syllables.len();
        if n < 2 {
            return Err(FreeProductError::Misuse("min_syllable_order needs syllable length >= 2"));
        }
        if self.syllables[0].factor == self.syllables[n - 1].factor {
            return Err(FreeProductError::Misuse("min_syllable_order needs a cyclically reduced word"));
        }
        let order = self
            .syllables
            .iter()
            .map(|s| match self.specs[s.factor.index()] {
                FactorSpec::Finite(m) => {
                    let big_m = BigInt::from(m);
                    let g = big_m.gcd(&s.exponent);
                    let ord = (big_m / g).try_into().expect("order divides a u64");
                    SyllableOrder::Finite(ord)
                }
                FactorSpec::Infinite => SyllableOrder::Infinite,
            })
            .min()
            .expect("nonempty");
        Ok(order)
    }

    /// Formats the word using the given letters for the two factors.
    pub fn display_with<'a>(&'a self, letters: [&'a str; 2]) -> impl fmt::Display + 'a {
        WordDisplay {
            word: self,
            letters,
        }
    }
}

impl PartialOrd for ReducedWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Shortest first, then lexicographic on `(factor, exponent)`.
impl Ord for ReducedWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.syllables
            .len()
            .cmp(&other.syllables.len())
            .then_with(|| self.syllables.cmp(&other.syllables))
            .then_with(|| self.specs.cmp(&other.specs))
    }
}

struct WordDisplay<'a> {
    word: &'a ReducedWord,
    letters: [&'a str; 2],
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, syl) in self.word.syllables.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            f.write_str(self.letters[syl.factor.index()])?;
            if !syl.exponent.is_one() {
                write!(f, "^{}", syl.exponent)?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for ReducedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("1");
        }
        write!(f, "{}", self.display_with(["a", "b"]))
    }
}
