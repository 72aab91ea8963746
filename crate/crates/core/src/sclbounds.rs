//! Exact rational bounds on stable commutator length.
//!
//! Lower bounds come from the spectral gap in the quotient free product
//! (`scl ≥ 1/2 − 1/N` for a cyclically reduced word of length at least two
//! whose syllables have minimum order `N`) pulled back along the projection,
//! which cannot increase scl. Upper bounds come from generalized torsion: an
//! element of order `k` has `scl ≤ 1/2 − 1/k`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::freeprod::SyllableOrder;
use crate::seifert::{AbelianImage, Element};
use crate::torsion::{gt_order_search, is_reversible, SearchBounds, TorsionError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SclError {
    #[error("abelianization {0} is nonzero; only null-homologous elements are bounded")]
    NotNullHomologous(AbelianImage),
    #[error("the identity has no scl interval")]
    IdentityInput,
    #[error("order bound needs k >= 2, got {0}")]
    BadOrder(u64),
    #[error("genus must be at least 1, got {0}")]
    BadGenus(u64),
    #[error("internal contradiction: {0}")]
    Contradiction(String),
    #[error(transparent)]
    Torsion(#[from] TorsionError),
}

fn half() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(2))
}

/// `1/2 − 1/N` for the cyclically reduced projection of `g`, or `0` when the
/// projection is conjugate into a factor.
pub fn gap_lower_bound(g: &Element) -> Result<BigRational, SclError> {
    let image = g.abelianize();
    if !image.is_zero() {
        return Err(SclError::NotNullHomologous(image));
    }
    let (core, _) = g.project().cyclically_reduce();
    if core.len() < 2 {
        return Ok(BigRational::zero());
    }
    let bound = match core.min_syllable_order().expect("cyclically reduced, length >= 2") {
        SyllableOrder::Finite(n) => half() - BigRational::new(BigInt::one(), BigInt::from(n)),
        SyllableOrder::Infinite => half(),
    };
    Ok(bound)
}

/// `1/2 − 1/k`, the bound for a generalized torsion element of order `k`.
pub fn order_upper_bound(k: u64) -> Result<BigRational, SclError> {
    if k < 2 {
        return Err(SclError::BadOrder(k));
    }
    Ok(half() - BigRational::new(BigInt::one(), BigInt::from(k)))
}

/// `genus − 1/2`, the scl of the longitude of a knot of the given genus.
pub fn longitude_scl(genus: u64) -> Result<BigRational, SclError> {
    if genus < 1 {
        return Err(SclError::BadGenus(genus));
    }
    Ok(BigRational::from_integer(BigInt::from(genus)) - half())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SclInterval {
    pub lower: BigRational,
    /// `None` is `+∞`.
    pub upper: Option<BigRational>,
    pub lower_source: String,
    pub upper_source: String,
}

impl SclInterval {
    pub fn contains(&self, x: &BigRational) -> bool {
        &self.lower <= x && self.upper.as_ref().is_none_or(|u| x <= u)
    }
}

impl fmt::Display for SclInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.upper {
            Some(u) => write!(f, "[{}, {}]", self.lower, u),
            None => write!(f, "[{}, +inf)", self.lower),
        }
    }
}

pub fn scl_interval(g: &Element, bounds: SearchBounds) -> Result<SclInterval, SclError> {
    if g.is_identity() {
        return Err(SclError::IdentityInput);
    }
    let lower = gap_lower_bound(g)?;
    let lower_source = if lower.is_zero() {
        "trivial bound: projection conjugate into a factor or minimum syllable order 2".to_string()
    } else {
        "spectral gap 1/2 - 1/N in the quotient free product, pulled back by monotonicity".to_string()
    };
    let cert = gt_order_search(g, bounds)?;
    let (upper, upper_source) = match cert.order() {
        Some(k) => (
            Some(order_upper_bound(k as u64)?),
            format!("generalized torsion of order {k}: scl <= 1/2 - 1/{k}"),
        ),
        None => (None, format!("no bound: {cert}")),
    };
    if let Some(u) = &upper {
        if &lower > u {
            return Err(SclError::Contradiction(format!(
                "lower bound {lower} exceeds upper bound {u} for {g}"
            )));
        }
    }
    Ok(SclInterval {
        lower,
        upper,
        lower_source,
        upper_source,
    })
}

/// A reversible element must have a zero gap bound; anything else would
/// contradict the two bounds used here.
pub fn check_consistency(g: &Element) -> Result<(), SclError> {
    if g.is_identity() || !g.abelianize().is_zero() {
        return Ok(());
    }
    if is_reversible(g)?.is_some() {
        let lower = gap_lower_bound(g)?;
        if !lower.is_zero() {
            return Err(SclError::Contradiction(format!(
                "{g} is reversible but its gap bound is {lower}"
            )));
        }
    }
    Ok(())
}
