use std::fmt;

use num_integer::Integer;

use super::GroupError;
use crate::freeprod::FactorSpec;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GroupKind {
    /// `⟨a, b | a^p = b^q⟩`, the exterior of `T(p,q)` in the 3-sphere.
    TorusKnot,
    /// `⟨a, b, c | [b,c] = 1, b^q c^p = a^p⟩`, the exterior of `T(p,q)` in a
    /// solid torus.
    Cable,
}

/// One torus knot space or cable space group, with its derived constants.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupSpec {
    kind: GroupKind,
    p: u64,
    q: u64,
    /// `(r, s)` with `p·r − q·s = 1`; cable spaces only.
    basis: Option<(u64, u64)>,
}

impl GroupSpec {
    pub fn new(kind: GroupKind, p: u64, q: u64) -> Result<Self, GroupError> {
        let min_q = match kind {
            GroupKind::TorusKnot => 2,
            GroupKind::Cable => 1,
        };
        if p < 2 || q < min_q {
            return Err(GroupError::OutOfRange { kind, p, q });
        }
        if p.gcd(&q) != 1 {
            return Err(GroupError::NotCoprime { p, q });
        }
        let basis = match kind {
            GroupKind::TorusKnot => None,
            GroupKind::Cable => Some(cable_basis(p, q)),
        };
        Ok(GroupSpec { kind, p, q, basis })
    }

    pub fn torus_knot(p: u64, q: u64) -> Result<Self, GroupError> {
        Self::new(GroupKind::TorusKnot, p, q)
    }

    pub fn cable(p: u64, q: u64) -> Result<Self, GroupError> {
        Self::new(GroupKind::Cable, p, q)
    }

    pub fn kind(&self) -> GroupKind {
        self.kind
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// The canonical `(r, s)` with `p·r − q·s = 1`, `r ∈ [1, q]`.
    pub fn cable_basis(&self) -> Option<(u64, u64)> {
        self.basis
    }

    /// Factor orders of the quotient by the fiber: `Z_p * Z_q` or `Z_p * Z`.
    pub fn quotient_specs(&self) -> [FactorSpec; 2] {
        let second = match self.kind {
            GroupKind::TorusKnot => FactorSpec::Finite(self.q),
            GroupKind::Cable => FactorSpec::Infinite,
        };
        [FactorSpec::Finite(self.p), second]
    }

    /// Letters used to print syllables of the two quotient factors.
    pub fn factor_letters(&self) -> [&'static str; 2] {
        match self.kind {
            GroupKind::TorusKnot => ["a", "b"],
            GroupKind::Cable => ["a", "d"],
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            GroupKind::TorusKnot => write!(f, "torus:{},{}", self.p, self.q),
            GroupKind::Cable => write!(f, "cable:{},{}", self.p, self.q),
        }
    }
}

impl std::str::FromStr for GroupSpec {
    type Err = GroupError;

    /// Parses `torus:p,q` or `cable:p,q`.
    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let bad = || GroupError::BadGroupSyntax(text.to_string());
        let (kind, params) = text.split_once(':').ok_or_else(bad)?;
        let kind = match kind.trim() {
            "torus" => GroupKind::TorusKnot,
            "cable" => GroupKind::Cable,
            _ => return Err(bad()),
        };
        let (p, q) = params.split_once(',').ok_or_else(bad)?;
        let p = p.trim().parse().map_err(|_| bad())?;
        let q = q.trim().parse().map_err(|_| bad())?;
        GroupSpec::new(kind, p, q)
    }
}

fn cable_basis(p: u64, q: u64) -> (u64, u64) {
    if q == 1 {
        return (1, p - 1);
    }
    let (p_i, q_i) = (p as i128, q as i128);
    let ext = p_i.extended_gcd(&q_i);
    let r = ext.x.rem_euclid(q_i);
    let s = (p_i * r - 1) / q_i;
    debug_assert_eq!(p_i * r - q_i * s, 1);
    (r as u64, s as u64)
}
