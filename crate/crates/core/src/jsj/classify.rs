use std::collections::{HashMap, HashSet};

use thiserror::Error;

use super::{JsjErrorKind, JsjTree, PieceKind};
use crate::seifert::{Element, Generator, GroupSpec};
use crate::torsion::{is_reversible, TorsionCertificate};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("invalid tree: {0}")]
    InvalidTree(JsjErrorKind),
    #[error("even_type is defined only for torus knot and cable pieces, not {0}")]
    NotSeifertPiece(PieceKind),
    #[error("witness for piece `{0}` failed verification")]
    WitnessFailed(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GtExistence {
    Yes,
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub piece: String,
    pub certificate: TorsionCertificate,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub name: String,
    pub is_r: bool,
    pub is_rbar: bool,
    pub has_order_two_gt: bool,
    pub has_any_gt: GtExistence,
    pub witnesses: Vec<Witness>,
}

/// Torus knot spaces are even when `p` or `q` is even; cable spaces when
/// `p` is even.
pub fn even_type(piece: &PieceKind) -> Result<bool, ClassifyError> {
    match *piece {
        PieceKind::TorusKnot { p, q } => Ok(p % 2 == 0 || q % 2 == 0),
        PieceKind::Cable { p, .. } => Ok(p % 2 == 0),
        _ => Err(ClassifyError::NotSeifertPiece(piece.clone())),
    }
}

impl JsjTree {
    /// Unique ids, known endpoints, and a tree containing the root.
    pub fn check_structure(&self) -> Result<(), JsjErrorKind> {
        if self.pieces.is_empty() {
            return Err(JsjErrorKind::Empty);
        }
        let mut ids = HashSet::new();
        for piece in &self.pieces {
            if !ids.insert(piece.id.as_str()) {
                return Err(JsjErrorKind::DuplicateId(piece.id.clone()));
            }
        }
        if !ids.contains(self.root.as_str()) {
            return Err(JsjErrorKind::UnknownId(self.root.clone()));
        }
        let mut adjacency: HashMap<&str, Vec<&str>> = HashMap::new();
        for (a, b) in &self.edges {
            for id in [a, b] {
                if !ids.contains(id.as_str()) {
                    return Err(JsjErrorKind::UnknownId(id.clone()));
                }
            }
            if a == b {
                return Err(JsjErrorKind::SelfGlue(a.clone()));
            }
            adjacency.entry(a).or_default().push(b);
            adjacency.entry(b).or_default().push(a);
        }
        let mut seen = HashSet::from([self.root.as_str()]);
        let mut stack = vec![self.root.as_str()];
        while let Some(id) = stack.pop() {
            for &next in adjacency.get(id).into_iter().flatten() {
                if seen.insert(next) {
                    stack.push(next);
                }
            }
        }
        if let Some(piece) = self.pieces.iter().find(|p| !seen.contains(p.id.as_str())) {
            return Err(JsjErrorKind::Disconnected(piece.id.clone()));
        }
        if self.edges.len() != self.pieces.len() - 1 {
            let (a, b) = self.edges.last().expect("connected graph with extra edges");
            return Err(JsjErrorKind::Cycle(a.clone(), b.clone()));
        }
        Ok(())
    }
}

/// `([x^k, y], x^k)` where `x^{2k}` is the fiber, so the commutator is
/// reversed by conjugation with `x^k`.
fn order_two_witness(piece: &PieceKind) -> Option<(Element, Element)> {
    let (spec, gen, other, half) = match *piece {
        PieceKind::TorusKnot { p, q } if p % 2 == 0 => {
            (GroupSpec::torus_knot(p, q).ok()?, Generator::A, Generator::B, p / 2)
        }
        PieceKind::TorusKnot { p, q } if q % 2 == 0 => {
            (GroupSpec::torus_knot(p, q).ok()?, Generator::B, Generator::A, q / 2)
        }
        PieceKind::Cable { p, q } if p % 2 == 0 => {
            (GroupSpec::cable(p, q).ok()?, Generator::A, Generator::B, p / 2)
        }
        _ => return None,
    };
    let x = Element::generator_power(spec, gen, half).ok()?;
    let y = Element::generator(spec, other).ok()?;
    Some((x.commutator(&y).ok()?, x))
}

pub fn classify(tree: &JsjTree) -> Result<Classification, ClassifyError> {
    tree.check_structure().map_err(ClassifyError::InvalidTree)?;
    let mut has_seifert_obstruction = false;
    let mut witnesses = Vec::new();
    for piece in &tree.pieces {
        if !matches!(piece.kind, PieceKind::TorusKnot { .. } | PieceKind::Cable { .. }) {
            continue;
        }
        has_seifert_obstruction = true;
        if !even_type(&piece.kind)? {
            continue;
        }
        let failed = || ClassifyError::WitnessFailed(piece.id.clone());
        let (g, x) = order_two_witness(&piece.kind).ok_or_else(failed)?;
        let certificate = TorsionCertificate::OrderTwo {
            element: g.clone(),
            conjugator: x,
        };
        let decided = is_reversible(&g).map_err(|_| failed())?;
        if !certificate.verify(&g) || decided.is_none() {
            return Err(failed());
        }
        witnesses.push(Witness {
            piece: piece.id.clone(),
            certificate,
        });
    }
    let is_r = !has_seifert_obstruction;
    let has_order_two_gt = !witnesses.is_empty();
    Ok(Classification {
        name: tree.name.clone(),
        is_r,
        is_rbar: is_r,
        has_order_two_gt,
        has_any_gt: if has_order_two_gt {
            GtExistence::Yes
        } else {
            GtExistence::Unknown
        },
        witnesses,
    })
}
