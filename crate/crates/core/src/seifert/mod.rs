//! Torus knot and cable space groups as central extensions of free products
//! of two cyclic groups by the regular fiber `h`.

mod element;
mod group;
mod parse;

use thiserror::Error;

pub use element::{AbelianImage, Element, Generator};
pub use group::{GroupKind, GroupSpec};
pub use parse::{parse_word, SyntaxError, Term, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("p = {p} and q = {q} are not coprime")]
    NotCoprime { p: u64, q: u64 },
    #[error("parameters out of range for {kind:?}: p = {p}, q = {q}")]
    OutOfRange { kind: GroupKind, p: u64, q: u64 },
    #[error("expected `torus:p,q` or `cable:p,q`, got `{0}`")]
    BadGroupSyntax(String),
    #[error("elements belong to different groups")]
    SpecMismatch,
    #[error("generator `{generator}` is not defined in {spec}")]
    UnknownGenerator { generator: char, spec: GroupSpec },
    #[error("generator `{generator}` at column {column} is not defined in {spec}")]
    UnknownGeneratorAt {
        generator: char,
        spec: GroupSpec,
        column: usize,
    },
    #[error(transparent)]
    Syntax(#[from] SyntaxError),
}
