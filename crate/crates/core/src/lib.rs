//! Exact computations in the Seifert-fibered pieces of knot exteriors.
//!
//! * [`freeprod`]: reduced words in `Z_p * Z_q` and `Z_p * Z`.
//! * [`seifert`]: normal forms, the word problem and conjugacy in torus knot
//!   and cable space groups.
//! * [`torsion`]: order-two generalized torsion, bounded order searches,
//!   root equations and Baumslag–Solitar checks.
//! * [`sclbounds`]: exact rational bounds on stable commutator length.
//! * [`jsj`]: a small description language for JSJ trees and the R / R̄
//!   classifier built on it.

pub mod freeprod;
pub mod jsj;
pub mod sclbounds;
pub mod seifert;
pub mod torsion;

pub use freeprod::{FactorSpec, ReducedWord};
pub use jsj::{classify, parse_jsj, Classification, JsjTree, PieceKind};
pub use sclbounds::SclInterval;
pub use seifert::{AbelianImage, Element, Generator, GroupError, GroupKind, GroupSpec};
pub use torsion::{SearchBounds, TorsionCertificate};
