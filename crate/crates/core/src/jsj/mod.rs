//! JSJ descriptions of knot exteriors and the R / R̄ classifier.
//!
//! ```text
//! file := 'knot' STRING '{' stmt* '}'
//! stmt := 'piece' ID '=' kind ';' | 'glue' ID '--' ID ';' | 'root' ID ';'
//! kind := 'torus_knot(' INT ',' INT ')' | 'cable(' INT ',' INT ')'
//!       | 'composing(' INT ')' | 'hyperbolic(' STRING ')' | 'torus_i'
//! ```
//!
//! `#` starts a comment that runs to the end of the line. Exactly one `root`
//! statement is required, and the pieces must form a tree.

mod classify;
mod parse;

use std::fmt;

use thiserror::Error;

pub use classify::{classify, even_type, Classification, ClassifyError, GtExistence, Witness};
pub use parse::parse_jsj;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum PieceKind {
    TorusKnot { p: u64, q: u64 },
    Cable { p: u64, q: u64 },
    Composing { strands: u64 },
    Hyperbolic { label: String },
    TorusI,
}

impl fmt::Display for PieceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PieceKind::TorusKnot { p, q } => write!(f, "torus_knot({p}, {q})"),
            PieceKind::Cable { p, q } => write!(f, "cable({p}, {q})"),
            PieceKind::Composing { strands } => write!(f, "composing({strands})"),
            PieceKind::Hyperbolic { label } => write!(f, "hyperbolic({})", quote(label)),
            PieceKind::TorusI => f.write_str("torus_i"),
        }
    }
}

fn quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Piece {
    pub id: String,
    pub kind: PieceKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JsjTree {
    pub name: String,
    pub pieces: Vec<Piece>,
    /// Unordered pairs, stored with the smaller id first.
    pub edges: Vec<(String, String)>,
    pub root: String,
}

impl JsjTree {
    pub fn piece(&self, id: &str) -> Option<&Piece> {
        self.pieces.iter().find(|p| p.id == id)
    }
}

impl fmt::Display for JsjTree {
    /// Prints the tree back in the description language.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "knot {} {{", quote(&self.name))?;
        for piece in &self.pieces {
            writeln!(f, "  piece {} = {};", piece.id, piece.kind)?;
        }
        for (a, b) in &self.edges {
            writeln!(f, "  glue {a} -- {b};")?;
        }
        writeln!(f, "  root {};", self.root)?;
        f.write_str("}\n")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {kind}")]
pub struct JsjError {
    pub line: usize,
    pub column: usize,
    pub kind: JsjErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum JsjErrorKind {
    #[error("syntax error: {0}")]
    Syntax(String),
    #[error("duplicate piece id `{0}`")]
    DuplicateId(String),
    #[error("unknown piece id `{0}`")]
    UnknownId(String),
    #[error("a piece cannot be glued to itself (`{0}`)")]
    SelfGlue(String),
    #[error("pieces do not form a connected graph; `{0}` is unreachable from the root")]
    Disconnected(String),
    #[error("gluing graph has a cycle through `{0}` -- `{1}`")]
    Cycle(String, String),
    #[error("missing `root` statement")]
    MissingRoot,
    #[error("more than one `root` statement")]
    DuplicateRoot,
    #[error("no pieces declared")]
    Empty,
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
}
