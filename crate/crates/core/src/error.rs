use thiserror::Error;

use crate::complex::Face;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("complex has no facets")]
    Empty,
    #[error("facet {0} is empty")]
    EmptyFacet(usize),
    #[error("facet {index} repeats vertex {label}")]
    RepeatedVertex { index: usize, label: u32 },
    #[error("complex is not pure: found facets of dimension {expected} and {found}")]
    NotPure { expected: usize, found: usize },
    #[error("facet {inner} is contained in facet {outer}")]
    ContainedFacet { inner: Face, outer: Face },
    #[error("{0} is not a face of the complex")]
    NotAFace(Face),
    #[error("{0} is not a facet of the complex")]
    NotAFacet(Face),
    #[error("link of the facet {0} is empty")]
    EmptyLink(Face),
    #[error("complex is not a pseudomanifold: {0}")]
    NotPseudomanifold(String),
    #[error("illegal bistellar move: {0}")]
    IllegalMove(String),
    #[error("flip budget must be positive")]
    BudgetZero,
    #[error("gluing map is not an isomorphism of the boundary spheres: {0}")]
    IncompatibleGluing(String),
    #[error("expected dimension {expected}, got {found}")]
    WrongDimension { expected: usize, found: usize },
    #[error("complex is not a closed surface: {0}")]
    NotASurface(String),
    #[error("requested size {requested} exceeds the configured cap {cap}")]
    CapExceeded { requested: usize, cap: usize },
    #[error("too many vertices for this operation ({n} > {max})")]
    TooManyVertices { n: usize, max: usize },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("line {line}: label {label} out of range 1..={n}")]
    LabelOutOfRange { line: usize, label: u64, n: usize },
    #[error("header declares {declared}, body has {found}")]
    HeaderMismatch { declared: String, found: String },
    #[error("embedding lacks coordinates for vertex {0}")]
    IncompleteEmbedding(u32),
    #[error("unknown catalog entry `{0}`")]
    UnknownEntry(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
