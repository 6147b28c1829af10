use thiserror::Error;

use crate::face::MAX_VERTICES;

/// Errors raised by complex construction and the decision procedures.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex position {0} is outside the vertex set")]
    InvalidVertex(usize),
    #[error("unknown vertex label `{0}`")]
    UnknownLabel(String),
    #[error("vertex labels must be nonempty")]
    EmptyLabel,
    #[error("duplicate vertex label `{0}`")]
    DuplicateLabel(String),
    #[error("{0} vertices requested, at most {MAX_VERTICES} are supported")]
    TooManyVertices(usize),
    #[error("the empty set cannot be a nonface")]
    InvalidNonface,
    #[error("operation is undefined on the void complex")]
    VoidComplex,
    #[error("the Alexander dual of a full simplex is the void complex")]
    VoidDual,
    #[error("operation requires a complex with at least one nonempty facet")]
    InvalidComplex,
    #[error("operation requires a pure complex")]
    NotPure,
    #[error("the given set is not a face of the complex")]
    NotAFace,
    #[error("the empty face is not allowed here")]
    EmptyFace,
    #[error("facet order is not a permutation of the facets or is not a shelling")]
    InvalidOrder,
    #[error("{0:?} is not a permutation of 0..{1}")]
    InvalidPermutation(Vec<usize>, usize),
}

pub type Result<T> = std::result::Result<T, Error>;
