use thiserror::Error;

use crate::lattice::{Covector, ExponentVector};

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty support")]
    EmptySupport,

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("expected {expected} polytopes or polynomials, found {found}")]
    WrongCount { expected: usize, found: usize },

    #[error("index {index} out of range for a collection of {len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("zero polynomial")]
    ZeroPolynomial,

    #[error("zero coefficient in a Parshin symbol entry {index}")]
    ZeroCoefficient { index: usize },

    #[error("exponent {point:?} is not a vertex of the Newton polytope")]
    NotAVertex { point: ExponentVector },

    #[error("polytopes span a lattice of rank {span}, more than the declared rank {rank}")]
    RankMismatch { span: usize, rank: usize },

    /// The collection fails the developedness condition; the covector
    /// selects a face whose decomposition has no vertex term.
    #[error("collection is not developed; witness covector {witness}")]
    NotDeveloped { witness: Covector },

    #[error("collection is not {index}-developed; witness covector {witness}")]
    NotIDeveloped { index: usize, witness: Covector },

    #[error(
        "polynomial {index} has a zero coefficient at vertex {vertex:?} of its declared polytope"
    )]
    DegenerateVertexCoefficient {
        index: usize,
        vertex: ExponentVector,
    },

    #[error("Newton polytope of polynomial {index} is not contained in its declared polytope")]
    OutsideDeclaredPolytope { index: usize },

    #[error("indices must differ, both are {index}")]
    SameIndex { index: usize },

    #[error(
        "facet with normal {normal} has several vertex faces with differing nonzero contributions"
    )]
    AmbiguousEssentialFacet { normal: Covector },

    #[error("{needed} power sums are needed but only {available} were supplied")]
    NotEnoughPowerSums { needed: usize, available: usize },

    #[error("both polynomials are zero")]
    BothZero,

    #[error("positive-dimensional common zero set")]
    PositiveDimensional,

    #[error("internal inconsistency: {0}")]
    Internal(String),
}
