use thiserror::Error;

use crate::geometry::{BoundaryEdge, LatticePoint};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("degree must be at least {min}, got {got}")]
    DegreeTooSmall { min: i64, got: i64 },

    #[error("degree must be positive, got {0}")]
    InvalidDegree(i64),

    #[error("zero vector has no lattice length")]
    ZeroVector,

    #[error("point {point} is not in the relative interior of edge {edge}")]
    NotOnEdgeInterior { edge: BoundaryEdge, point: LatticePoint },

    #[error("edge {0} is used more than once")]
    DuplicateEdge(BoundaryEdge),

    #[error("at most 3 tangency edges are supported, got {0}")]
    TooManyEdges(usize),

    #[error("path is not λ-increasing inside the triangle at index {0}")]
    InvalidPath(usize),

    #[error("path needs at least {min} points, got {got}")]
    PathTooShort { min: usize, got: usize },

    #[error("sign sequence has length {got}, expected {expected}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("sign sequences are only defined for the hypotenuse and vertical axes, got {0}")]
    UnsupportedAxis(BoundaryEdge),

    #[error("malformed sign token {0:?}")]
    SignParse(String),

    #[error("exhaustive search over {space} sequences exceeds budget {budget}")]
    BudgetExceeded { space: String, budget: u64 },

    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
}
