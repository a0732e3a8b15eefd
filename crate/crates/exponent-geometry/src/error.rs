use thiserror::Error;

/// Errors produced by the exponent-geometry operations.
#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum GeometryError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("reciprocal exponent at index {index} is negative")]
    NegativeReciprocal { index: usize },

    #[error("smoothness order at index {index} is below n/2")]
    SmoothnessBelowHalfDimension { index: usize },

    #[error("smoothness order at index {index} must exceed n/2 strictly")]
    SmoothnessNotStrict { index: usize },

    #[error("empty exponent vector (m must be at least 1)")]
    EmptyVector,

    #[error("vertex set is degenerate: all vertices coincide")]
    DegenerateVertexSet,

    #[error(
        "coordinate {index} violates the extreme-point conditions: \
         value must be 0, s_i/n, or s_i/n + 1/2 with the latter at exactly one index"
    )]
    ExtremeConditionViolated { index: usize },

    #[error("point lies outside the hull but no region constraint is violated (internal inconsistency)")]
    InconsistentCertificate,
}
