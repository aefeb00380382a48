use thiserror::Error;

/// Errors raised by the implicitization pipeline and its building blocks.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid scalar {text:?}: {reason}")]
    ParseScalar { text: String, reason: &'static str },

    #[error("division by zero")]
    DivisionByZero,

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("bezout matrix needs degree at least 1")]
    ZeroDegree,

    #[error("invalid collocation nodes: {0}")]
    InvalidNodes(&'static str),

    #[error(
        "not strictly totally positive: Neville elimination broke down at step {step}, row {row}"
    )]
    NevilleBreakdown { step: usize, row: usize },

    #[error("degenerate curve: {0}")]
    DegenerateCurve(&'static str),

    #[error("correction factor vanishes at node {0}")]
    CorrectionVanishes(String),

    #[error("oracle supports degrees up to {cap}, got {found}")]
    DegreeCapExceeded { cap: usize, found: usize },

    #[error("zero polynomial has no resultant")]
    ZeroPolynomial,
}

pub type Result<T> = std::result::Result<T, Error>;
