use thiserror::Error;

/// Errors raised by the benchmark library.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum BenchError {
    /// A geometry, data or parameter invariant was violated at construction.
    #[error("constraint violated: {0}")]
    Constraint(String),

    /// A caller passed an argument outside the operation's contract.
    #[error("invalid argument: {0}")]
    Argument(String),

    /// A quantity that must be positive (convexity, a squared norm) was not.
    /// Signals a transcription error upstream rather than bad input.
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),

    /// The tridiagonal system had a vanishing pivot.
    #[error("singular tridiagonal system at row {row}")]
    Singular { row: usize },

    /// A minimizer probe found the evaluator was not a convex quadratic.
    #[error("non-quadratic cost: {0}")]
    NonQuadratic(String),
}

pub type Result<T> = std::result::Result<T, BenchError>;
