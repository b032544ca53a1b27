use thiserror::Error;

/// Errors shared across the analysis pipeline.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("polynomial must be nonlinear (degree >= 2): {0}")]
    Nonlinear(String),

    #[error("match matrix requires Hypothesis I ({0})")]
    HypothesisI(String),

    #[error("Theorem 2 inapplicable: Hypothesis I fails for {0}")]
    Theorem2Inapplicable(String),

    #[error("Theorem 3 requires {0}")]
    Theorem3Gate(String),

    #[error("identity preconditions violated: {0}")]
    IdentityPrecondition(String),

    #[error("root finding did not converge after {iterations} iterations (max residual {max_residual})")]
    NoConvergence { iterations: u32, max_residual: String },

    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
