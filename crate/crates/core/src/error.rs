use thiserror::Error;

/// Errors surfaced by the evaluation kernels.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("pole at s={0}")]
    Pole(String),

    #[error("argument {0} is within 1e-3 of an integer; use the dedicated integer-argument path")]
    NearInteger(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("quadrature did not converge within the level budget")]
    NonConvergence,

    #[error("no Euler-Maclaurin parameters within configured limits certify {0} bits")]
    PrecisionUnreachable(u32),

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
