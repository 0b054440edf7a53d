//! Error type shared across the crate.

use thiserror::Error;

/// Errors produced by solvers, generators and the experiment harness.
#[derive(Debug, Error)]
pub enum Error {
    /// An argument fell outside the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Inconsistent dimensions between matrices, vectors or parameter sets.
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    /// A matrix failed a structural check (Hermitian symmetry, PSD probe).
    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),

    /// Configuration file could not be parsed or contained invalid values.
    #[error("config error: {0}")]
    Config(String),

    /// An exhaustive-enumeration request exceeded the configured budget.
    #[error("oracle budget exceeded: {0}")]
    BudgetExceeded(String),

    /// A solver failed to converge and strict mode was requested.
    #[error("solver did not converge: {0}")]
    NonConvergence(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
