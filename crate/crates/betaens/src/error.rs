//! Error types shared across the crate.

use thiserror::Error;

/// Errors produced by samplers, matrix builders, eigensolvers and statistics.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// A parameter lies outside its mathematical domain.
    #[error("parameter out of domain: {0}")]
    ParameterDomain(String),

    /// A Prüfer phase update consumed a coefficient with |alpha| >= 1.
    #[error("singular phase: |alpha_{index}| = {modulus} >= 1")]
    SingularPhase { index: usize, modulus: f64 },

    /// A characteristic-polynomial factor vanished (statistic evaluated at an
    /// eigenvalue).
    #[error("singular statistic: factor at index {index} has modulus {modulus:.3e}")]
    SingularStatistic { index: usize, modulus: f64 },

    /// An iterative numerical routine failed to converge.
    #[error("numerical failure: {0}")]
    NumericalFailure(String),

    /// Structurally invalid input (non-unitary matrix, ragged rows, pools too
    /// small, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// The unnormalized density is infinite at the requested point.
    #[error("infinite density: {0}")]
    InfiniteDensity(String),

    /// A configuration is unusable (e.g. rejection acceptance rate collapsed).
    #[error("configuration error: {0}")]
    Configuration(String),
}

pub type Result<T> = std::result::Result<T, Error>;
