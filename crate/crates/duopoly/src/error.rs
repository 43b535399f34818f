use thiserror::Error;

/// Errors raised by parameter validation and state construction.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// A market or scheme parameter violates its invariant.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    /// A vector or matrix fails a quantum-state invariant.
    #[error("invalid state: {0}")]
    InvalidState(String),
    /// Fock truncation too small for the requested accuracy.
    #[error("truncation tail mass {tail_mass:.3e} exceeds threshold {threshold:.3e}; increase the cutoff")]
    TailMassTooLarge { tail_mass: f64, threshold: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
