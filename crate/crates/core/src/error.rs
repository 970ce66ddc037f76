use thiserror::Error;

/// Errors raised by the numerical kernels and the command front end.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain where the formula is defined.
    #[error("domain error: {what} (got {value})")]
    Domain { what: &'static str, value: f64 },

    /// Requested phase-space density lies above the Bose-Einstein condensation threshold.
    #[error(
        "condensation: degeneracy {degeneracy} exceeds zeta(3/2) = {critical}; \
         the non-condensed ideal-gas formulas do not apply"
    )]
    Condensation { degeneracy: f64, critical: f64 },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },

    #[error("matrix is not symmetric (max asymmetry {0:e})")]
    NotSymmetric(f64),

    #[error("eigensolver did not converge after {sweeps} sweeps (off-diagonal norm {off_norm:e})")]
    NoConvergence { sweeps: usize, off_norm: f64 },

    #[error("unsupported combination: {0}")]
    Unsupported(String),

    #[error("numerical failure: {0}")]
    Numeric(String),
}

impl Error {
    /// True for errors that describe an unphysical or out-of-contract request
    /// rather than a failure of the numerics.
    pub fn is_domain(&self) -> bool {
        matches!(
            self,
            Error::Domain { .. } | Error::Condensation { .. } | Error::Unsupported(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
