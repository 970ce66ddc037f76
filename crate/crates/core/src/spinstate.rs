//! Normalized two-spin density matrices of a pair of identical particles at
//! fixed separation.
//!
//! In the product basis `|σ₁σ₂⟩` (flat index `σ₁·α + σ₂`) the entries are
//!
//! ```text
//! ρ[(σ₁σ₂),(σ₁'σ₂')] = (δ_{σ₁σ₁'} δ_{σ₂σ₂'} ± f² δ_{σ₁σ₂'} δ_{σ₁'σ₂}) / (α² ± α f²)
//! ```
//!
//! with `+` for bosons and `-` for fermions.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::matrix::RealMatrix;
use crate::statmech::ExchangeValue;

/// Exchange sign of the particles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Statistics {
    Boson,
    Fermion,
}

impl Statistics {
    pub fn sign(self) -> f64 {
        match self {
            Statistics::Boson => 1.0,
            Statistics::Fermion => -1.0,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Statistics::Boson => "boson",
            Statistics::Fermion => "fermion",
        }
    }
}

impl fmt::Display for Statistics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for Statistics {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.as_str())
    }
}

/// Flat index of `|σ₁σ₂⟩` in the row-major product basis.
pub fn basis_index(sigma1: usize, sigma2: usize, alpha: usize) -> Result<usize> {
    if sigma1 >= alpha || sigma2 >= alpha {
        return Err(Error::Domain {
            what: "spin label out of range for the local dimension",
            value: sigma1.max(sigma2) as f64,
        });
    }
    Ok(sigma1 * alpha + sigma2)
}

/// Spin density matrix of two identical particles with exchange amplitude `f`.
#[derive(Debug, Clone, PartialEq)]
pub struct TwoSpinDensityMatrix {
    alpha: usize,
    statistics: Statistics,
    f: ExchangeValue,
    matrix: RealMatrix,
}

impl TwoSpinDensityMatrix {
    pub fn alpha(&self) -> usize {
        self.alpha
    }

    pub fn statistics(&self) -> Statistics {
        self.statistics
    }

    pub fn exchange(&self) -> ExchangeValue {
        self.f
    }

    pub fn matrix(&self) -> &RealMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> RealMatrix {
        self.matrix
    }
}

/// Builds the unit-trace two-spin density matrix for `alpha` spin states.
///
/// Supported: `alpha = 2` for either statistics and `alpha = 3` for bosons.
pub fn two_spin_density(
    f: ExchangeValue,
    alpha: usize,
    statistics: Statistics,
) -> Result<TwoSpinDensityMatrix> {
    match (alpha, statistics) {
        (2, _) | (3, Statistics::Boson) => {}
        _ => {
            return Err(Error::Unsupported(format!(
                "two-spin density for alpha = {alpha} with {statistics} statistics"
            )))
        }
    }
    let matrix = exchange_matrix(alpha, statistics.sign() * f.squared());
    Ok(TwoSpinDensityMatrix {
        alpha,
        statistics,
        f,
        matrix,
    })
}

/// Unit-trace matrix `(I + x·SWAP) / (α² + α x)` for a signed exchange weight `x`.
pub(crate) fn exchange_matrix(alpha: usize, exchange: f64) -> RealMatrix {
    let a = alpha as f64;
    let norm = a * a + a * exchange;
    let mut matrix = RealMatrix::zeros(alpha * alpha);
    for s1 in 0..alpha {
        for s2 in 0..alpha {
            let row = s1 * alpha + s2;
            matrix[(row, row)] += 1.0 / norm;
            // δ_{σ₁σ₂'} δ_{σ₁'σ₂}: column |σ₂σ₁⟩
            let swapped = s2 * alpha + s1;
            matrix[(row, swapped)] += exchange / norm;
        }
    }
    matrix
}

/// Permutation matrix exchanging the two subsystems, `|σ₁σ₂⟩ → |σ₂σ₁⟩`.
pub fn swap_operator(alpha: usize) -> RealMatrix {
    let mut p = RealMatrix::zeros(alpha * alpha);
    for s1 in 0..alpha {
        for s2 in 0..alpha {
            p[(s2 * alpha + s1, s1 * alpha + s2)] = 1.0;
        }
    }
    p
}
