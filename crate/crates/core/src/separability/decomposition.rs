//! Separable decomposition of the bosonic two-qutrit spin state
//!
//! ```text
//! ρ₁₂ = (9f² ρ₀ + 3σ₀ + 6(1 - f²)σ₁) / (9 + 3f²)
//! ```
//!
//! `σ₀` and `σ₁` are mixtures of product basis projectors. `ρ₀` is the phase
//! average of the product states `|ψ(θ)⟩⟨ψ(θ)| ⊗ |ψ(θ)⟩⟨ψ(θ)|` with
//! `|ψ(θ)⟩ = (|0⟩ + e^{-iθ}|1⟩ + e^{2iθ}|2⟩)/√3`.

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::RealMatrix;
use crate::spinstate::{two_spin_density, Statistics};
use crate::statmech::ExchangeValue;

const QUTRIT: usize = 3;
const DIM: usize = QUTRIT * QUTRIT;
// Phase exponents of |ψ(θ)⟩ components.
const PHASES: [i32; QUTRIT] = [0, -1, 2];

fn projector_mixture(labels: impl Iterator<Item = (usize, usize)>) -> RealMatrix {
    let labels: Vec<_> = labels.collect();
    let w = 1.0 / labels.len() as f64;
    let mut m = RealMatrix::zeros(DIM);
    for (a, b) in labels {
        m[(a * QUTRIT + b, a * QUTRIT + b)] = w;
    }
    m
}

/// `(|00⟩⟨00| + |11⟩⟨11| + |22⟩⟨22|) / 3`
pub fn sigma0() -> RealMatrix {
    projector_mixture((0..QUTRIT).map(|a| (a, a)))
}

/// Uniform mixture of the six projectors `|ab⟩⟨ab|` with `a ≠ b`.
pub fn sigma1() -> RealMatrix {
    projector_mixture(
        (0..QUTRIT)
            .flat_map(|a| (0..QUTRIT).map(move |b| (a, b)))
            .filter(|(a, b)| a != b),
    )
}

/// Exact phase average `ρ₀`. A pair `(|ab⟩, |a'b'⟩)` survives the average
/// iff the phase exponents agree, `c_a + c_b = c_a' + c_b'`, in which case
/// the entry is `1/9`.
pub fn rho0_closed_form() -> RealMatrix {
    RealMatrix::from_fn(DIM, |row, col| {
        let (a, b) = (row / QUTRIT, row % QUTRIT);
        let (c, d) = (col / QUTRIT, col % QUTRIT);
        if PHASES[a] + PHASES[b] == PHASES[c] + PHASES[d] {
            1.0 / 9.0
        } else {
            0.0
        }
    })
}

/// Finite phase average of `ρ₀` over `N` roots of unity.
#[derive(Debug, Clone)]
pub struct RootsOfUnityAverage {
    /// Real part of the average.
    pub matrix: RealMatrix,
    /// Largest `|Im|` over all entries; zero up to rounding for `N >= 2`.
    pub max_imaginary: f64,
}

/// `(1/N) Σ_j |ψ(θ_j)ψ(θ_j)⟩⟨ψ(θ_j)ψ(θ_j)|` with `θ_j = 2πj/N`.
///
/// Exact phase differences span `-6..=6`, so every `N >= 7` reproduces
/// [`rho0_closed_form`]; `N = 6` aliases the `±6` harmonics.
pub fn rho0_from_roots_of_unity(n: usize) -> Result<RootsOfUnityAverage> {
    if n == 0 {
        return Err(Error::Domain {
            what: "roots-of-unity order must be at least 1",
            value: 0.0,
        });
    }
    let mut acc = vec![Complex64::new(0.0, 0.0); DIM * DIM];
    let norm = 1.0 / 3.0_f64.sqrt();
    for j in 0..n {
        let theta = std::f64::consts::TAU * j as f64 / n as f64;
        let psi: Vec<Complex64> = PHASES
            .iter()
            .map(|&c| Complex64::from_polar(norm, c as f64 * theta))
            .collect();
        let pair: Vec<Complex64> = (0..DIM)
            .map(|k| psi[k / QUTRIT] * psi[k % QUTRIT])
            .collect();
        for r in 0..DIM {
            for c in 0..DIM {
                acc[r * DIM + c] += pair[r] * pair[c].conj();
            }
        }
    }
    let scale = 1.0 / n as f64;
    let max_imaginary = acc.iter().map(|z| (z.im * scale).abs()).fold(0.0, f64::max);
    let matrix = RealMatrix::from_row_major(DIM, acc.iter().map(|z| z.re * scale).collect())?;
    Ok(RootsOfUnityAverage {
        matrix,
        max_imaginary,
    })
}

/// Weights and components of the separable decomposition at a given `f`.
#[derive(Debug, Clone, Serialize)]
pub struct SeparableDecomposition {
    pub f: f64,
    pub weight_rho0: f64,
    pub weight_sigma0: f64,
    pub weight_sigma1: f64,
    #[serde(skip)]
    pub rho0: RealMatrix,
    #[serde(skip)]
    pub sigma0: RealMatrix,
    #[serde(skip)]
    pub sigma1: RealMatrix,
}

impl SeparableDecomposition {
    pub fn weights(&self) -> [f64; 3] {
        [self.weight_rho0, self.weight_sigma0, self.weight_sigma1]
    }

    pub fn reconstruct(&self) -> RealMatrix {
        let mut m = RealMatrix::zeros(DIM);
        m.add_scaled(self.weight_rho0, &self.rho0);
        m.add_scaled(self.weight_sigma0, &self.sigma0);
        m.add_scaled(self.weight_sigma1, &self.sigma1);
        m
    }
}

pub fn qutrit_decomposition(f: ExchangeValue) -> Result<SeparableDecomposition> {
    if f.value() < 0.0 {
        return Err(Error::Domain {
            what: "separable decomposition requires 0 <= f <= 1",
            value: f.value(),
        });
    }
    let f2 = f.squared();
    let norm = 9.0 + 3.0 * f2;
    Ok(SeparableDecomposition {
        f: f.value(),
        weight_rho0: 9.0 * f2 / norm,
        weight_sigma0: 3.0 / norm,
        weight_sigma1: 6.0 * (1.0 - f2) / norm,
        rho0: rho0_closed_form(),
        sigma0: sigma0(),
        sigma1: sigma1(),
    })
}

/// Largest entrywise deviation between the reconstructed mixture and the
/// bosonic two-qutrit state at `f`.
pub fn verify_decomposition(f: ExchangeValue) -> Result<f64> {
    let target = two_spin_density(f, QUTRIT, Statistics::Boson)?;
    Ok(qutrit_decomposition(f)?
        .reconstruct()
        .max_abs_diff(target.matrix()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::separability::is_density_matrix;
    use crate::spinstate::swap_operator;

    fn fv(f: f64) -> ExchangeValue {
        ExchangeValue::new(f).unwrap()
    }

    #[test]
    fn sigma_components() {
        let (s0, s1) = (sigma0(), sigma1());
        assert!((s0.trace() - 1.0).abs() < 1e-15);
        assert!((s1.trace() - 1.0).abs() < 1e-15);
        let mut sum = s0.clone();
        sum.add_scaled(2.0, &s1);
        assert!(sum.max_abs_diff(&RealMatrix::identity(9).scaled(1.0 / 3.0)) < 1e-16);
        let p = swap_operator(3);
        for s in [&s0, &s1] {
            assert!(p.matmul(s).max_abs_diff(&s.matmul(&p)) < 1e-16);
        }
    }

    #[test]
    fn rho0_closed_form_entries() {
        let r = rho0_closed_form();
        assert_eq!(r[(1, 3)], 1.0 / 9.0);
        assert_eq!(r[(0, 4)], 0.0);
        assert!((r.trace() - 1.0).abs() < 1e-15);
        assert!(is_density_matrix(&r, 1e-12).unwrap());
    }

    #[test]
    fn roots_of_unity_exactness() {
        let closed = rho0_closed_form();
        for n in [7, 8, 13, 100, 700] {
            let avg = rho0_from_roots_of_unity(n).unwrap();
            assert!(avg.matrix.max_abs_diff(&closed) < 1e-14, "N = {n}");
            assert!(avg.max_imaginary < 1e-14);
        }
        let aliased = rho0_from_roots_of_unity(6).unwrap();
        assert!(aliased.matrix.max_abs_diff(&closed) > 0.05);
        assert!(rho0_from_roots_of_unity(0).is_err());
    }

    #[test]
    fn weights() {
        let d = qutrit_decomposition(ExchangeValue::ONE).unwrap();
        assert_eq!(d.weights(), [0.75, 0.25, 0.0]);
        let d = qutrit_decomposition(ExchangeValue::ZERO).unwrap();
        assert!((d.weight_sigma0 - 1.0 / 3.0).abs() < 1e-16);
        assert!((d.weight_sigma1 - 2.0 / 3.0).abs() < 1e-16);
        assert!(
            d.reconstruct()
                .max_abs_diff(&RealMatrix::identity(9).scaled(1.0 / 9.0))
                < 1e-16
        );
        let d = qutrit_decomposition(fv(0.5)).unwrap();
        let expected = [2.25 / 9.75, 3.0 / 9.75, 4.5 / 9.75];
        for (w, e) in d.weights().iter().zip(expected) {
            assert!((w - e).abs() < 1e-16);
        }
        assert!(qutrit_decomposition(fv(-0.1)).is_err());
    }

    #[test]
    fn reconstruction_error() {
        assert!(verify_decomposition(ExchangeValue::ZERO).unwrap() < 1e-15);
        assert!(verify_decomposition(ExchangeValue::ONE).unwrap() < 1e-13);
        assert!(verify_decomposition(fv(0.73)).unwrap() < 1e-13);
    }
}
