//! Peres-Horodecki (PPT) test, negativity, and the explicit separable
//! decomposition of the two-qutrit bosonic state.
//!
//! PPT is necessary for separability and sufficient only for 2×2 and 2×3
//! systems. For the 3×3 state the separability certificate is the
//! decomposition in [`decomposition`], not the PPT verdict.

mod decomposition;
mod eigen;

pub use decomposition::{
    qutrit_decomposition, rho0_closed_form, rho0_from_roots_of_unity, sigma0, sigma1,
    verify_decomposition, RootsOfUnityAverage, SeparableDecomposition,
};
pub use eigen::{symmetric_eigenvalues, MAX_SWEEPS, OFF_DIAGONAL_TOL};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::RealMatrix;
use crate::spinstate::{Statistics, TwoSpinDensityMatrix};
use crate::statmech::ExchangeValue;

/// Eigenvalues above `-PPT_TOLERANCE` count as non-negative.
pub const PPT_TOLERANCE: f64 = 1e-10;

/// Partial transpose on the second subsystem of a `d² × d²` matrix:
/// `out[(i,m),(j,n)] = in[(i,n),(j,m)]`.
pub fn partial_transpose_b(rho: &RealMatrix, d: usize) -> Result<RealMatrix> {
    if rho.dim() != d * d {
        return Err(Error::Dimension {
            expected: d * d,
            got: rho.dim(),
        });
    }
    Ok(RealMatrix::from_fn(d * d, |row, col| {
        let (i, m) = (row / d, row % d);
        let (j, n) = (col / d, col % d);
        rho[(i * d + n, j * d + m)]
    }))
}

/// Partial-transpose spectrum and the entanglement diagnostics derived from it.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PptReport {
    /// Eigenvalues of `ρ^{T_B}`, ascending.
    pub spectrum: Vec<f64>,
    pub min_eigenvalue: f64,
    /// Sum of `|λ|` over eigenvalues below `-PPT_TOLERANCE`.
    pub negativity: f64,
    pub is_ppt: bool,
}

impl PptReport {
    fn from_spectrum(spectrum: Vec<f64>) -> Self {
        let min_eigenvalue = spectrum.first().copied().unwrap_or(0.0);
        let negativity = spectrum
            .iter()
            .filter(|&&x| x < -PPT_TOLERANCE)
            .fold(0.0, |acc, x| acc - x);
        PptReport {
            min_eigenvalue,
            negativity,
            is_ppt: min_eigenvalue >= -PPT_TOLERANCE,
            spectrum,
        }
    }
}

/// PPT report for an arbitrary symmetric bipartite matrix with local dimension `d`.
pub fn ppt_report_matrix(rho: &RealMatrix, d: usize) -> Result<PptReport> {
    let pt = partial_transpose_b(rho, d)?;
    Ok(PptReport::from_spectrum(symmetric_eigenvalues(&pt)?))
}

pub fn ppt_report(rho: &TwoSpinDensityMatrix) -> Result<PptReport> {
    ppt_report_matrix(rho.matrix(), rho.alpha())
}

/// Closed-form minimum eigenvalue of the partially transposed two-qubit state:
/// `1/(4 + 2f²)` for bosons and `(1 - 2f²)/(4 - 2f²)` for fermions.
pub fn qubit_pt_min_eig_analytic(f: ExchangeValue, statistics: Statistics) -> f64 {
    let f2 = f.squared();
    match statistics {
        Statistics::Boson => 1.0 / (4.0 + 2.0 * f2),
        Statistics::Fermion => (1.0 - 2.0 * f2) / (4.0 - 2.0 * f2),
    }
}

/// Closed-form minimum eigenvalue of the partially transposed bosonic
/// two-qutrit state, `1/(9 + 3f²)`.
pub fn qutrit_pt_min_eig_analytic(f: ExchangeValue) -> f64 {
    1.0 / (9.0 + 3.0 * f.squared())
}

/// Checks unit trace, symmetry and positive semidefiniteness within `tol`.
pub fn is_density_matrix(m: &RealMatrix, tol: f64) -> Result<bool> {
    if (m.trace() - 1.0).abs() > tol || m.asymmetry() > tol {
        return Ok(false);
    }
    let ev = symmetric_eigenvalues(m)?;
    Ok(ev.first().is_some_and(|&x| x >= -tol))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spinstate::two_spin_density;

    fn fv(f: f64) -> ExchangeValue {
        ExchangeValue::new(f).unwrap()
    }

    fn bell_phi_plus() -> RealMatrix {
        // |Φ+> = (|00> + |11>)/√2
        let v = [1.0, 0.0, 0.0, 1.0];
        RealMatrix::from_fn(4, |i, j| 0.5 * v[i] * v[j])
    }

    #[test]
    fn partial_transpose_of_product_state() {
        let a = RealMatrix::from_rows(&[&[0.7, 0.2], &[0.2, 0.3]]).unwrap();
        let b = RealMatrix::from_rows(&[&[0.4, -0.1], &[-0.1, 0.6]]).unwrap();
        let rho = a.kron(&b);
        let pt = partial_transpose_b(&rho, 2).unwrap();
        assert!(pt.max_abs_diff(&a.kron(&b.transpose())) < 1e-16);
        assert!(pt.max_abs_diff(&rho) < 1e-16);
    }

    #[test]
    fn partial_transpose_is_an_involution() {
        let m = RealMatrix::from_fn(9, |i, j| ((i * 7 + j * 3) % 5) as f64 - 1.3);
        let twice = partial_transpose_b(&partial_transpose_b(&m, 3).unwrap(), 3).unwrap();
        assert_eq!(twice, m);
    }

    #[test]
    fn partial_transpose_dimension_check() {
        assert!(matches!(
            partial_transpose_b(&RealMatrix::identity(4), 3),
            Err(Error::Dimension {
                expected: 9,
                got: 4
            })
        ));
    }

    #[test]
    fn bell_state_is_npt() {
        let r = ppt_report_matrix(&bell_phi_plus(), 2).unwrap();
        assert!((r.min_eigenvalue + 0.5).abs() < 1e-15);
        assert!((r.negativity - 0.5).abs() < 1e-15);
        assert!(!r.is_ppt);
    }

    #[test]
    fn qubit_reports() {
        let r = ppt_report(&two_spin_density(ExchangeValue::ZERO, 2, Statistics::Boson).unwrap())
            .unwrap();
        assert!((r.min_eigenvalue - 0.25).abs() < 1e-15);
        assert!(r.negativity == 0.0 && r.negativity.is_sign_positive());
        assert!(r.is_ppt);

        let r = ppt_report(&two_spin_density(ExchangeValue::ONE, 2, Statistics::Boson).unwrap())
            .unwrap();
        assert!((r.min_eigenvalue - 1.0 / 6.0).abs() < 1e-15);

        let r = ppt_report(&two_spin_density(ExchangeValue::ONE, 2, Statistics::Fermion).unwrap())
            .unwrap();
        let expected = [-0.5, 0.5, 0.5, 0.5];
        for (x, e) in r.spectrum.iter().zip(expected) {
            assert!((x - e).abs() < 1e-15);
        }
        assert!((r.negativity - 0.5).abs() < 1e-15);
        assert!(!r.is_ppt);
    }

    #[test]
    fn qutrit_report_at_full_exchange() {
        let r = ppt_report(&two_spin_density(ExchangeValue::ONE, 3, Statistics::Boson).unwrap())
            .unwrap();
        assert!((r.min_eigenvalue - 1.0 / 12.0).abs() < 1e-15);
        assert!(r.is_ppt);
        assert!((r.spectrum.iter().sum::<f64>() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn analytic_formulas() {
        assert_eq!(
            qubit_pt_min_eig_analytic(ExchangeValue::ZERO, Statistics::Boson),
            0.25
        );
        assert_eq!(
            qubit_pt_min_eig_analytic(ExchangeValue::ONE, Statistics::Boson),
            1.0 / 6.0
        );
        let threshold = fv(std::f64::consts::FRAC_1_SQRT_2);
        assert!(qubit_pt_min_eig_analytic(threshold, Statistics::Fermion).abs() < 1e-15);
        assert_eq!(qutrit_pt_min_eig_analytic(ExchangeValue::ZERO), 1.0 / 9.0);
        assert_eq!(qutrit_pt_min_eig_analytic(ExchangeValue::ONE), 1.0 / 12.0);
        assert!((qutrit_pt_min_eig_analytic(fv(0.5)) - 0.102_564_102_564_102_56).abs() < 1e-15);
    }

    #[test]
    fn fermion_threshold_numeric() {
        let rho =
            two_spin_density(fv(std::f64::consts::FRAC_1_SQRT_2), 2, Statistics::Fermion).unwrap();
        assert!(ppt_report(&rho).unwrap().min_eigenvalue.abs() < 1e-15);
    }

    #[test]
    fn density_matrix_check() {
        assert!(is_density_matrix(&RealMatrix::identity(3).scaled(1.0 / 3.0), 1e-12).unwrap());
        assert!(!is_density_matrix(&RealMatrix::identity(3), 1e-12).unwrap());
        assert!(!is_density_matrix(&RealMatrix::diagonal(&[1.5, -0.5]), 1e-12).unwrap());
    }
}
