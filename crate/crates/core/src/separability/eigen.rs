//! Cyclic Jacobi eigenvalue solver for small dense symmetric matrices.

use crate::error::{Error, Result};
use crate::matrix::RealMatrix;

/// Sweep cap for [`symmetric_eigenvalues`].
pub const MAX_SWEEPS: usize = 100;
/// Convergence threshold on the off-diagonal Frobenius norm, relative to
/// `max(1, ‖M‖_F)`.
pub const OFF_DIAGONAL_TOL: f64 = 1e-14;
/// Largest tolerated `|M_ij - M_ji|`, relative to `max(1, ‖M‖_F)`.
pub const SYMMETRY_TOL: f64 = 1e-12;

fn off_diagonal_norm(a: &RealMatrix) -> f64 {
    let n = a.dim();
    let mut sum = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                sum += a[(i, j)] * a[(i, j)];
            }
        }
    }
    sum.sqrt()
}

/// Eigenvalues of a real symmetric matrix, sorted ascending.
///
/// Intended for the small (up to 16×16) matrices of two-spin problems.
/// Each sweep visits every pair `p < q` once and annihilates `a_pq` with a
/// plane rotation.
pub fn symmetric_eigenvalues(m: &RealMatrix) -> Result<Vec<f64>> {
    let n = m.dim();
    if m.as_slice().iter().any(|x| !x.is_finite()) {
        return Err(Error::Numeric(
            "eigensolver input has non-finite entries".into(),
        ));
    }
    let scale = m.frobenius_norm().max(1.0);
    let asym = m.asymmetry();
    if asym.is_nan() || asym > SYMMETRY_TOL * scale {
        return Err(Error::NotSymmetric(asym));
    }
    // Symmetrize so that rotations act on an exactly symmetric matrix.
    let mut a = RealMatrix::from_fn(n, |i, j| 0.5 * (m[(i, j)] + m[(j, i)]));
    let threshold = OFF_DIAGONAL_TOL * scale;

    let mut sweeps = 0;
    loop {
        let off = off_diagonal_norm(&a);
        if off < threshold {
            break;
        }
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence {
                sweeps,
                off_norm: off,
            });
        }
        sweeps += 1;
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(&mut a, p, q);
            }
        }
    }

    let mut values: Vec<f64> = (0..n).map(|i| a[(i, i)]).collect();
    values.sort_by(f64::total_cmp);
    Ok(values)
}

fn rotate(a: &mut RealMatrix, p: usize, q: usize) {
    let apq = a[(p, q)];
    if apq == 0.0 {
        return;
    }
    let theta = (a[(q, q)] - a[(p, p)]) / (2.0 * apq);
    let t = if theta.abs() > 1e150 {
        0.5 / theta
    } else {
        theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
    };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;
    let n = a.dim();
    for k in 0..n {
        let (akp, akq) = (a[(k, p)], a[(k, q)]);
        a[(k, p)] = c * akp - s * akq;
        a[(k, q)] = s * akp + c * akq;
    }
    for k in 0..n {
        let (apk, aqk) = (a[(p, k)], a[(q, k)]);
        a[(p, k)] = c * apk - s * aqk;
        a[(q, k)] = s * apk + c * aqk;
    }
    a[(p, q)] = 0.0;
    a[(q, p)] = 0.0;
}
