//! Small dense real square matrices.

use std::fmt;
use std::ops::{Index, IndexMut};

use serde::Serialize;

use crate::error::{Error, Result};

/// Dense square matrix stored row-major.
#[derive(Clone, PartialEq, Serialize)]
pub struct RealMatrix {
    dim: usize,
    data: Vec<f64>,
}

impl RealMatrix {
    pub fn zeros(dim: usize) -> Self {
        RealMatrix {
            dim,
            data: vec![0.0; dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m[(i, i)] = 1.0;
        }
        m
    }

    pub fn diagonal(values: &[f64]) -> Self {
        let mut m = Self::zeros(values.len());
        for (i, &v) in values.iter().enumerate() {
            m[(i, i)] = v;
        }
        m
    }

    pub fn from_rows(rows: &[&[f64]]) -> Result<Self> {
        let dim = rows.len();
        let mut data = Vec::with_capacity(dim * dim);
        for row in rows {
            if row.len() != dim {
                return Err(Error::Dimension {
                    expected: dim,
                    got: row.len(),
                });
            }
            data.extend_from_slice(row);
        }
        Ok(RealMatrix { dim, data })
    }

    /// Builds a matrix from a row-major vector of length `dim²`.
    pub fn from_row_major(dim: usize, data: Vec<f64>) -> Result<Self> {
        if data.len() != dim * dim {
            return Err(Error::Dimension {
                expected: dim * dim,
                got: data.len(),
            });
        }
        Ok(RealMatrix { dim, data })
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            for j in 0..dim {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    pub fn rows(&self) -> impl Iterator<Item = &[f64]> {
        self.data.chunks(self.dim.max(1))
    }

    pub fn trace(&self) -> f64 {
        (0..self.dim).map(|i| self[(i, i)]).sum()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.dim, |i, j| self[(j, i)])
    }

    /// Largest `|M_ij - M_ji|`.
    pub fn asymmetry(&self) -> f64 {
        let mut worst = 0.0_f64;
        for i in 0..self.dim {
            for j in (i + 1)..self.dim {
                worst = worst.max((self[(i, j)] - self[(j, i)]).abs());
            }
        }
        worst
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    /// Largest entrywise difference. Panics on dimension mismatch.
    pub fn max_abs_diff(&self, other: &RealMatrix) -> f64 {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    pub fn scaled(&self, factor: f64) -> Self {
        RealMatrix {
            dim: self.dim,
            data: self.data.iter().map(|x| x * factor).collect(),
        }
    }

    /// `self += factor * other`
    pub fn add_scaled(&mut self, factor: f64, other: &RealMatrix) {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            *a += factor * b;
        }
    }

    pub fn matmul(&self, other: &RealMatrix) -> Self {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        let n = self.dim;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self[(i, k)];
                if a == 0.0 {
                    continue;
                }
                for j in 0..n {
                    out[(i, j)] += a * other[(k, j)];
                }
            }
        }
        out
    }

    /// Kronecker product `self ⊗ other`.
    pub fn kron(&self, other: &RealMatrix) -> Self {
        let (p, q) = (self.dim, other.dim);
        Self::from_fn(p * q, |r, c| self[(r / q, c / q)] * other[(r % q, c % q)])
    }
}

impl Index<(usize, usize)> for RealMatrix {
    type Output = f64;

    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        &self.data[i * self.dim + j]
    }
}

impl IndexMut<(usize, usize)> for RealMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut f64 {
        &mut self.data[i * self.dim + j]
    }
}

impl fmt::Debug for RealMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RealMatrix({0}x{0}) [", self.dim)?;
        for row in self.rows() {
            write!(f, "  ")?;
            for x in row {
                write!(f, "{x:>10.6} ")?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kron_of_identities() {
        let k = RealMatrix::identity(2).kron(&RealMatrix::identity(3));
        assert_eq!(k, RealMatrix::identity(6));
    }

    #[test]
    fn kron_index_layout() {
        let a = RealMatrix::from_rows(&[&[1.0, 2.0], &[3.0, 4.0]]).unwrap();
        let b = RealMatrix::from_rows(&[&[0.0, 5.0], &[6.0, 7.0]]).unwrap();
        let k = a.kron(&b);
        assert_eq!(k[(0, 1)], 5.0);
        assert_eq!(k[(1, 2)], 12.0);
        assert_eq!(k[(3, 3)], 28.0);
    }

    #[test]
    fn ragged_rows_rejected() {
        assert!(RealMatrix::from_rows(&[&[1.0, 2.0], &[3.0]]).is_err());
        assert!(RealMatrix::from_row_major(2, vec![0.0; 3]).is_err());
    }

    #[test]
    fn trace_and_asymmetry() {
        let m = RealMatrix::from_rows(&[&[1.0, 2.0], &[2.5, 4.0]]).unwrap();
        assert_eq!(m.trace(), 5.0);
        assert_eq!(m.asymmetry(), 0.5);
        assert_eq!(m.transpose()[(0, 1)], 2.5);
    }
}
