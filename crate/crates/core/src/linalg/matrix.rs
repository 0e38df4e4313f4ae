use std::fmt;
use std::ops::Index;

use nalgebra::DMatrix;

use super::{Permutation, C64};
use crate::error::{Error, Result};

/// Dense complex matrix.
///
/// Thin wrapper over [`nalgebra::DMatrix`] that keeps the finite-entry
/// invariant and exposes the handful of operations the interference
/// formulas need.
#[derive(Clone, PartialEq)]
pub struct ComplexMatrix(DMatrix<C64>);

impl ComplexMatrix {
    /// Builds a matrix from row-major entries.
    pub fn new(rows: usize, cols: usize, entries: Vec<C64>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{} entries supplied for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        if entries.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::Validation("matrix has non-finite entries".into()));
        }
        Ok(Self(DMatrix::from_row_slice(rows, cols, &entries)))
    }

    /// Builds a matrix from a list of rows.
    pub fn from_rows(rows: &[Vec<C64>]) -> Result<Self> {
        let n_rows = rows.len();
        let n_cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != n_cols) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        Self::new(n_rows, n_cols, rows.concat())
    }

    pub fn from_real_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let rows: Vec<Vec<C64>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| C64::new(x, 0.0)).collect())
            .collect();
        Self::from_rows(&rows)
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl FnMut(usize, usize) -> C64) -> Self {
        Self(DMatrix::from_fn(rows, cols, f))
    }

    pub fn identity(n: usize) -> Self {
        Self(DMatrix::identity(n, n))
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self(DMatrix::zeros(rows, cols))
    }

    /// Outer product `|v><v|`.
    pub fn outer(v: &[C64]) -> Self {
        Self::from_fn(v.len(), v.len(), |i, j| v[i] * v[j].conj())
    }

    pub fn from_dmatrix(m: DMatrix<C64>) -> Self {
        Self(m)
    }

    pub fn as_dmatrix(&self) -> &DMatrix<C64> {
        &self.0
    }

    pub fn into_dmatrix(self) -> DMatrix<C64> {
        self.0
    }

    pub fn rows(&self) -> usize {
        self.0.nrows()
    }

    pub fn cols(&self) -> usize {
        self.0.ncols()
    }

    pub fn is_square(&self) -> bool {
        self.rows() == self.cols()
    }

    pub fn get(&self, row: usize, col: usize) -> C64 {
        self.0[(row, col)]
    }

    /// Row-major copy of the entries.
    pub fn to_rows(&self) -> Vec<Vec<C64>> {
        (0..self.rows())
            .map(|i| (0..self.cols()).map(|j| self.0[(i, j)]).collect())
            .collect()
    }

    pub fn require_square(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows())
        } else {
            Err(Error::Dimension(format!(
                "expected a square matrix, got {}x{}",
                self.rows(),
                self.cols()
            )))
        }
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols() != rhs.rows() {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows(),
                self.cols(),
                rhs.rows(),
                rhs.cols()
            )));
        }
        Ok(Self(&self.0 * &rhs.0))
    }

    pub fn adjoint(&self) -> Self {
        Self(self.0.adjoint())
    }

    /// Elementwise complex conjugate.
    pub fn conj(&self) -> Self {
        Self(self.0.map(|z| z.conj()))
    }

    pub fn transpose(&self) -> Self {
        Self(self.0.transpose())
    }

    pub fn trace(&self) -> C64 {
        self.0.trace()
    }

    pub fn scale(&self, s: C64) -> Self {
        Self(&self.0 * s)
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        if self.rows() != rhs.rows() || self.cols() != rhs.cols() {
            return Err(Error::Dimension("cannot add matrices of different shape".into()));
        }
        Ok(Self(&self.0 + &rhs.0))
    }

    pub fn kron(&self, rhs: &Self) -> Self {
        Self(self.0.kronecker(&rhs.0))
    }

    /// Submatrix built from (possibly repeated) row and column indices.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self::from_fn(rows.len(), cols.len(), |i, j| self.0[(rows[i], cols[j])])
    }

    /// Largest entrywise modulus of `self - rhs`.
    pub fn max_abs_diff(&self, rhs: &Self) -> f64 {
        self.0
            .iter()
            .zip(rhs.0.iter())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Largest entrywise deviation of `U^dagger U` from the identity.
    pub fn unitarity_deviation(&self) -> f64 {
        if !self.is_square() {
            return f64::INFINITY;
        }
        let prod = Self(self.0.adjoint() * &self.0);
        prod.max_abs_diff(&Self::identity(self.rows()))
    }

    /// Largest entrywise deviation from Hermiticity.
    pub fn hermiticity_deviation(&self) -> f64 {
        if !self.is_square() {
            return f64::INFINITY;
        }
        self.max_abs_diff(&self.adjoint())
    }

    /// The matrix with `(j, k)` entry `M[j][k] * conj(M[sigma(j)][k])`.
    pub fn row_permuted_conjugate_hadamard(&self, sigma: &Permutation) -> Result<Self> {
        let n = self.require_square()?;
        if sigma.len() != n {
            return Err(Error::Dimension(format!(
                "permutation on {} elements applied to a {n}x{n} matrix",
                sigma.len()
            )));
        }
        Ok(Self::from_fn(n, n, |j, k| {
            self.0[(j, k)] * self.0[(sigma.image(j), k)].conj()
        }))
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = C64;

    fn index(&self, idx: (usize, usize)) -> &C64 {
        &self.0[idx]
    }
}

impl fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.to_rows()).finish()
    }
}

/// Trace of the ordered product `A_1 A_2 ... A_n`.
pub fn matrix_product_trace(matrices: &[&ComplexMatrix]) -> Result<C64> {
    let (first, rest) = matrices
        .split_first()
        .ok_or_else(|| Error::Validation("empty matrix product".into()))?;
    let dim = first.require_square()?;
    let mut acc = first.0.clone();
    for m in rest {
        if m.require_square()? != dim {
            return Err(Error::Dimension(format!(
                "product of {dim}x{dim} and {0}x{0} matrices",
                m.rows()
            )));
        }
        acc = &acc * &m.0;
    }
    Ok(acc.trace())
}
