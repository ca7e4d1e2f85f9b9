//! Dense real-matrix kernels: multiplication, thin SVD, QR orthonormalization,
//! and Frobenius norms.
//!
//! [`Matrix`] wraps a dense column-major `f64` storage and enforces two
//! invariants at every construction site: at least one row and one column,
//! and every entry finite. All factorization outputs are re-validated against
//! the same invariants, so downstream code never sees NaN or infinity.

use std::fmt;

use nalgebra::DMatrix;
use rand::Rng;
use rand_distr::StandardNormal;
use thiserror::Error;

/// Frobenius tolerance on `Q^T Q - I` for orthonormal factors produced here.
pub const ORTHONORMALITY_TOL: f64 = 1e-12;

/// Relative Frobenius tolerance on `A - U S V^T` for [`ThinSvd`].
pub const SVD_RECONSTRUCTION_TOL: f64 = 1e-10;

/// Iteration cap for the implicit-QR SVD sweep.
const SVD_MAX_ITERS: usize = 10_000;

#[derive(Debug, Error)]
pub enum MatrixError {
    #[error("matrix must have at least one row and one column")]
    Empty,
    #[error("non-finite entry {value} at ({row}, {col})")]
    NonFinite { row: usize, col: usize, value: f64 },
    #[error("dimension mismatch in {op}: left is {lrows}x{lcols}, right is {rrows}x{rcols}")]
    DimensionMismatch {
        op: &'static str,
        lrows: usize,
        lcols: usize,
        rrows: usize,
        rcols: usize,
    },
    #[error("cannot orthonormalize a {rows}x{cols} matrix: fewer rows than columns")]
    Underdetermined { rows: usize, cols: usize },
    #[error("matrix is numerically rank deficient (pivot {pivot:.3e} of scale {scale:.3e})")]
    RankDeficient { pivot: f64, scale: f64 },
    #[error("SVD did not converge within {iterations} iterations")]
    SvdNonConvergence { iterations: usize },
    #[error("entry count {len} does not fill a {rows}x{cols} matrix")]
    BadEntryCount {
        rows: usize,
        cols: usize,
        len: usize,
    },
}

/// Dense real matrix with finite entries.
#[derive(Clone, PartialEq)]
pub struct Matrix {
    inner: DMatrix<f64>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix({}x{})", self.rows(), self.cols())?;
        self.inner.fmt(f)
    }
}

impl Matrix {
    fn validated(inner: DMatrix<f64>) -> Result<Self, MatrixError> {
        if inner.nrows() == 0 || inner.ncols() == 0 {
            return Err(MatrixError::Empty);
        }
        for col in 0..inner.ncols() {
            for row in 0..inner.nrows() {
                let value = inner[(row, col)];
                if !value.is_finite() {
                    return Err(MatrixError::NonFinite { row, col, value });
                }
            }
        }
        Ok(Self { inner })
    }

    /// Builds from a row-major slice of `rows * cols` entries.
    pub fn from_row_major(rows: usize, cols: usize, entries: &[f64]) -> Result<Self, MatrixError> {
        if rows == 0 || cols == 0 {
            return Err(MatrixError::Empty);
        }
        if entries.len() != rows * cols {
            return Err(MatrixError::BadEntryCount {
                rows,
                cols,
                len: entries.len(),
            });
        }
        Self::validated(DMatrix::from_row_slice(rows, cols, entries))
    }

    /// Builds from nested rows; every row must have the same length.
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self, MatrixError> {
        if rows.is_empty() || rows[0].is_empty() {
            return Err(MatrixError::Empty);
        }
        let cols = rows[0].len();
        let mut flat = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            if row.len() != cols {
                return Err(MatrixError::BadEntryCount {
                    rows: rows.len(),
                    cols,
                    len: row.len(),
                });
            }
            flat.extend_from_slice(row);
        }
        Self::from_row_major(rows.len(), cols, &flat)
    }

    /// Builds entry by entry from `f(row, col)`.
    pub fn from_fn(
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> f64,
    ) -> Result<Self, MatrixError> {
        if rows == 0 || cols == 0 {
            return Err(MatrixError::Empty);
        }
        Self::validated(DMatrix::from_fn(rows, cols, |i, j| f(i, j)))
    }

    pub fn zeros(rows: usize, cols: usize) -> Result<Self, MatrixError> {
        if rows == 0 || cols == 0 {
            return Err(MatrixError::Empty);
        }
        Ok(Self {
            inner: DMatrix::zeros(rows, cols),
        })
    }

    pub fn identity(n: usize) -> Result<Self, MatrixError> {
        if n == 0 {
            return Err(MatrixError::Empty);
        }
        Ok(Self {
            inner: DMatrix::identity(n, n),
        })
    }

    /// Fills a matrix with independent standard normal draws. Entries are
    /// drawn row by row, left to right, so the layout is reproducible for a
    /// given RNG state.
    pub fn gaussian(rows: usize, cols: usize, rng: &mut impl Rng) -> Result<Self, MatrixError> {
        if rows == 0 || cols == 0 {
            return Err(MatrixError::Empty);
        }
        let mut flat = Vec::with_capacity(rows * cols);
        for _ in 0..rows * cols {
            flat.push(rng.sample::<f64, _>(StandardNormal));
        }
        Self::from_row_major(rows, cols, &flat)
    }

    pub fn rows(&self) -> usize {
        self.inner.nrows()
    }

    pub fn cols(&self) -> usize {
        self.inner.ncols()
    }

    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.inner[(row, col)]
    }

    /// Copies column `col` into a vector.
    pub fn col(&self, col: usize) -> Vec<f64> {
        self.inner.column(col).iter().copied().collect()
    }

    pub fn col_norm(&self, col: usize) -> f64 {
        self.inner.column(col).norm()
    }

    /// Copies the entries out row by row.
    pub fn to_row_major(&self) -> Vec<f64> {
        let mut flat = Vec::with_capacity(self.rows() * self.cols());
        for i in 0..self.rows() {
            for j in 0..self.cols() {
                flat.push(self.inner[(i, j)]);
            }
        }
        flat
    }

    pub fn transpose(&self) -> Matrix {
        Matrix {
            inner: self.inner.transpose(),
        }
    }

    /// Matrix product `self * rhs`.
    pub fn matmul(&self, rhs: &Matrix) -> Result<Matrix, MatrixError> {
        if self.cols() != rhs.rows() {
            return Err(MatrixError::DimensionMismatch {
                op: "matmul",
                lrows: self.rows(),
                lcols: self.cols(),
                rrows: rhs.rows(),
                rcols: rhs.cols(),
            });
        }
        Self::validated(&self.inner * &rhs.inner)
    }

    pub fn add(&self, rhs: &Matrix) -> Result<Matrix, MatrixError> {
        if self.rows() != rhs.rows() || self.cols() != rhs.cols() {
            return Err(MatrixError::DimensionMismatch {
                op: "add",
                lrows: self.rows(),
                lcols: self.cols(),
                rrows: rhs.rows(),
                rcols: rhs.cols(),
            });
        }
        Self::validated(&self.inner + &rhs.inner)
    }

    pub fn sub(&self, rhs: &Matrix) -> Result<Matrix, MatrixError> {
        if self.rows() != rhs.rows() || self.cols() != rhs.cols() {
            return Err(MatrixError::DimensionMismatch {
                op: "sub",
                lrows: self.rows(),
                lcols: self.cols(),
                rrows: rhs.rows(),
                rcols: rhs.cols(),
            });
        }
        Self::validated(&self.inner - &rhs.inner)
    }

    pub fn scaled(&self, factor: f64) -> Result<Matrix, MatrixError> {
        Self::validated(&self.inner * factor)
    }

    /// Frobenius inner product `sum_ij self_ij * rhs_ij`.
    pub fn dot(&self, rhs: &Matrix) -> Result<f64, MatrixError> {
        if self.rows() != rhs.rows() || self.cols() != rhs.cols() {
            return Err(MatrixError::DimensionMismatch {
                op: "dot",
                lrows: self.rows(),
                lcols: self.cols(),
                rrows: rhs.rows(),
                rcols: rhs.cols(),
            });
        }
        Ok(self.inner.dot(&rhs.inner))
    }

    /// Frobenius norm: square root of the sum of squared entries.
    pub fn fro_norm(&self) -> f64 {
        self.inner.norm()
    }

    /// Thin singular value decomposition `self = U diag(S) V^T` with
    /// `k = min(rows, cols)` columns in `U` and `V` and `S` sorted in
    /// nonincreasing order.
    pub fn thin_svd(&self) -> Result<ThinSvd, MatrixError> {
        let svd = nalgebra::linalg::SVD::try_new(
            self.inner.clone(),
            true,
            true,
            f64::EPSILON,
            SVD_MAX_ITERS,
        )
        .ok_or(MatrixError::SvdNonConvergence {
            iterations: SVD_MAX_ITERS,
        })?;
        let u = svd.u.expect("left singular vectors were requested");
        let v_t = svd.v_t.expect("right singular vectors were requested");
        let mut order: Vec<usize> = (0..svd.singular_values.len()).collect();
        order.sort_by(|&a, &b| {
            svd.singular_values[b]
                .partial_cmp(&svd.singular_values[a])
                .expect("singular values are finite")
        });
        let k = order.len();
        let left = DMatrix::from_fn(u.nrows(), k, |i, j| u[(i, order[j])]);
        let right = DMatrix::from_fn(v_t.ncols(), k, |i, j| v_t[(order[j], i)]);
        let singulars: Vec<f64> = order.iter().map(|&j| svd.singular_values[j]).collect();
        if singulars.iter().any(|s| !s.is_finite()) {
            return Err(MatrixError::SvdNonConvergence {
                iterations: SVD_MAX_ITERS,
            });
        }
        Ok(ThinSvd {
            left: Matrix::validated(left)?,
            singulars,
            right: Matrix::validated(right)?,
        })
    }

    /// Returns a matrix with orthonormal columns spanning the column space of
    /// `self`, computed by Householder QR. Requires at least as many rows as
    /// columns and numerically full column rank.
    pub fn orthonormalized(&self) -> Result<Matrix, MatrixError> {
        if self.rows() < self.cols() {
            return Err(MatrixError::Underdetermined {
                rows: self.rows(),
                cols: self.cols(),
            });
        }
        let qr = self.inner.clone().qr();
        let r = qr.r();
        let scale = (0..self.cols())
            .map(|j| r[(j, j)].abs())
            .fold(0.0_f64, f64::max);
        let threshold = scale * self.rows().max(self.cols()) as f64 * f64::EPSILON;
        for j in 0..self.cols() {
            let pivot = r[(j, j)].abs();
            if pivot <= threshold || scale == 0.0 {
                return Err(MatrixError::RankDeficient { pivot, scale });
            }
        }
        Matrix::validated(qr.q())
    }
}

/// Thin SVD factors: `left` is rows x k, `right` is cols x k, `singulars`
/// holds the k = min(rows, cols) singular values in nonincreasing order.
#[derive(Debug, Clone)]
pub struct ThinSvd {
    pub left: Matrix,
    pub singulars: Vec<f64>,
    pub right: Matrix,
}

impl ThinSvd {
    /// Rebuilds `left * diag(singulars) * right^T`.
    pub fn reconstruct(&self) -> Result<Matrix, MatrixError> {
        let k = self.singulars.len();
        let scaled = Matrix::from_fn(self.left.rows(), k, |i, j| {
            self.left.get(i, j) * self.singulars[j]
        })?;
        scaled.matmul(&self.right.transpose())
    }

    pub fn rank_estimate(&self, rel_tol: f64) -> usize {
        let top = self.singulars.first().copied().unwrap_or(0.0);
        self.singulars
            .iter()
            .filter(|&&s| s > top * rel_tol)
            .count()
    }
}

/// Frobenius distance between `q^T q` and the identity; the orthonormality
/// residual used across the crate.
pub fn orthonormality_residual(q: &Matrix) -> f64 {
    let gram = q
        .transpose()
        .matmul(q)
        .expect("square product of a finite matrix");
    let mut sum = 0.0;
    for i in 0..gram.rows() {
        for j in 0..gram.cols() {
            let target = if i == j { 1.0 } else { 0.0 };
            sum += (gram.get(i, j) - target).powi(2);
        }
    }
    sum.sqrt()
}
