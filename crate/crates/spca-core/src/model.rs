//! Problem statement for spherical PCA.
//!
//! The factorization seeks `X ~ U V` with `U` in the set of m x r matrices
//! with orthonormal columns and each column of `V` on the unit sphere in
//! `R^r`. This module owns the typed wrappers that witness those two
//! constraint sets, the least-squares objective `h(U, V) = ||X - U V||_F^2`
//! with its partial gradients, the global step-size bound used by the solver,
//! and the runtime feasibility report.

use serde::Serialize;
use thiserror::Error;

use crate::numkit::{orthonormality_residual, Matrix, MatrixError};

/// Frobenius tolerance on `u^T u - I` for [`DirectionMatrix`].
pub const DIRECTION_ORTH_TOL: f64 = 1e-10;

/// Per-column tolerance on `| ||v_j|| - 1 |` for [`ComponentMatrix`].
pub const COMPONENT_NORM_TOL: f64 = 1e-12;

/// Per-column tolerance for a [`DataMatrix`] flagged as normalized.
pub const DATA_NORMALIZED_TOL: f64 = 1e-10;

#[derive(Debug, Error)]
pub enum ModelError {
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error("directions are not orthonormal: residual {residual:.3e} exceeds {tol:.0e}")]
    NotOrthonormal { residual: f64, tol: f64 },
    #[error("component column {col} has norm error {err:.3e} exceeding {tol:.0e}")]
    ColumnNotUnit { col: usize, err: f64, tol: f64 },
    #[error("data column {col} has norm {norm:.6e} but the matrix is declared normalized")]
    ColumnNotNormalized { col: usize, norm: f64 },
    #[error("column {col} is zero and cannot be projected to the sphere")]
    ZeroColumn { col: usize },
    #[error("rank {rank} is out of range for a {rows}x{cols} data matrix")]
    InvalidRank {
        rank: usize,
        rows: usize,
        cols: usize,
    },
    #[error("dimension mismatch: x is {xr}x{xc}, u is {ur}x{uc}, v is {vr}x{vc}")]
    ShapeMismatch {
        xr: usize,
        xc: usize,
        ur: usize,
        uc: usize,
        vr: usize,
        vc: usize,
    },
    #[error("column index {col} is out of range for {cols} columns")]
    ColumnOutOfRange { col: usize, cols: usize },
}

/// The m x n data matrix, columns are observations. `normalized` records
/// whether every column was verified to have unit Euclidean norm.
#[derive(Debug, Clone)]
pub struct DataMatrix {
    x: Matrix,
    normalized: bool,
}

impl DataMatrix {
    /// Wraps a matrix without any column-norm claim.
    pub fn new(x: Matrix) -> Self {
        Self {
            x,
            normalized: false,
        }
    }

    /// Wraps a matrix while asserting unit-norm columns.
    pub fn new_normalized(x: Matrix) -> Result<Self, ModelError> {
        for col in 0..x.cols() {
            let norm = x.col_norm(col);
            if (norm - 1.0).abs() > DATA_NORMALIZED_TOL {
                return Err(ModelError::ColumnNotNormalized { col, norm });
            }
        }
        Ok(Self {
            x,
            normalized: true,
        })
    }

    pub fn matrix(&self) -> &Matrix {
        &self.x
    }

    pub fn is_normalized(&self) -> bool {
        self.normalized
    }

    /// Observation dimension m.
    pub fn dim(&self) -> usize {
        self.x.rows()
    }

    /// Number of observations n.
    pub fn len(&self) -> usize {
        self.x.cols()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// An m x r matrix with orthonormal columns.
#[derive(Debug, Clone)]
pub struct DirectionMatrix {
    u: Matrix,
}

impl DirectionMatrix {
    pub fn new(u: Matrix) -> Result<Self, ModelError> {
        let residual = orthonormality_residual(&u);
        if residual > DIRECTION_ORTH_TOL {
            return Err(ModelError::NotOrthonormal {
                residual,
                tol: DIRECTION_ORTH_TOL,
            });
        }
        Ok(Self { u })
    }

    pub fn matrix(&self) -> &Matrix {
        &self.u
    }

    pub fn dim(&self) -> usize {
        self.u.rows()
    }

    pub fn rank(&self) -> usize {
        self.u.cols()
    }
}

/// An r x n matrix whose columns all lie on the unit sphere.
#[derive(Debug, Clone)]
pub struct ComponentMatrix {
    v: Matrix,
}

impl ComponentMatrix {
    pub fn new(v: Matrix) -> Result<Self, ModelError> {
        for col in 0..v.cols() {
            let err = (v.col_norm(col) - 1.0).abs();
            if err > COMPONENT_NORM_TOL {
                return Err(ModelError::ColumnNotUnit {
                    col,
                    err,
                    tol: COMPONENT_NORM_TOL,
                });
            }
        }
        Ok(Self { v })
    }

    pub fn matrix(&self) -> &Matrix {
        &self.v
    }

    pub fn rank(&self) -> usize {
        self.v.rows()
    }

    pub fn len(&self) -> usize {
        self.v.cols()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn col(&self, j: usize) -> Vec<f64> {
        self.v.col(j)
    }
}

/// Global Lipschitz bound `2(r + n + sqrt(r n) + ||X||_F)` for the objective
/// gradient over the feasible sets.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LipschitzBound {
    l_c: f64,
}

impl LipschitzBound {
    pub fn value(&self) -> f64 {
        self.l_c
    }
}

/// Runtime feasibility measurements for a factor pair.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct FeasibilityReport {
    /// `||u^T u - I||_F`.
    pub orth_residual: f64,
    /// `max_j | ||v_j|| - 1 |`.
    pub worst_column_norm_error: f64,
}

fn check_shapes(x: &Matrix, u: &Matrix, v: &Matrix) -> Result<(), ModelError> {
    if u.rows() != x.rows() || v.cols() != x.cols() || u.cols() != v.rows() {
        return Err(ModelError::ShapeMismatch {
            xr: x.rows(),
            xc: x.cols(),
            ur: u.rows(),
            uc: u.cols(),
            vr: v.rows(),
            vc: v.cols(),
        });
    }
    Ok(())
}

/// `||x - u v||_F^2` on raw matrices; shared by the typed wrappers and by
/// diagnostics that evaluate the objective off the feasible sets.
pub fn squared_residual(x: &Matrix, u: &Matrix, v: &Matrix) -> Result<f64, ModelError> {
    check_shapes(x, u, v)?;
    let residual = x.sub(&u.matmul(v)?)?;
    Ok(residual.fro_norm().powi(2))
}

/// The objective `h(U, V) = ||X - U V||_F^2`.
pub fn objective(
    x: &DataMatrix,
    u: &DirectionMatrix,
    v: &ComponentMatrix,
) -> Result<f64, ModelError> {
    squared_residual(x.matrix(), u.matrix(), v.matrix())
}

/// Gradient of the objective in `U`: `-2 (X - U V) V^T`.
pub fn grad_u(
    x: &DataMatrix,
    u: &DirectionMatrix,
    v: &ComponentMatrix,
) -> Result<Matrix, ModelError> {
    check_shapes(x.matrix(), u.matrix(), v.matrix())?;
    let residual = x.matrix().sub(&u.matrix().matmul(v.matrix())?)?;
    Ok(residual.matmul(&v.matrix().transpose())?.scaled(-2.0)?)
}

/// Gradient of the objective in column `j` of `V`: `-2 U^T (x_j - U v_j)`.
/// The general form is kept (no `U^T U = I` simplification) so the value
/// stays correct for nearly orthonormal `U`.
pub fn grad_vj(
    x: &DataMatrix,
    u: &DirectionMatrix,
    v: &ComponentMatrix,
    j: usize,
) -> Result<Vec<f64>, ModelError> {
    check_shapes(x.matrix(), u.matrix(), v.matrix())?;
    if j >= x.len() {
        return Err(ModelError::ColumnOutOfRange {
            col: j,
            cols: x.len(),
        });
    }
    let m = x.dim();
    let r = u.rank();
    let xj = x.matrix().col(j);
    let vj = v.col(j);
    let mut residual = vec![0.0; m];
    for i in 0..m {
        let mut uv = 0.0;
        for (p, vjp) in vj.iter().enumerate() {
            uv += u.matrix().get(i, p) * vjp;
        }
        residual[i] = xj[i] - uv;
    }
    let mut grad = vec![0.0; r];
    for (p, g) in grad.iter_mut().enumerate() {
        let mut acc = 0.0;
        for (i, res) in residual.iter().enumerate() {
            acc += u.matrix().get(i, p) * res;
        }
        *g = -2.0 * acc;
    }
    Ok(grad)
}

/// Step-size bound `2 (r + n + sqrt(r n) + ||X||_F)`.
pub fn lipschitz_constant(x: &DataMatrix, rank: usize) -> Result<LipschitzBound, ModelError> {
    let (m, n) = (x.dim(), x.len());
    if rank < 1 || rank > m.min(n) {
        return Err(ModelError::InvalidRank {
            rank,
            rows: m,
            cols: n,
        });
    }
    let r = rank as f64;
    let nf = n as f64;
    Ok(LipschitzBound {
        l_c: 2.0 * (r + nf + (r * nf).sqrt() + x.matrix().fro_norm()),
    })
}

/// Divides every column by its Euclidean norm. A zero column is an error
/// carrying the offending index; picking an arbitrary direction instead
/// would make results nondeterministic.
pub fn project_to_sphere_columns(v: &Matrix) -> Result<ComponentMatrix, ModelError> {
    let mut scaled = v.to_row_major();
    let cols = v.cols();
    for col in 0..cols {
        let norm = v.col_norm(col);
        if norm == 0.0 {
            return Err(ModelError::ZeroColumn { col });
        }
        for row in 0..v.rows() {
            scaled[row * cols + col] /= norm;
        }
    }
    ComponentMatrix::new(Matrix::from_row_major(v.rows(), cols, &scaled)?)
}

/// Measures constraint violation on raw factors. Takes plain matrices so it
/// can report on infeasible pairs; the typed wrappers expose `.matrix()` for
/// feasible callers.
pub fn feasibility_report(u: &Matrix, v: &Matrix) -> FeasibilityReport {
    let orth_residual = orthonormality_residual(u);
    let mut worst = 0.0_f64;
    for col in 0..v.cols() {
        worst = worst.max((v.col_norm(col) - 1.0).abs());
    }
    FeasibilityReport {
        orth_residual,
        worst_column_norm_error: worst,
    }
}
