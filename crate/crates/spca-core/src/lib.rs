//! Spherical principal component analysis.
//!
//! Factors a data matrix `X` (m x n) as `U * V` where `U` (m x r) has
//! orthonormal columns and every column of `V` (r x n) lies on the unit
//! sphere. The factorization is computed by alternating linearized proximal
//! updates with closed-form projections onto each constraint set, and the
//! solver records per-iteration diagnostics (objective, step sizes, descent
//! slack, criticality bound, feasibility residuals).
//!
//! Modules:
//! - [`numkit`]: dense matrix kernels (multiply, thin SVD, QR orthonormalization).
//! - [`model`]: problem statement (objective, gradients, step-size bound, feasibility).
//! - [`solver`]: the alternating updates, diagnostics, and rate estimation.
//! - [`cluster`]: k-means on unit-norm columns plus accuracy and NMI scoring.
//! - [`data`]: synthetic wedge data, dense CSV and sparse COO ingestion, tf-idf.

pub mod cluster;
pub mod data;
mod fmtnum;
pub mod model;
pub mod numkit;
pub mod solver;

pub use cluster::{
    accuracy, kmeans_columns, kmeans_unit_sphere, nmi, ClusterError, ClusterScores, KmeansOutcome,
    LabelVector,
};
pub use data::{
    gen_two_wedges, load_coo, load_dense_csv, normalize_columns, parse_coo, parse_dense_csv,
    render_dense_csv, save_dense_csv, tfidf, DataError, LabeledDataset, SyntheticSpec,
};
pub use model::{
    feasibility_report, grad_u, grad_vj, lipschitz_constant, objective, project_to_sphere_columns,
    squared_residual, ComponentMatrix, DataMatrix, DirectionMatrix, FeasibilityReport,
    LipschitzBound, ModelError,
};
pub use numkit::{orthonormality_residual, Matrix, MatrixError, ThinSvd};
pub use solver::{
    check_sufficient_decrease, estimate_rate, fit, fit_from, initialize, trace_from_csv,
    trace_to_csv, u_step_matrix, update_u, update_v, v_step_targets, FitResult, InitStrategy,
    IterateRecord, RateEstimate, RateRegime, SolverConfig, SolverError, StepRule,
};
