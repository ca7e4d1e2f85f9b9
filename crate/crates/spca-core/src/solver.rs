//! Alternating linearized proximal solver.
//!
//! Each iteration linearizes the smooth objective around the current pair,
//! adds a proximal term, and solves both subproblems in closed form: the
//! direction update is the polar factor of the matrix
//! `M(k) = 2 (X - U V) V^T + mu U`, and each component column is the
//! normalization of `q_j = 2 U^T x_j + (lambda - 2) v_j`. With step weights
//! above the Lipschitz bound of the gradient the objective decreases
//! monotonically; the solver records the per-iteration evidence (descent
//! slack, criticality bound, feasibility residuals) in a trace.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::fmtnum::float17;
use crate::model::{
    self, ComponentMatrix, DataMatrix, DirectionMatrix, ModelError, COMPONENT_NORM_TOL,
    DIRECTION_ORTH_TOL,
};
use crate::numkit::{Matrix, MatrixError};

/// Relative singular value threshold below which the polar factor of the
/// direction-step matrix is treated as non-unique.
pub const POLAR_DEGENERACY_TOL: f64 = 1e-12;

/// Exact CSV header for trace export.
pub const TRACE_CSV_HEADER: &str = "k,f,du,dv,slack,criticality_bound,orth_residual,colnorm_err";

const RATE_MIN_TRACE: usize = 10;
const RATE_MIN_POINTS: usize = 5;

#[derive(Debug, Error)]
pub enum SolverError {
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error("invalid solver configuration: {reason}")]
    InvalidConfig { reason: String },
    #[error("numeric failure at iteration {iter}: {detail}")]
    NumericFailure { iter: usize, detail: String },
    #[error(
        "feasibility drift at iteration {iter}: orthogonality residual {orth:.3e}, \
         worst column norm error {colnorm:.3e}"
    )]
    FeasibilityDrift {
        iter: usize,
        orth: f64,
        colnorm: f64,
    },
    #[error("trace has {len} records but at least {min} are required")]
    TraceTooShort { len: usize, min: usize },
    #[error("trace parse error at line {line}: {reason}")]
    TraceParse { line: usize, reason: String },
}

/// How step weights `mu` (direction step) and `lambda` (component step) are
/// chosen.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum StepRule {
    /// Use the given weights verbatim.
    Fixed { mu: f64, lambda: f64 },
    /// Set both weights to 1.1 times the Lipschitz bound of the gradient,
    /// which keeps them strictly above the bound with margin.
    #[serde(rename = "auto_1p1_lc")]
    Auto1p1Lc,
}

/// Initial iterate choice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum InitStrategy {
    /// Directions from the top singular subspace of the data, components from
    /// the sphere projection of their loadings. Deterministic.
    SvdOfData,
    /// Orthonormalized Gaussian directions drawn from the config seed.
    RandomOrthonormal,
}

#[derive(Debug, Clone, Serialize)]
pub struct SolverConfig {
    pub rank: usize,
    pub steps: StepRule,
    pub max_iters: usize,
    /// Stop once `sqrt(du^2 + dv^2)` falls below this; 0 disables the check.
    pub stop_tol: f64,
    pub seed: u64,
    pub init: InitStrategy,
}

impl SolverConfig {
    /// Automatic step weights, SVD initialization, and a convergence
    /// threshold suitable for the tested problem sizes.
    pub fn auto(rank: usize) -> Self {
        Self {
            rank,
            steps: StepRule::Auto1p1Lc,
            max_iters: 5000,
            stop_tol: 1e-7,
            seed: 0,
            init: InitStrategy::SvdOfData,
        }
    }

    pub fn validate(&self, m: usize, n: usize) -> Result<(), SolverError> {
        let bad = |reason: String| Err(SolverError::InvalidConfig { reason });
        if self.rank < 1 || self.rank > m.min(n) {
            return bad(format!(
                "rank {} must lie in [1, {}] for a {m}x{n} data matrix",
                self.rank,
                m.min(n)
            ));
        }
        if self.max_iters < 1 {
            return bad("max_iters must be at least 1".into());
        }
        if !self.stop_tol.is_finite() || self.stop_tol < 0.0 {
            return bad(format!(
                "stop_tol {} must be finite and >= 0",
                self.stop_tol
            ));
        }
        if let StepRule::Fixed { mu, lambda } = self.steps {
            if !(mu.is_finite() && mu > 0.0 && lambda.is_finite() && lambda > 0.0) {
                return bad(format!(
                    "step weights mu={mu}, lambda={lambda} must be positive"
                ));
            }
        }
        Ok(())
    }

    /// Concrete `(mu, lambda)` for a given Lipschitz bound.
    pub fn resolved_steps(&self, l_c: f64) -> (f64, f64) {
        match self.steps {
            StepRule::Fixed { mu, lambda } => (mu, lambda),
            StepRule::Auto1p1Lc => (1.1 * l_c, 1.1 * l_c),
        }
    }
}

/// One trace row. Row `k = 0` holds the initial objective with zero steps;
/// rows `k >= 1` describe the k-th update.
#[derive(Debug, Clone, PartialEq)]
pub struct IterateRecord {
    pub k: usize,
    /// Objective value `f(W(k))`.
    pub f: f64,
    /// `||U(k) - U(k-1)||_F`.
    pub du: f64,
    /// `||V(k) - V(k-1)||_F`.
    pub dv: f64,
    /// `f(k-1) - f(k) - ((min(mu, lambda) - L_c)/2) (du^2 + dv^2)`.
    pub sufficient_decrease_slack: f64,
    /// `(2 L_c + mu + lambda) sqrt(du^2 + dv^2)`, an upper bound on the
    /// distance from the subdifferential to zero.
    pub criticality_bound: f64,
    pub orth_residual: f64,
    pub worst_column_norm_error: f64,
}

/// Degenerate events observed during a run. Neither aborts the run; both mark
/// iterations where the closed-form update had ties.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum Degeneracy {
    /// The direction-step matrix had a singular value near zero, so the polar
    /// factor is not unique.
    RankDeficientPolar { iter: usize },
    /// A component target `q_j` vanished; the previous column was kept.
    ZeroComponentTarget { iter: usize, col: usize },
}

#[derive(Debug, Clone)]
pub struct FitResult {
    pub u: DirectionMatrix,
    pub v: ComponentMatrix,
    pub trace: Vec<IterateRecord>,
    pub converged: bool,
    pub iters_run: usize,
    /// Step weights actually used.
    pub mu: f64,
    pub lambda: f64,
    /// Lipschitz bound of the objective gradient for this data and rank.
    pub lipschitz: f64,
    pub degeneracies: Vec<Degeneracy>,
}

impl FitResult {
    /// Objective at the initial iterate.
    pub fn f_initial(&self) -> f64 {
        self.trace[0].f
    }

    pub fn f_final(&self) -> f64 {
        self.trace[self.trace.len() - 1].f
    }
}

/// Direction update outcome; `degenerate` marks a non-unique polar factor.
#[derive(Debug, Clone)]
pub struct UStep {
    pub u: DirectionMatrix,
    pub degenerate: bool,
}

/// Component update outcome; `zero_target_cols` lists columns whose target
/// vanished and whose previous value was kept.
#[derive(Debug, Clone)]
pub struct VStep {
    pub v: ComponentMatrix,
    pub zero_target_cols: Vec<usize>,
}

/// The direction-step linearization matrix `2 (X - U V) V^T + mu U`.
pub fn u_step_matrix(
    x: &DataMatrix,
    u_prev: &DirectionMatrix,
    v_prev: &ComponentMatrix,
    mu: f64,
) -> Result<Matrix, SolverError> {
    let residual = x.matrix().sub(&u_prev.matrix().matmul(v_prev.matrix())?)?;
    let grad_term = residual.matmul(&v_prev.matrix().transpose())?.scaled(2.0)?;
    Ok(grad_term.add(&u_prev.matrix().scaled(mu)?)?)
}

/// The component-step target matrix whose j-th column is
/// `q_j = 2 U^T x_j + (lambda - 2) v_j`.
pub fn v_step_targets(
    x: &DataMatrix,
    u_next: &DirectionMatrix,
    v_prev: &ComponentMatrix,
    lambda: f64,
) -> Result<Matrix, SolverError> {
    let loadings = u_next
        .matrix()
        .transpose()
        .matmul(x.matrix())?
        .scaled(2.0)?;
    Ok(loadings.add(&v_prev.matrix().scaled(lambda - 2.0)?)?)
}

/// Polar factor of `m` via thin SVD; the boolean flags a singular value below
/// [`POLAR_DEGENERACY_TOL`] relative to the largest.
fn polar_factor(m: &Matrix) -> Result<(Matrix, bool), SolverError> {
    let svd = m.thin_svd()?;
    let top = svd.singulars[0];
    let bottom = svd.singulars[svd.singulars.len() - 1];
    let degenerate = bottom < POLAR_DEGENERACY_TOL * top || top == 0.0;
    Ok((svd.left.matmul(&svd.right.transpose())?, degenerate))
}

/// One direction update: the feasible maximizer of `<U, M(k)>`, computed as
/// the polar factor of `M(k)`.
pub fn update_u(
    x: &DataMatrix,
    u_prev: &DirectionMatrix,
    v_prev: &ComponentMatrix,
    mu: f64,
) -> Result<UStep, SolverError> {
    if !(mu.is_finite() && mu > 0.0) {
        return Err(SolverError::InvalidConfig {
            reason: format!("mu {mu} must be positive"),
        });
    }
    let m_k = u_step_matrix(x, u_prev, v_prev, mu)?;
    let (polar, degenerate) = polar_factor(&m_k)?;
    Ok(UStep {
        u: DirectionMatrix::new(polar)?,
        degenerate,
    })
}

/// One component update: each column is `q_j / ||q_j||`; a vanished `q_j`
/// keeps the previous column (any unit vector is optimal there, and the
/// previous iterate is the deterministic choice).
pub fn update_v(
    x: &DataMatrix,
    u_next: &DirectionMatrix,
    v_prev: &ComponentMatrix,
    lambda: f64,
) -> Result<VStep, SolverError> {
    if !(lambda.is_finite() && lambda > 0.0) {
        return Err(SolverError::InvalidConfig {
            reason: format!("lambda {lambda} must be positive"),
        });
    }
    let targets = v_step_targets(x, u_next, v_prev, lambda)?;
    let r = targets.rows();
    let n = targets.cols();
    let mut entries = targets.to_row_major();
    let mut zero_target_cols = Vec::new();
    for j in 0..n {
        let norm = targets.col_norm(j);
        if norm == 0.0 {
            zero_target_cols.push(j);
            let prev = v_prev.col(j);
            for i in 0..r {
                entries[i * n + j] = prev[i];
            }
        } else {
            for i in 0..r {
                entries[i * n + j] /= norm;
            }
        }
    }
    Ok(VStep {
        v: ComponentMatrix::new(Matrix::from_row_major(r, n, &entries)?)?,
        zero_target_cols,
    })
}

/// Builds the initial feasible pair. Both strategies derive the components by
/// projecting the direction loadings `U(0)^T X` onto the sphere.
pub fn initialize(
    x: &DataMatrix,
    cfg: &SolverConfig,
) -> Result<(DirectionMatrix, ComponentMatrix), SolverError> {
    cfg.validate(x.dim(), x.len())?;
    let u0 = match cfg.init {
        InitStrategy::SvdOfData => {
            let svd = x.matrix().thin_svd()?;
            Matrix::from_fn(x.dim(), cfg.rank, |i, j| svd.left.get(i, j))?
        }
        InitStrategy::RandomOrthonormal => {
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
            Matrix::gaussian(x.dim(), cfg.rank, &mut rng)?.orthonormalized()?
        }
    };
    let u0 = DirectionMatrix::new(u0)?;
    let loadings = u0.matrix().transpose().matmul(x.matrix())?;
    let v0 = model::project_to_sphere_columns(&loadings)?;
    Ok((u0, v0))
}

/// Runs the alternating updates from the configured initialization.
pub fn fit(x: &DataMatrix, cfg: &SolverConfig) -> Result<FitResult, SolverError> {
    let (u0, v0) = initialize(x, cfg)?;
    fit_from(x, u0, v0, cfg)
}

/// Runs the alternating updates from a caller-supplied feasible pair.
pub fn fit_from(
    x: &DataMatrix,
    u0: DirectionMatrix,
    v0: ComponentMatrix,
    cfg: &SolverConfig,
) -> Result<FitResult, SolverError> {
    cfg.validate(x.dim(), x.len())?;
    if u0.dim() != x.dim() || u0.rank() != cfg.rank || v0.rank() != cfg.rank || v0.len() != x.len()
    {
        return Err(SolverError::InvalidConfig {
            reason: format!(
                "initial pair is {}x{} and {}x{}, expected {}x{} and {}x{}",
                u0.dim(),
                u0.rank(),
                v0.rank(),
                v0.len(),
                x.dim(),
                cfg.rank,
                cfg.rank,
                x.len()
            ),
        });
    }
    let l_c = model::lipschitz_constant(x, cfg.rank)?.value();
    let (mu, lambda) = cfg.resolved_steps(l_c);
    if !(mu.is_finite() && mu > 0.0 && lambda.is_finite() && lambda > 0.0) {
        return Err(SolverError::InvalidConfig {
            reason: format!("resolved step weights mu={mu}, lambda={lambda} must be positive"),
        });
    }

    let f0 = model::objective(x, &u0, &v0)?;
    let rep0 = model::feasibility_report(u0.matrix(), v0.matrix());
    let mut trace = Vec::with_capacity(cfg.max_iters + 1);
    trace.push(IterateRecord {
        k: 0,
        f: f0,
        du: 0.0,
        dv: 0.0,
        sufficient_decrease_slack: 0.0,
        criticality_bound: 0.0,
        orth_residual: rep0.orth_residual,
        worst_column_norm_error: rep0.worst_column_norm_error,
    });

    let mut u_cur = u0;
    let mut v_cur = v0;
    let mut f_prev = f0;
    let mut converged = false;
    let mut iters_run = 0;
    let mut degeneracies = Vec::new();
    let decrease_coeff = (mu.min(lambda) - l_c) / 2.0;
    let criticality_coeff = 2.0 * l_c + mu + lambda;

    for k in 1..=cfg.max_iters {
        let ustep = update_u(x, &u_cur, &v_cur, mu).map_err(|e| at_iter(k, e))?;
        if ustep.degenerate {
            degeneracies.push(Degeneracy::RankDeficientPolar { iter: k });
        }
        let vstep = update_v(x, &ustep.u, &v_cur, lambda).map_err(|e| at_iter(k, e))?;
        for &col in &vstep.zero_target_cols {
            degeneracies.push(Degeneracy::ZeroComponentTarget { iter: k, col });
        }

        let du = ustep
            .u
            .matrix()
            .sub(u_cur.matrix())
            .map_err(|e| at_iter(k, e.into()))?
            .fro_norm();
        let dv = vstep
            .v
            .matrix()
            .sub(v_cur.matrix())
            .map_err(|e| at_iter(k, e.into()))?
            .fro_norm();
        u_cur = ustep.u;
        v_cur = vstep.v;

        let f = model::objective(x, &u_cur, &v_cur).map_err(|e| at_iter(k, e.into()))?;
        if !f.is_finite() {
            return Err(SolverError::NumericFailure {
                iter: k,
                detail: format!("objective value {f}"),
            });
        }
        let rep = model::feasibility_report(u_cur.matrix(), v_cur.matrix());
        if rep.orth_residual > DIRECTION_ORTH_TOL
            || rep.worst_column_norm_error > COMPONENT_NORM_TOL
        {
            return Err(SolverError::FeasibilityDrift {
                iter: k,
                orth: rep.orth_residual,
                colnorm: rep.worst_column_norm_error,
            });
        }

        let gap_sq = du * du + dv * dv;
        trace.push(IterateRecord {
            k,
            f,
            du,
            dv,
            sufficient_decrease_slack: (f_prev - f) - decrease_coeff * gap_sq,
            criticality_bound: criticality_coeff * gap_sq.sqrt(),
            orth_residual: rep.orth_residual,
            worst_column_norm_error: rep.worst_column_norm_error,
        });
        f_prev = f;
        iters_run = k;
        if cfg.stop_tol > 0.0 && gap_sq.sqrt() < cfg.stop_tol {
            converged = true;
            break;
        }
    }

    Ok(FitResult {
        u: u_cur,
        v: v_cur,
        trace,
        converged,
        iters_run,
        mu,
        lambda,
        lipschitz: l_c,
        degeneracies,
    })
}

fn at_iter(iter: usize, e: SolverError) -> SolverError {
    match e {
        SolverError::Matrix(MatrixError::NonFinite { row, col, value }) => {
            SolverError::NumericFailure {
                iter,
                detail: format!("non-finite entry {value} at ({row}, {col})"),
            }
        }
        other => other,
    }
}

/// Re-evaluates the descent inequality along a stored trace and returns the
/// worst (smallest) slack `f(k-1) - f(k) - ((min(mu, lambda) - l_c)/2)
/// (du^2 + dv^2)` over consecutive rows. A trace with a single row has taken
/// no steps, so the slack is 0. Reports only; never asserts.
pub fn check_sufficient_decrease(trace: &[IterateRecord], mu: f64, lambda: f64, l_c: f64) -> f64 {
    let coeff = (mu.min(lambda) - l_c) / 2.0;
    let mut worst = f64::INFINITY;
    for pair in trace.windows(2) {
        let (prev, cur) = (&pair[0], &pair[1]);
        let gap_sq = cur.du * cur.du + cur.dv * cur.dv;
        worst = worst.min(prev.f - cur.f - coeff * gap_sq);
    }
    if worst == f64::INFINITY {
        0.0
    } else {
        worst
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RateRegime {
    /// Objective reached its final value exactly before the fit window.
    Finite,
    /// `f(k) - f_inf` decays like `rho^k`; parameter is `rho`.
    Linear,
    /// `f(k) - f_inf` decays like `k^p`; parameter is the exponent `p`.
    Sublinear,
    /// Too few usable points to fit either model.
    Inconclusive,
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct RateEstimate {
    pub regime: RateRegime,
    pub parameter: f64,
}

/// Classifies the tail behavior of the objective along a trace.
///
/// The limit value is taken as the final trace entry, the last 5% of rows are
/// excluded (their residuals against that limit are dominated by rounding),
/// and `log(f(k) - f_inf)` is regressed once against `k` and once against
/// `log k` over the remaining rows with positive residual. The fit with the
/// smaller squared error names the regime. This is a diagnostic, not a
/// guarantee: subtracting an estimated limit biases the fitted parameter when
/// the trace is cut off far from convergence.
pub fn estimate_rate(trace: &[IterateRecord]) -> Result<RateEstimate, SolverError> {
    if trace.len() < RATE_MIN_TRACE {
        return Err(SolverError::TraceTooShort {
            len: trace.len(),
            min: RATE_MIN_TRACE,
        });
    }
    let f_inf = trace[trace.len() - 1].f;
    let keep = (((trace.len() as f64) * 0.95).floor() as usize).max(2);
    let points: Vec<(f64, f64)> = trace[..keep]
        .iter()
        .filter(|rec| rec.k >= 1 && rec.f - f_inf > 0.0)
        .map(|rec| (rec.k as f64, (rec.f - f_inf).ln()))
        .collect();
    if points.is_empty() {
        return Ok(RateEstimate {
            regime: RateRegime::Finite,
            parameter: 0.0,
        });
    }
    if points.len() < RATE_MIN_POINTS {
        return Ok(RateEstimate {
            regime: RateRegime::Inconclusive,
            parameter: 0.0,
        });
    }
    let linear = fit_line(points.iter().map(|&(k, y)| (k, y)));
    let sublinear = fit_line(points.iter().map(|&(k, y)| (k.ln(), y)));
    match (linear, sublinear) {
        (Some(lin), Some(sub)) => {
            if lin.sse <= sub.sse {
                Ok(RateEstimate {
                    regime: RateRegime::Linear,
                    parameter: lin.slope.exp(),
                })
            } else {
                Ok(RateEstimate {
                    regime: RateRegime::Sublinear,
                    parameter: sub.slope,
                })
            }
        }
        (Some(lin), None) => Ok(RateEstimate {
            regime: RateRegime::Linear,
            parameter: lin.slope.exp(),
        }),
        (None, Some(sub)) => Ok(RateEstimate {
            regime: RateRegime::Sublinear,
            parameter: sub.slope,
        }),
        (None, None) => Ok(RateEstimate {
            regime: RateRegime::Inconclusive,
            parameter: 0.0,
        }),
    }
}

struct LineFit {
    slope: f64,
    sse: f64,
}

fn fit_line(points: impl Iterator<Item = (f64, f64)>) -> Option<LineFit> {
    let pts: Vec<(f64, f64)> = points.collect();
    let n = pts.len() as f64;
    if pts.len() < 2 {
        return None;
    }
    let mean_x = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let mean_y = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let mut sxx = 0.0;
    let mut sxy = 0.0;
    for &(x, y) in &pts {
        sxx += (x - mean_x) * (x - mean_x);
        sxy += (x - mean_x) * (y - mean_y);
    }
    if sxx == 0.0 {
        return None;
    }
    let slope = sxy / sxx;
    let intercept = mean_y - slope * mean_x;
    let sse = pts
        .iter()
        .map(|&(x, y)| (y - intercept - slope * x).powi(2))
        .sum::<f64>();
    if !slope.is_finite() || !sse.is_finite() {
        return None;
    }
    Some(LineFit { slope, sse })
}

/// Renders a trace as CSV with the exact header [`TRACE_CSV_HEADER`] and
/// floats carrying 17 significant digits.
pub fn trace_to_csv(trace: &[IterateRecord]) -> String {
    let mut out = String::from(TRACE_CSV_HEADER);
    out.push('\n');
    for rec in trace {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{}\n",
            rec.k,
            float17(rec.f),
            float17(rec.du),
            float17(rec.dv),
            float17(rec.sufficient_decrease_slack),
            float17(rec.criticality_bound),
            float17(rec.orth_residual),
            float17(rec.worst_column_norm_error),
        ));
    }
    out
}

/// Parses CSV produced by [`trace_to_csv`].
pub fn trace_from_csv(text: &str) -> Result<Vec<IterateRecord>, SolverError> {
    let mut lines = text.lines().enumerate();
    match lines.next() {
        Some((_, header)) if header.trim_end() == TRACE_CSV_HEADER => {}
        Some((_, header)) => {
            return Err(SolverError::TraceParse {
                line: 1,
                reason: format!("unexpected header {header:?}"),
            })
        }
        None => {
            return Err(SolverError::TraceParse {
                line: 1,
                reason: "empty input".into(),
            })
        }
    }
    let mut trace = Vec::new();
    for (idx, line) in lines {
        let line = line.trim_end();
        if line.is_empty() {
            continue;
        }
        let parts: Vec<&str> = line.split(',').collect();
        if parts.len() != 8 {
            return Err(SolverError::TraceParse {
                line: idx + 1,
                reason: format!("expected 8 fields, found {}", parts.len()),
            });
        }
        let parse_err = |what: &str| SolverError::TraceParse {
            line: idx + 1,
            reason: format!("cannot parse {what}"),
        };
        let k: usize = parts[0].parse().map_err(|_| parse_err("iteration index"))?;
        let mut floats = [0.0_f64; 7];
        for (slot, raw) in floats.iter_mut().zip(&parts[1..]) {
            let value: f64 = raw.parse().map_err(|_| parse_err("float field"))?;
            if !value.is_finite() {
                return Err(parse_err("finite float field"));
            }
            *slot = value;
        }
        trace.push(IterateRecord {
            k,
            f: floats[0],
            du: floats[1],
            dv: floats[2],
            sufficient_decrease_slack: floats[3],
            criticality_bound: floats[4],
            orth_residual: floats[5],
            worst_column_norm_error: floats[6],
        });
    }
    Ok(trace)
}
