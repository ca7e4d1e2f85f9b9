//! Clustering of component columns and partition scoring.
//!
//! `kmeans_unit_sphere` runs Lloyd iterations with farthest-first seeding and
//! a deterministic empty-cluster repair, restarted several times with the
//! best outcome chosen by (objective, restart index). Because the input
//! columns are unit norm, ordering partitions by within-cluster squared
//! Euclidean distance is the same as ordering by cosine dissimilarity.
//! Scoring offers accuracy under the optimal cluster-to-class assignment and
//! normalized mutual information with geometric-mean normalization.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::model::ComponentMatrix;
use crate::numkit::Matrix;

const MAX_LLOYD_ITERS: usize = 300;

#[derive(Debug, Error)]
pub enum ClusterError {
    #[error("label vector must not be empty")]
    EmptyLabels,
    #[error("label {label} at position {index} is out of range for k = {k}")]
    LabelOutOfRange {
        index: usize,
        label: usize,
        k: usize,
    },
    #[error("cluster count k = {k} must be at least {min}")]
    InvalidK { k: usize, min: usize },
    #[error("{n} points cannot fill k = {k} clusters")]
    TooFewPoints { n: usize, k: usize },
    #[error("restart count must be at least 1")]
    NoRestarts,
    #[error("label vectors have different lengths: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("label parse error at line {line}: {reason}")]
    ParseError { line: usize, reason: String },
}

/// A hard partition of n items into clusters `0..k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelVector {
    labels: Vec<usize>,
    k: usize,
}

impl LabelVector {
    /// Wraps labels with an explicit cluster count; clusters may be empty,
    /// which [`LabelVector::empty_clusters`] reports.
    pub fn new(labels: Vec<usize>, k: usize) -> Result<Self, ClusterError> {
        if labels.is_empty() {
            return Err(ClusterError::EmptyLabels);
        }
        if k < 1 {
            return Err(ClusterError::InvalidK { k, min: 1 });
        }
        for (index, &label) in labels.iter().enumerate() {
            if label >= k {
                return Err(ClusterError::LabelOutOfRange { index, label, k });
            }
        }
        Ok(Self { labels, k })
    }

    /// Infers the cluster count as one past the largest label.
    pub fn from_labels(labels: Vec<usize>) -> Result<Self, ClusterError> {
        let k = labels.iter().max().map_or(0, |&m| m + 1).max(1);
        Self::new(labels, k)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn num_clusters(&self) -> usize {
        self.k
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn get(&self, index: usize) -> usize {
        self.labels[index]
    }

    /// Cluster indices in `0..k` with no members.
    pub fn empty_clusters(&self) -> Vec<usize> {
        let mut seen = vec![false; self.k];
        for &label in &self.labels {
            seen[label] = true;
        }
        (0..self.k).filter(|&c| !seen[c]).collect()
    }

    /// Renders one label per line.
    pub fn to_lines(&self) -> String {
        let mut out = String::new();
        for &label in &self.labels {
            out.push_str(&label.to_string());
            out.push('\n');
        }
        out
    }

    /// Parses one label per line; the cluster count is inferred.
    pub fn from_lines(text: &str) -> Result<Self, ClusterError> {
        let mut labels = Vec::new();
        for (idx, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let label: usize = line.parse().map_err(|_| ClusterError::ParseError {
                line: idx + 1,
                reason: format!("not a nonnegative integer: {line:?}"),
            })?;
            labels.push(label);
        }
        Self::from_labels(labels)
    }
}

/// Partition quality against ground truth.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct ClusterScores {
    /// Fraction matched under the best cluster-to-class bijection, in [0,1].
    pub acc: f64,
    /// Normalized mutual information, in [0,1].
    pub nmi: f64,
}

/// Result of a k-means run: winning labels, final within-cluster sum of
/// squared distances, the objective after each Lloyd sweep of the winning
/// restart, and which restart won.
#[derive(Debug, Clone)]
pub struct KmeansOutcome {
    pub labels: LabelVector,
    pub objective: f64,
    pub objective_history: Vec<f64>,
    pub chosen_restart: usize,
}

/// K-means over the unit-norm columns of a component matrix.
pub fn kmeans_unit_sphere(
    points: &ComponentMatrix,
    k: usize,
    restarts: usize,
    seed: u64,
) -> Result<KmeansOutcome, ClusterError> {
    kmeans_columns(points.matrix(), k, restarts, seed)
}

/// K-means over the columns of an arbitrary matrix. Deterministic given the
/// seed: restart r draws its first center from the r-th pre-drawn index, the
/// remaining centers follow farthest-first, and the winner is the smallest
/// (objective, restart index) pair.
pub fn kmeans_columns(
    points: &Matrix,
    k: usize,
    restarts: usize,
    seed: u64,
) -> Result<KmeansOutcome, ClusterError> {
    if k < 2 {
        return Err(ClusterError::InvalidK { k, min: 2 });
    }
    let n = points.cols();
    if n < k {
        return Err(ClusterError::TooFewPoints { n, k });
    }
    if restarts < 1 {
        return Err(ClusterError::NoRestarts);
    }
    let cols: Vec<Vec<f64>> = (0..n).map(|j| points.col(j)).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let first_centers: Vec<usize> = (0..restarts).map(|_| rng.random_range(0..n)).collect();

    let mut best: Option<KmeansOutcome> = None;
    for (restart, &first) in first_centers.iter().enumerate() {
        let run = lloyd_run(&cols, k, first);
        let better = match &best {
            None => true,
            Some(champion) => run.objective < champion.objective,
        };
        if better {
            best = Some(KmeansOutcome {
                labels: LabelVector::new(run.labels, k)?,
                objective: run.objective,
                objective_history: run.history,
                chosen_restart: restart,
            });
        }
    }
    Ok(best.expect("at least one restart ran"))
}

struct LloydRun {
    labels: Vec<usize>,
    objective: f64,
    history: Vec<f64>,
}

fn dist_sq(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(&x, &y)| (x - y) * (x - y)).sum()
}

fn lloyd_run(cols: &[Vec<f64>], k: usize, first_center: usize) -> LloydRun {
    let n = cols.len();
    let dim = cols[0].len();

    // Farthest-first seeding from the given start index; ties break to the
    // smallest point index.
    let mut centers: Vec<Vec<f64>> = vec![cols[first_center].clone()];
    let mut min_d: Vec<f64> = cols.iter().map(|c| dist_sq(c, &centers[0])).collect();
    while centers.len() < k {
        let mut far = 0;
        for j in 1..n {
            if min_d[j] > min_d[far] {
                far = j;
            }
        }
        centers.push(cols[far].clone());
        for j in 0..n {
            min_d[j] = min_d[j].min(dist_sq(&cols[j], centers.last().unwrap()));
        }
    }

    let mut labels = vec![0usize; n];
    let mut history = Vec::new();
    let mut prev_labels: Option<Vec<usize>> = None;
    for _ in 0..MAX_LLOYD_ITERS {
        // Assignment; ties break to the lowest center index.
        for j in 0..n {
            let mut best_c = 0;
            let mut best_d = dist_sq(&cols[j], &centers[0]);
            for (c, center) in centers.iter().enumerate().skip(1) {
                let d = dist_sq(&cols[j], center);
                if d < best_d {
                    best_d = d;
                    best_c = c;
                }
            }
            labels[j] = best_c;
        }

        // Deterministic empty-cluster repair: move the globally farthest
        // point into the empty slot and make it that center.
        let mut repaired = false;
        loop {
            let mut counts = vec![0usize; k];
            for &l in &labels {
                counts[l] += 1;
            }
            let Some(empty) = (0..k).find(|&c| counts[c] == 0) else {
                break;
            };
            let mut far = usize::MAX;
            let mut far_d = -1.0;
            for j in 0..n {
                if counts[labels[j]] <= 1 {
                    continue;
                }
                let d = dist_sq(&cols[j], &centers[labels[j]]);
                if d > far_d {
                    far_d = d;
                    far = j;
                }
            }
            if far == usize::MAX {
                break;
            }
            centers[empty] = cols[far].clone();
            labels[far] = empty;
            repaired = true;
        }

        let objective: f64 = (0..n).map(|j| dist_sq(&cols[j], &centers[labels[j]])).sum();
        history.push(objective);

        let stable = prev_labels.as_deref() == Some(labels.as_slice()) && !repaired;

        // Mean update.
        let mut sums = vec![vec![0.0; dim]; k];
        let mut counts = vec![0usize; k];
        for j in 0..n {
            counts[labels[j]] += 1;
            for d in 0..dim {
                sums[labels[j]][d] += cols[j][d];
            }
        }
        for c in 0..k {
            if counts[c] > 0 {
                for d in 0..dim {
                    centers[c][d] = sums[c][d] / counts[c] as f64;
                }
            }
        }

        if stable {
            break;
        }
        prev_labels = Some(labels.clone());
    }

    let objective: f64 = (0..n).map(|j| dist_sq(&cols[j], &centers[labels[j]])).sum();
    LloydRun {
        labels,
        objective,
        history,
    }
}

fn confusion(pred: &LabelVector, truth: &LabelVector) -> Result<Vec<Vec<i64>>, ClusterError> {
    if pred.len() != truth.len() {
        return Err(ClusterError::LengthMismatch {
            left: pred.len(),
            right: truth.len(),
        });
    }
    let k = pred.num_clusters().max(truth.num_clusters());
    let mut table = vec![vec![0i64; k]; k];
    for (&p, &t) in pred.labels().iter().zip(truth.labels()) {
        table[p][t] += 1;
    }
    Ok(table)
}

/// Fraction of items matched under the best one-to-one cluster-to-class
/// assignment, solved exactly on the confusion matrix.
pub fn accuracy(pred: &LabelVector, truth: &LabelVector) -> Result<f64, ClusterError> {
    let table = confusion(pred, truth)?;
    let matched = max_assignment_total(&table);
    Ok(matched as f64 / pred.len() as f64)
}

/// Maximum total over one-to-one row/column assignments of a square
/// nonnegative table, via the potentials form of the assignment algorithm on
/// negated entries.
fn max_assignment_total(table: &[Vec<i64>]) -> i64 {
    let n = table.len();
    let inf = i64::MAX / 4;
    // Minimize negated entries with the standard potentials method; indices
    // are offset by one so column 0 is the virtual start.
    let cost = |i: usize, j: usize| -table[i - 1][j - 1];
    let mut u = vec![0i64; n + 1];
    let mut v = vec![0i64; n + 1];
    let mut matched_row = vec![0usize; n + 1];
    let mut way = vec![0usize; n + 1];
    for i in 1..=n {
        matched_row[0] = i;
        let mut j0 = 0usize;
        let mut min_v = vec![inf; n + 1];
        let mut used = vec![false; n + 1];
        loop {
            used[j0] = true;
            let i0 = matched_row[j0];
            let mut delta = inf;
            let mut j1 = 0usize;
            for j in 1..=n {
                if used[j] {
                    continue;
                }
                let cur = cost(i0, j) - u[i0] - v[j];
                if cur < min_v[j] {
                    min_v[j] = cur;
                    way[j] = j0;
                }
                if min_v[j] < delta {
                    delta = min_v[j];
                    j1 = j;
                }
            }
            for j in 0..=n {
                if used[j] {
                    u[matched_row[j]] += delta;
                    v[j] -= delta;
                } else {
                    min_v[j] -= delta;
                }
            }
            j0 = j1;
            if matched_row[j0] == 0 {
                break;
            }
        }
        loop {
            let j1 = way[j0];
            matched_row[j0] = matched_row[j1];
            j0 = j1;
            if j0 == 0 {
                break;
            }
        }
    }
    (1..=n).map(|j| table[matched_row[j] - 1][j - 1]).sum()
}

/// Normalized mutual information `I(pred; truth) / sqrt(H(pred) H(truth))`
/// with natural-log entropies, clamped to [0,1]. Zero-entropy convention:
/// 1 when both partitions are single-cluster, 0 when only one is.
pub fn nmi(pred: &LabelVector, truth: &LabelVector) -> Result<f64, ClusterError> {
    let table = confusion(pred, truth)?;
    let n = pred.len() as f64;
    let k = table.len();
    let mut row = vec![0i64; k];
    let mut col = vec![0i64; k];
    for a in 0..k {
        for b in 0..k {
            row[a] += table[a][b];
            col[b] += table[a][b];
        }
    }
    let entropy = |marginal: &[i64]| -> f64 {
        marginal
            .iter()
            .filter(|&&c| c > 0)
            .map(|&c| {
                let p = c as f64 / n;
                -p * p.ln()
            })
            .sum()
    };
    let h_pred = entropy(&row);
    let h_truth = entropy(&col);
    if h_pred == 0.0 && h_truth == 0.0 {
        return Ok(1.0);
    }
    if h_pred == 0.0 || h_truth == 0.0 {
        return Ok(0.0);
    }
    let mut info = 0.0;
    for a in 0..k {
        for b in 0..k {
            if table[a][b] > 0 {
                let p_ab = table[a][b] as f64 / n;
                let p_a = row[a] as f64 / n;
                let p_b = col[b] as f64 / n;
                info += p_ab * (p_ab / (p_a * p_b)).ln();
            }
        }
    }
    Ok((info / (h_pred * h_truth).sqrt()).clamp(0.0, 1.0))
}
