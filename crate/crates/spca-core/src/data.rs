//! Data generation, ingestion, and preprocessing.
//!
//! The synthetic generator draws two clusters of 3-d points inside planar
//! wedges that share the z-axis: one wedge spans the z-axis and the direction
//! `(1,0,1)/sqrt(2)` inside the xz-plane, the other spans the z-axis and
//! `(0,1,1)/sqrt(2)` inside the yz-plane. Within a wedge the angle from the
//! z-axis is uniform on `[0, pi/4]` and the radius uniform on the configured
//! range, so only the angular position separates the clusters; a Gaussian
//! out-of-plane jitter keeps the clouds from being exactly coplanar.
//!
//! Ingestion covers dense CSV (columns are observations) and 1-indexed
//! sparse COO text, plus tf-idf weighting and column normalization.

use std::path::Path;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::Normal;
use thiserror::Error;

use crate::cluster::LabelVector;
use crate::fmtnum::float17;
use crate::model::{DataMatrix, ModelError};
use crate::numkit::{Matrix, MatrixError};

#[derive(Debug, Error)]
pub enum DataError {
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error("invalid synthetic spec: {reason}")]
    BadSpec { reason: String },
    #[error("CSV parse error at line {line}, column {col}: {reason}")]
    CsvCell {
        line: usize,
        col: usize,
        reason: String,
    },
    #[error("CSV line {line} has {found} fields but line 1 has {expected}")]
    CsvRagged {
        line: usize,
        expected: usize,
        found: usize,
    },
    #[error("CSV input has no rows")]
    CsvEmpty,
    #[error("COO header must be \"m n nnz\": {reason}")]
    CooHeader { reason: String },
    #[error("COO line {line}: {reason}")]
    CooEntry { line: usize, reason: String },
    #[error("COO line {line}: index ({row}, {col}) outside 1..={m} x 1..={n}")]
    CooOutOfRange {
        line: usize,
        row: usize,
        col: usize,
        m: usize,
        n: usize,
    },
    #[error("COO header promises {expected} entries but {found} were given")]
    CooCount { expected: usize, found: usize },
    #[error("negative entry {value} at ({row}, {col}); term counts must be nonnegative")]
    NegativeEntry { row: usize, col: usize, value: f64 },
    #[error("column {col} is zero and cannot be normalized")]
    ZeroColumn { col: usize },
}

/// Parameters of the two-wedge synthetic dataset.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SyntheticSpec {
    n_per_cluster: usize,
    radius_range: (f64, f64),
    jitter: f64,
    seed: u64,
}

impl SyntheticSpec {
    pub fn new(
        n_per_cluster: usize,
        radius_range: (f64, f64),
        jitter: f64,
        seed: u64,
    ) -> Result<Self, DataError> {
        let (low, high) = radius_range;
        if n_per_cluster < 1 {
            return Err(DataError::BadSpec {
                reason: "n_per_cluster must be at least 1".into(),
            });
        }
        if !(low.is_finite() && high.is_finite() && low > 0.0 && high >= low) {
            return Err(DataError::BadSpec {
                reason: format!("radius range [{low}, {high}] must satisfy 0 < low <= high"),
            });
        }
        if !jitter.is_finite() || jitter < 0.0 {
            return Err(DataError::BadSpec {
                reason: format!("jitter {jitter} must be finite and >= 0"),
            });
        }
        Ok(Self {
            n_per_cluster,
            radius_range,
            jitter,
            seed,
        })
    }

    pub fn n_per_cluster(&self) -> usize {
        self.n_per_cluster
    }

    pub fn radius_range(&self) -> (f64, f64) {
        self.radius_range
    }

    pub fn jitter(&self) -> f64 {
        self.jitter
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }
}

impl Default for SyntheticSpec {
    /// 100 points per cluster, radius uniform on [0.5, 2.0], jitter 0.02.
    fn default() -> Self {
        Self {
            n_per_cluster: 100,
            radius_range: (0.5, 2.0),
            jitter: 0.02,
            seed: 0,
        }
    }
}

/// A data matrix with ground-truth labels and provenance text.
#[derive(Debug, Clone)]
pub struct LabeledDataset {
    pub x: DataMatrix,
    pub truth: LabelVector,
    pub meta: String,
}

/// Generates the two-wedge dataset: `2 * n_per_cluster` columns in R^3,
/// cluster 0 first. Per point the draws are angle, radius, jitter, in that
/// order, so output is a pure function of the spec.
pub fn gen_two_wedges(spec: &SyntheticSpec) -> LabeledDataset {
    let n_each = spec.n_per_cluster;
    let n = 2 * n_each;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let jitter_dist = Normal::new(0.0, spec.jitter).expect("jitter is finite and nonnegative");
    let (low, high) = spec.radius_range;
    let mut entries = vec![0.0_f64; 3 * n];
    let mut labels = vec![0usize; n];
    for cluster in 0..2 {
        for point in 0..n_each {
            let angle = rng.random_range(0.0..=std::f64::consts::FRAC_PI_4);
            let radius = rng.random_range(low..=high);
            let eps: f64 = rng.sample(jitter_dist);
            let col = cluster * n_each + point;
            let (x, y, z) = if cluster == 0 {
                (radius * angle.sin(), eps, radius * angle.cos())
            } else {
                (eps, radius * angle.sin(), radius * angle.cos())
            };
            entries[col] = x;
            entries[n + col] = y;
            entries[2 * n + col] = z;
            labels[col] = cluster;
        }
    }
    let x = Matrix::from_row_major(3, n, &entries).expect("generated entries are finite");
    let truth = LabelVector::new(labels, 2).expect("labels are 0 or 1");
    LabeledDataset {
        x: DataMatrix::new(x),
        truth,
        meta: format!(
            "two_wedges(n_per_cluster={}, radius=[{}, {}], jitter={}, seed={})",
            n_each, low, high, spec.jitter, spec.seed
        ),
    }
}

/// Parses dense CSV text: one row per line, comma-separated, columns are
/// observations. Rejects ragged rows and non-finite cells by position.
pub fn parse_dense_csv(text: &str) -> Result<Matrix, DataError> {
    let mut rows: Vec<Vec<f64>> = Vec::new();
    let mut expected = 0usize;
    for (idx, line) in text.lines().enumerate() {
        let line = line.trim_end_matches('\r');
        if line.is_empty() {
            continue;
        }
        let mut row = Vec::new();
        for (col, field) in line.split(',').enumerate() {
            let value: f64 = field.trim().parse().map_err(|_| DataError::CsvCell {
                line: idx + 1,
                col: col + 1,
                reason: format!("not a number: {:?}", field.trim()),
            })?;
            if !value.is_finite() {
                return Err(DataError::CsvCell {
                    line: idx + 1,
                    col: col + 1,
                    reason: format!("non-finite value {value}"),
                });
            }
            row.push(value);
        }
        if rows.is_empty() {
            expected = row.len();
        } else if row.len() != expected {
            return Err(DataError::CsvRagged {
                line: idx + 1,
                expected,
                found: row.len(),
            });
        }
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(DataError::CsvEmpty);
    }
    Ok(Matrix::from_rows(&rows)?)
}

/// Renders a matrix as dense CSV with 17-significant-digit floats, so a
/// parse reproduces the exact values.
pub fn render_dense_csv(x: &Matrix) -> String {
    let mut out = String::new();
    for i in 0..x.rows() {
        for j in 0..x.cols() {
            if j > 0 {
                out.push(',');
            }
            out.push_str(&float17(x.get(i, j)));
        }
        out.push('\n');
    }
    out
}

pub fn load_dense_csv(path: &Path) -> Result<DataMatrix, DataError> {
    let text = std::fs::read_to_string(path)?;
    Ok(DataMatrix::new(parse_dense_csv(&text)?))
}

pub fn save_dense_csv(path: &Path, x: &Matrix) -> Result<(), DataError> {
    std::fs::write(path, render_dense_csv(x))?;
    Ok(())
}

/// Parses sparse COO text: header `m n nnz`, then exactly `nnz` lines
/// `row col value` with 1-indexed positions. Duplicate positions are summed.
pub fn parse_coo(text: &str) -> Result<Matrix, DataError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(idx, line)| (idx + 1, line.trim()))
        .filter(|(_, line)| !line.is_empty());
    let (_, header) = lines.next().ok_or(DataError::CooHeader {
        reason: "empty input".into(),
    })?;
    let dims: Vec<usize> = header
        .split_whitespace()
        .map(str::parse)
        .collect::<Result<_, _>>()
        .map_err(|e| DataError::CooHeader {
            reason: format!("{e} in {header:?}"),
        })?;
    let [m, n, nnz] = dims[..] else {
        return Err(DataError::CooHeader {
            reason: format!("expected 3 fields, found {} in {header:?}", dims.len()),
        });
    };
    if m == 0 || n == 0 {
        return Err(DataError::CooHeader {
            reason: format!("dimensions {m}x{n} must be positive"),
        });
    }
    let mut entries = vec![0.0_f64; m * n];
    let mut found = 0usize;
    for (line_no, line) in lines {
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 3 {
            return Err(DataError::CooEntry {
                line: line_no,
                reason: format!("expected \"row col value\", found {line:?}"),
            });
        }
        let parse_idx = |s: &str| -> Result<usize, DataError> {
            s.parse().map_err(|_| DataError::CooEntry {
                line: line_no,
                reason: format!("bad index {s:?}"),
            })
        };
        let row = parse_idx(fields[0])?;
        let col = parse_idx(fields[1])?;
        let value: f64 = fields[2].parse().map_err(|_| DataError::CooEntry {
            line: line_no,
            reason: format!("bad value {:?}", fields[2]),
        })?;
        if !value.is_finite() {
            return Err(DataError::CooEntry {
                line: line_no,
                reason: format!("non-finite value {value}"),
            });
        }
        if row < 1 || row > m || col < 1 || col > n {
            return Err(DataError::CooOutOfRange {
                line: line_no,
                row,
                col,
                m,
                n,
            });
        }
        entries[(row - 1) * n + (col - 1)] += value;
        found += 1;
    }
    if found != nnz {
        return Err(DataError::CooCount {
            expected: nnz,
            found,
        });
    }
    Ok(Matrix::from_row_major(m, n, &entries)?)
}

pub fn load_coo(path: &Path) -> Result<DataMatrix, DataError> {
    let text = std::fs::read_to_string(path)?;
    Ok(DataMatrix::new(parse_coo(&text)?))
}

/// Reweights term counts as `count(i,j) * ln(n / df_i)` where `df_i` counts
/// the columns in which term `i` appears. Rows present in every column
/// become zero; rows present in none stay zero.
pub fn tfidf(x: &DataMatrix) -> Result<DataMatrix, DataError> {
    let mat = x.matrix();
    let (m, n) = (mat.rows(), mat.cols());
    for i in 0..m {
        for j in 0..n {
            let value = mat.get(i, j);
            if value < 0.0 {
                return Err(DataError::NegativeEntry {
                    row: i,
                    col: j,
                    value,
                });
            }
        }
    }
    let mut weighted = vec![0.0_f64; m * n];
    for i in 0..m {
        let df = (0..n).filter(|&j| mat.get(i, j) > 0.0).count();
        if df == 0 {
            continue;
        }
        let idf = (n as f64 / df as f64).ln();
        for j in 0..n {
            weighted[i * n + j] = mat.get(i, j) * idf;
        }
    }
    Ok(DataMatrix::new(Matrix::from_row_major(m, n, &weighted)?))
}

/// Scales every column to unit Euclidean norm and marks the result
/// normalized. A zero column is an error naming the column.
pub fn normalize_columns(x: &DataMatrix) -> Result<DataMatrix, DataError> {
    let mat = x.matrix();
    let (m, n) = (mat.rows(), mat.cols());
    let mut scaled = mat.to_row_major();
    for j in 0..n {
        let norm = mat.col_norm(j);
        if norm == 0.0 {
            return Err(DataError::ZeroColumn { col: j });
        }
        for i in 0..m {
            scaled[i * n + j] /= norm;
        }
    }
    Ok(DataMatrix::new_normalized(Matrix::from_row_major(
        m, n, &scaled,
    )?)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_validation() {
        assert!(SyntheticSpec::new(0, (0.5, 2.0), 0.02, 0).is_err());
        assert!(SyntheticSpec::new(10, (0.0, 2.0), 0.02, 0).is_err());
        assert!(SyntheticSpec::new(10, (2.0, 0.5), 0.02, 0).is_err());
        assert!(SyntheticSpec::new(10, (0.5, 2.0), -0.1, 0).is_err());
        assert!(SyntheticSpec::new(10, (1.0, 1.0), 0.0, 0).is_ok());
    }

    #[test]
    fn wedges_have_expected_counts_and_planes() {
        let spec = SyntheticSpec::new(100, (1.0, 1.0), 0.0, 3).unwrap();
        let ds = gen_two_wedges(&spec);
        assert_eq!(ds.x.dim(), 3);
        assert_eq!(ds.x.len(), 200);
        assert_eq!(ds.truth.len(), 200);
        let mat = ds.x.matrix();
        for j in 0..100 {
            assert_eq!(mat.get(1, j), 0.0, "cluster 0 lies in the xz-plane");
            let (x, z) = (mat.get(0, j), mat.get(2, j));
            let angle = x.atan2(z);
            assert!((0.0..=std::f64::consts::FRAC_PI_4 + 1e-12).contains(&angle));
            assert!(((x * x + z * z).sqrt() - 1.0).abs() <= 1e-12);
        }
        for j in 100..200 {
            assert_eq!(mat.get(0, j), 0.0, "cluster 1 lies in the yz-plane");
        }
    }

    #[test]
    fn wedges_are_deterministic_per_seed() {
        let spec = SyntheticSpec::default().with_seed(9);
        let a = gen_two_wedges(&spec);
        let b = gen_two_wedges(&spec);
        assert_eq!(a.x.matrix().to_row_major(), b.x.matrix().to_row_major());
        let c = gen_two_wedges(&spec.with_seed(10));
        assert_ne!(a.x.matrix().to_row_major(), c.x.matrix().to_row_major());
    }

    #[test]
    fn dense_csv_parses_and_rejects() {
        let m = parse_dense_csv("1,2\n3,4\n").unwrap();
        assert_eq!(m.to_row_major(), vec![1.0, 2.0, 3.0, 4.0]);
        assert!(matches!(
            parse_dense_csv("1,2\n3\n"),
            Err(DataError::CsvRagged {
                line: 2,
                expected: 2,
                found: 1
            })
        ));
        assert!(matches!(
            parse_dense_csv("1,nan\n"),
            Err(DataError::CsvCell {
                line: 1,
                col: 2,
                ..
            })
        ));
        assert!(matches!(
            parse_dense_csv("1,x\n"),
            Err(DataError::CsvCell {
                line: 1,
                col: 2,
                ..
            })
        ));
        assert!(matches!(parse_dense_csv(""), Err(DataError::CsvEmpty)));
    }

    #[test]
    fn dense_csv_round_trip_is_exact() {
        let m = Matrix::from_row_major(
            2,
            3,
            &[
                0.1 + 0.2,
                -1.0 / 3.0,
                1e-300,
                std::f64::consts::E,
                0.0,
                -0.0,
            ],
        )
        .unwrap();
        let back = parse_dense_csv(&render_dense_csv(&m)).unwrap();
        for i in 0..2 {
            for j in 0..3 {
                assert_eq!(back.get(i, j).to_bits(), m.get(i, j).to_bits());
            }
        }
    }

    #[test]
    fn coo_parses_sums_and_rejects() {
        let m = parse_coo("2 2 1\n1 1 5\n").unwrap();
        assert_eq!(m.to_row_major(), vec![5.0, 0.0, 0.0, 0.0]);
        let dup = parse_coo("2 2 2\n1 1 2\n1 1 3\n").unwrap();
        assert_eq!(dup.get(0, 0), 5.0);
        assert!(matches!(
            parse_coo("2 2 1\n3 1 5\n"),
            Err(DataError::CooOutOfRange {
                line: 2,
                row: 3,
                ..
            })
        ));
        assert!(matches!(
            parse_coo("2 2 2\n1 1 5\n"),
            Err(DataError::CooCount {
                expected: 2,
                found: 1
            })
        ));
        assert!(matches!(
            parse_coo("2 2\n"),
            Err(DataError::CooHeader { .. })
        ));
        assert!(matches!(
            parse_coo("2 2 1\n1 1\n"),
            Err(DataError::CooEntry { line: 2, .. })
        ));
        assert!(matches!(
            parse_coo("2 2 1\n0 1 5\n"),
            Err(DataError::CooOutOfRange {
                line: 2,
                row: 0,
                ..
            })
        ));
    }

    #[test]
    fn tfidf_zero_rules() {
        // Term 0 present everywhere -> zero row; term 1 absent -> stays zero.
        let x =
            DataMatrix::new(Matrix::from_row_major(3, 2, &[1.0, 2.0, 0.0, 0.0, 3.0, 0.0]).unwrap());
        let w = tfidf(&x).unwrap();
        assert_eq!(w.matrix().get(0, 0), 0.0);
        assert_eq!(w.matrix().get(0, 1), 0.0);
        assert_eq!(w.matrix().get(1, 0), 0.0);
        let expected = 3.0 * (2.0_f64).ln();
        assert!((w.matrix().get(2, 0) - expected).abs() <= 1e-15);
        assert_eq!(w.matrix().get(2, 1), 0.0);
    }

    #[test]
    fn tfidf_single_document_all_zero() {
        let x = DataMatrix::new(Matrix::from_row_major(2, 1, &[4.0, 0.0]).unwrap());
        let w = tfidf(&x).unwrap();
        assert_eq!(w.matrix().to_row_major(), vec![0.0, 0.0]);
    }

    #[test]
    fn tfidf_rejects_negative_counts() {
        let x = DataMatrix::new(Matrix::from_row_major(1, 2, &[1.0, -2.0]).unwrap());
        assert!(matches!(
            tfidf(&x),
            Err(DataError::NegativeEntry { row: 0, col: 1, .. })
        ));
    }

    #[test]
    fn normalize_columns_hand_case_and_flag() {
        let x = DataMatrix::new(Matrix::from_row_major(2, 1, &[3.0, 4.0]).unwrap());
        let nx = normalize_columns(&x).unwrap();
        assert!(nx.is_normalized());
        assert!((nx.matrix().get(0, 0) - 0.6).abs() <= 1e-15);
        assert!((nx.matrix().get(1, 0) - 0.8).abs() <= 1e-15);
        let again = normalize_columns(&nx).unwrap();
        let diff = again.matrix().sub(nx.matrix()).unwrap();
        assert!(diff.fro_norm() <= 1e-15);
    }

    #[test]
    fn normalize_columns_rejects_zero_column() {
        let x = DataMatrix::new(Matrix::from_row_major(2, 2, &[1.0, 0.0, 1.0, 0.0]).unwrap());
        assert!(matches!(
            normalize_columns(&x),
            Err(DataError::ZeroColumn { col: 1 })
        ));
    }
}
