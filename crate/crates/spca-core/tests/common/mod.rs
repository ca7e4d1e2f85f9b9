//! Shared oracles for the integration tests. Everything here is written
//! independently of the library kernels (triple-loop products, Jacobi
//! eigensolver, finite differences) so the tests compare two routes to the
//! same value.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use spca_core::model::{ComponentMatrix, DataMatrix, DirectionMatrix};
use spca_core::numkit::Matrix;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Triple-loop matrix product on row-major buffers.
pub fn naive_matmul(a: &[f64], b: &[f64], rows: usize, inner: usize, cols: usize) -> Vec<f64> {
    let mut out = vec![0.0; rows * cols];
    for i in 0..rows {
        for k in 0..inner {
            let aik = a[i * inner + k];
            for j in 0..cols {
                out[i * cols + j] += aik * b[k * cols + j];
            }
        }
    }
    out
}

/// Cyclic Jacobi eigensolver for a symmetric matrix (row-major, n x n).
/// Returns eigenvalues in nonincreasing order and the matching eigenvectors
/// as columns of a row-major n x n buffer.
pub fn jacobi_eigen_sym(a_in: &[f64], n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut a = a_in.to_vec();
    let mut v = vec![0.0; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }
    for _sweep in 0..100 {
        let mut off = 0.0;
        for p in 0..n {
            for q in (p + 1)..n {
                off += a[p * n + q] * a[p * n + q];
            }
        }
        if off.sqrt() < 1e-14 {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                if apq.abs() < 1e-300 {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let theta = (aqq - app) / (2.0 * apq);
                let t = if theta >= 0.0 {
                    1.0 / (theta + (1.0 + theta * theta).sqrt())
                } else {
                    1.0 / (theta - (1.0 + theta * theta).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                for i in 0..n {
                    let aip = a[i * n + p];
                    let aiq = a[i * n + q];
                    a[i * n + p] = c * aip - s * aiq;
                    a[i * n + q] = s * aip + c * aiq;
                }
                for j in 0..n {
                    let apj = a[p * n + j];
                    let aqj = a[q * n + j];
                    a[p * n + j] = c * apj - s * aqj;
                    a[q * n + j] = s * apj + c * aqj;
                }
                for i in 0..n {
                    let vip = v[i * n + p];
                    let viq = v[i * n + q];
                    v[i * n + p] = c * vip - s * viq;
                    v[i * n + q] = s * vip + c * viq;
                }
            }
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[j * n + j].partial_cmp(&a[i * n + i]).unwrap());
    let eigenvalues: Vec<f64> = order.iter().map(|&i| a[i * n + i]).collect();
    let mut vectors = vec![0.0; n * n];
    for (new_col, &old_col) in order.iter().enumerate() {
        for row in 0..n {
            vectors[row * n + new_col] = v[row * n + old_col];
        }
    }
    (eigenvalues, vectors)
}

pub fn random_matrix(rows: usize, cols: usize, rng: &mut ChaCha8Rng) -> Matrix {
    Matrix::gaussian(rows, cols, rng).unwrap()
}

/// Random point on the Stiefel manifold via QR of a Gaussian matrix.
pub fn random_directions(m: usize, r: usize, rng: &mut ChaCha8Rng) -> DirectionMatrix {
    DirectionMatrix::new(
        Matrix::gaussian(m, r, rng)
            .unwrap()
            .orthonormalized()
            .unwrap(),
    )
    .unwrap()
}

/// Random unit columns.
pub fn random_components(r: usize, n: usize, rng: &mut ChaCha8Rng) -> ComponentMatrix {
    spca_core::model::project_to_sphere_columns(&Matrix::gaussian(r, n, rng).unwrap()).unwrap()
}

/// Random unit vector of the given length.
pub fn random_unit_vector(len: usize, rng: &mut ChaCha8Rng) -> Vec<f64> {
    loop {
        let v: Vec<f64> = (0..len)
            .map(|_| rng.sample::<f64, _>(rand_distr::StandardNormal))
            .collect();
        let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm > 1e-8 {
            return v.iter().map(|x| x / norm).collect();
        }
    }
}

/// Random fully random feasible triple (X, U, V).
pub fn random_instance(
    m: usize,
    n: usize,
    r: usize,
    rng: &mut ChaCha8Rng,
) -> (DataMatrix, DirectionMatrix, ComponentMatrix) {
    let x = DataMatrix::new(random_matrix(m, n, rng));
    let u = random_directions(m, r, rng);
    let v = random_components(r, n, rng);
    (x, u, v)
}

/// Frobenius norm of the difference of two row-major buffers.
pub fn buffer_distance(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(&x, &y)| (x - y) * (x - y))
        .sum::<f64>()
        .sqrt()
}
