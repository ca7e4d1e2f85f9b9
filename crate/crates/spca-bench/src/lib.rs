//! Benchmark fixtures: deterministic problem instances shared by the
//! criterion benches so runs are comparable across machines and commits.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use spca_core::{
    gen_two_wedges, normalize_columns, project_to_sphere_columns, ComponentMatrix, DataMatrix,
    DirectionMatrix, Matrix, SyntheticSpec,
};

/// Fixed seed so every bench sees the same instances.
pub const BENCH_SEED: u64 = 0xBE7C;

/// A dense Gaussian matrix with a fixed seed.
pub fn gaussian(rows: usize, cols: usize) -> Matrix {
    let mut rng = ChaCha8Rng::seed_from_u64(BENCH_SEED);
    Matrix::gaussian(rows, cols, &mut rng).expect("nonempty")
}

/// The 3 x 200 two-wedge benchmark dataset with unit-norm columns.
pub fn wedge_normalized() -> DataMatrix {
    let dataset = gen_two_wedges(&SyntheticSpec::default());
    normalize_columns(&dataset.x).expect("no zero columns")
}

/// Random orthonormal directions of the given shape.
pub fn directions(rows: usize, rank: usize) -> DirectionMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(BENCH_SEED ^ 1);
    DirectionMatrix::new(
        Matrix::gaussian(rows, rank, &mut rng)
            .expect("nonempty")
            .orthonormalized()
            .expect("full rank"),
    )
    .expect("orthonormal")
}

/// Random unit-norm component columns of the given shape.
pub fn components(rank: usize, cols: usize) -> ComponentMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(BENCH_SEED ^ 2);
    project_to_sphere_columns(&Matrix::gaussian(rank, cols, &mut rng).expect("nonempty"))
        .expect("no zero columns")
}
