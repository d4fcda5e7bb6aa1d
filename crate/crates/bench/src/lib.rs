//! Benchmark inputs shared by the criterion benches.

use coring_core::algebra::Algebra;
use coring_core::coring::Coring;
use coring_core::exactlin::{Field, Matrix, Scalar};

/// Corings of growing size for the decision procedures.
pub fn corings() -> Vec<Coring> {
    let q = Field::Rationals;
    vec![
        Coring::group_like(q, 3),
        Coring::comatrix(q, 2),
        Coring::trivial(&Algebra::matrix_algebra(q, 2)),
        Coring::dual_coalgebra(&Algebra::truncated_polynomials(q, 3)),
    ]
}

/// A dense `n x n` integer matrix with full rank.
pub fn dense_matrix(n: usize) -> Matrix {
    let mut m = Matrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            m[(i, j)] = Scalar::from_int(((i * 7 + j * 13) % 11) as i64 - 5 + if i == j { 20 } else { 0 });
        }
    }
    m
}
