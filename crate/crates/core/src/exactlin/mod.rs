//! Exact scalars and dense linear algebra: the substrate of every decision procedure.

pub mod matrix;
pub mod reduce;
pub mod scalar;
pub mod subspace;

pub use matrix::{axpy, is_zero_vec, kron_vec, unit_vec, zero_vec, Matrix};
pub use reduce::{inverse, kernel, rank, right_inverse, rref, solve_affine, AffineSolution, LinearSystem, RowReducer};
pub use scalar::{Field, Rational, Scalar};
pub use subspace::{QuotientMap, Subspace};
