//! Exact dense linear algebra over ℚ(i).

mod bareiss;
mod eigen;
mod inertia;
mod matrix;

pub use bareiss::{inverse, kernel, rank, rank_kernel, rref, solve_linear};
pub use eigen::{characteristic_polynomial, eval_poly, split_eigen, split_roots, EigenPair, EigenSplit};
pub use inertia::{hermitian_inertia, Inertia};
pub use matrix::{axpy, dot, is_zero_vec, unit_vector, ExactMatrix, Vector};

use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("expected a square matrix, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is not Hermitian")]
    NotHermitian,
    #[error("characteristic polynomial does not split over Q(i): factor of degree {remaining_degree} has no root")]
    NonSplit { remaining_degree: usize },
    #[error("constant term norm has {norm_bits} bits, too large for divisor search")]
    RootSearchTooLarge { norm_bits: u64 },
}
