//! Exact cohomology of left-invariant involutive structures on compact Lie
//! groups.
//!
//! Everything is computed over the Gaussian rationals ℚ(i). A structure is
//! a complex subalgebra `𝔥` of the complexification of a real Lie algebra
//! given by rational structure constants.

pub mod classify;
pub mod cohomology;
pub mod decompose;
pub mod lie;
pub mod linalg;
pub mod roots;
pub mod scalar;
pub mod torus;

pub use linalg::{ExactMatrix, Inertia, Vector};
pub use scalar::{GaussianRational, Scalar, ScalarParseError};
