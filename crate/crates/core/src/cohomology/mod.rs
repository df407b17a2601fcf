//! Chevalley–Eilenberg cohomology: absolute, relative and bigraded.

mod bigraded;
mod complex;
mod module;
mod relative;
mod subsets;
mod table;

use thiserror::Error;

use crate::lie::LieError;

pub use bigraded::{bigraded_cohomology, bigraded_complex, default_complement, BigradedComplex};
pub use complex::{
    ce_cohomology, ce_complex, ce_differential, ce_differential_on, cochain_labels, quotient_representatives,
    CochainComplex,
};
pub use module::{exterior_derivation, kron, GModule};
pub use relative::relative_ce_cohomology;
pub use subsets::{binomial, combinations, insert_sorted, replace_sorted, Subsets};
pub use table::{CohomologyTable, Degree, Representatives};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum CohomologyError {
    #[error("module has {module_dim}-dimensional actions but the algebra has dimension {algebra_dim}")]
    ModuleShape { algebra_dim: usize, module_dim: usize },
    #[error("not a module: rho([e{0},e{1}]) differs from [rho(e{0}),rho(e{1})]")]
    NotAModule(usize, usize),
    #[error("not a subalgebra: [b{0},b{1}] leaves the subspace")]
    NotSubalgebra(usize, usize),
    #[error("subspace lives in dimension {subspace}, algebra has dimension {algebra}")]
    AmbientMismatch { algebra: usize, subspace: usize },
    #[error("complement does not complete the subalgebra to a basis")]
    BadComplement,
    #[error("bidegree p={p} out of range 0..={max}")]
    DegreeOutOfRange { p: usize, max: usize },
    #[error(transparent)]
    Lie(#[from] LieError),
}
