//! Real Lie algebras, their complexifications and complex subspaces.

mod algebra;
pub mod builtin;
mod format;
pub mod io;
mod subspace;

pub use algebra::{
    generate_subalgebra, is_subalgebra, validate_algebra, Bracket, ComplexLieAlgebra, JacobiWitness, LieAlgebra,
};
pub use format::{format_combination, parse_combination};
pub use subspace::Subspace;

use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum LieError {
    #[error("vector length {got} does not match dimension {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("subspaces live in different ambient spaces ({left} vs {right})")]
    AmbientMismatch { left: usize, right: usize },
    #[error("duplicate name {0:?}")]
    DuplicateName(String),
    #[error("unknown basis or alias name {0:?}")]
    UnknownName(String),
    #[error("unknown builtin algebra {0:?}")]
    UnknownBuiltin(String),
    #[error("bracket pair ({j}, {k}) must satisfy j < k < dim")]
    InvalidPair { j: usize, k: usize },
    #[error("bracket pair ({j}, {k}) given twice")]
    DuplicatePair { j: usize, k: usize },
    #[error("structure constant {value} on [{}, {}] is not real", pair[0], pair[1])]
    NonRealConstant { pair: [String; 2], value: String },
    #[error("bracket table is not antisymmetric at ({j}, {k})")]
    NotAntisymmetric { j: usize, k: usize },
    #[error("basis vectors are linearly dependent")]
    SingularBasis,
    #[error("subspace is not closed under the bracket: basis vectors {a} and {b}")]
    NotClosed { a: usize, b: usize },
    #[error("cannot parse linear combination {0:?}")]
    BadCombination(String),
    #[error("malformed JSON: {0}")]
    Json(String),
}

/// Vectors of `span{v1, v2, ...}`; each `v` is a combination of basis
/// names and aliases.
pub fn parse_span(g: &LieAlgebra, text: &str) -> Result<Vec<crate::linalg::Vector>, LieError> {
    let t = text.trim();
    let inner = t.strip_prefix("span").map(str::trim_start).unwrap_or(t);
    let inner = inner.strip_prefix('{').and_then(|s| s.strip_suffix('}')).unwrap_or(inner);
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    inner.split(',').map(|term| parse_combination(term, g.dim(), |n| g.resolve(n))).collect()
}
