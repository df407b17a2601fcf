use serde::Serialize;

use super::LieError;
use crate::linalg::{is_zero_vec, kernel, rank, rref, unit_vector, ExactMatrix, Vector};
use crate::scalar::GaussianRational;
use num_traits::Zero;

/// Complex subspace of `ℚ(i)^n` stored as a reduced row-echelon basis, so
/// two subspaces are equal exactly when their representations are.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Subspace {
    ambient: usize,
    basis: ExactMatrix,
    #[serde(skip)]
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn new(ambient: usize, vectors: &[Vector]) -> Result<Self, LieError> {
        for v in vectors {
            if v.len() != ambient {
                return Err(LieError::LengthMismatch { expected: ambient, got: v.len() });
            }
        }
        Ok(Self::from_matrix(ExactMatrix::from_rows_with_cols(vectors.to_vec(), ambient)))
    }

    fn from_matrix(m: ExactMatrix) -> Self {
        let ambient = m.cols();
        let (basis, pivots) = rref(&m);
        Self { ambient, basis, pivots }
    }

    pub fn zero(ambient: usize) -> Self {
        Self::from_matrix(ExactMatrix::zeros(0, ambient))
    }

    pub fn full(ambient: usize) -> Self {
        Self::from_matrix(ExactMatrix::identity(ambient))
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn matrix(&self) -> &ExactMatrix {
        &self.basis
    }

    pub fn basis(&self) -> Vec<Vector> {
        self.basis.to_rows()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn check_same(&self, other: &Self) -> Result<(), LieError> {
        if self.ambient == other.ambient {
            Ok(())
        } else {
            Err(LieError::AmbientMismatch { left: self.ambient, right: other.ambient })
        }
    }

    /// Coordinates of `v` in the echelon basis, if `v` lies in the span.
    pub fn coordinates(&self, v: &[GaussianRational]) -> Option<Vector> {
        assert_eq!(v.len(), self.ambient, "vector length must match ambient dimension");
        let c: Vector = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut r = v.to_vec();
        for (i, ci) in c.iter().enumerate() {
            if ci.is_zero() {
                continue;
            }
            for (rj, bj) in r.iter_mut().zip(self.basis.row(i)) {
                if !bj.is_zero() {
                    *rj -= &(ci * bj);
                }
            }
        }
        is_zero_vec(&r).then_some(c)
    }

    pub fn contains(&self, v: &[GaussianRational]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn contains_subspace(&self, other: &Self) -> bool {
        other.ambient == self.ambient && other.basis.to_rows().iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Self) -> Result<Self, LieError> {
        self.check_same(other)?;
        Ok(Self::from_matrix(self.basis.vstack(&other.basis)))
    }

    pub fn intersect(&self, other: &Self) -> Result<Self, LieError> {
        self.check_same(other)?;
        // x·A = y·B  ⇔  (x, −y) ∈ ker [A; B]ᵀ
        let stacked = self.basis.vstack(&other.basis).transpose();
        let d1 = self.dim();
        let vecs: Vec<Vector> = kernel(&stacked)
            .into_iter()
            .map(|k| {
                let x = ExactMatrix::from_rows_with_cols(vec![k[..d1].to_vec()], d1);
                x.mul(&self.basis).row_vec(0)
            })
            .collect();
        Ok(Self::from_matrix(ExactMatrix::from_rows_with_cols(vecs, self.ambient)))
    }

    /// Coordinatewise conjugate, meaningful because the ambient basis spans
    /// the real form.
    pub fn conj(&self) -> Self {
        Self::from_matrix(self.basis.conj())
    }

    pub fn is_conj_stable(&self) -> bool {
        *self == self.conj()
    }

    /// Covectors vanishing on the subspace, as an RREF basis.
    pub fn annihilator(&self) -> Vec<Vector> {
        kernel(&self.basis)
    }

    /// Vectors completing the basis to all of `ℚ(i)^n`: first from
    /// `preferred` in order, then standard basis vectors.
    pub fn extend_to_basis(&self, preferred: &[Vector]) -> Vec<Vector> {
        let mut current = self.basis.clone();
        let mut r = self.dim();
        let mut out = Vec::new();
        let candidates = preferred.iter().cloned().chain((0..self.ambient).map(|i| unit_vector(self.ambient, i)));
        for v in candidates {
            if r == self.ambient {
                break;
            }
            let next = current.vstack(&ExactMatrix::from_rows_with_cols(vec![v.clone()], self.ambient));
            let nr = rank(&next);
            if nr > r {
                current = next;
                r = nr;
                out.push(v);
            }
        }
        out
    }
}

impl std::fmt::Debug for Subspace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Subspace").field("ambient", &self.ambient).field("basis", &self.basis).finish()
    }
}
