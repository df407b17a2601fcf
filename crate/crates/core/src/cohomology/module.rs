use serde::Serialize;

use super::subsets::{replace_sorted, Subsets};
use super::CohomologyError;
use crate::lie::{ComplexLieAlgebra, Subspace};
use crate::linalg::{ExactMatrix, Vector};
use crate::scalar::GaussianRational;
use num_traits::Zero;

/// Finite-dimensional module: one action matrix per basis element of the
/// acting algebra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GModule {
    dim: usize,
    actions: Vec<ExactMatrix>,
}

impl GModule {
    /// Checks sizes and the homomorphism property against `g`.
    pub fn new(g: &ComplexLieAlgebra, dim: usize, actions: Vec<ExactMatrix>) -> Result<Self, CohomologyError> {
        if actions.len() != g.dim() || actions.iter().any(|a| a.rows() != dim || a.cols() != dim) {
            return Err(CohomologyError::ModuleShape { algebra_dim: g.dim(), module_dim: dim });
        }
        let m = Self { dim, actions };
        m.check_homomorphism(g).map_err(|(a, b)| CohomologyError::NotAModule(a, b))?;
        Ok(m)
    }

    fn unchecked(dim: usize, actions: Vec<ExactMatrix>) -> Self {
        Self { dim, actions }
    }

    pub fn trivial(g: &ComplexLieAlgebra) -> Self {
        Self::unchecked(1, vec![ExactMatrix::zeros(1, 1); g.dim()])
    }

    pub fn adjoint(g: &ComplexLieAlgebra) -> Self {
        Self::unchecked(g.dim(), (0..g.dim()).map(|j| g.ad_basis(j)).collect())
    }

    /// One-dimensional module with the given eigenvalue for each basis vector.
    pub fn character(g: &ComplexLieAlgebra, weights: &[GaussianRational]) -> Result<Self, CohomologyError> {
        let actions = weights.iter().map(|w| ExactMatrix::from_diagonal(std::slice::from_ref(w))).collect();
        Self::new(g, 1, actions)
    }

    /// `𝔤/𝔲` under `ad` of `𝔲`. The acting algebra is `g.restrict(u)` and
    /// the quotient basis is `u.extend_to_basis(&[])`.
    pub fn adjoint_quotient(g: &ComplexLieAlgebra, u: &Subspace) -> Result<(ComplexLieAlgebra, Self), CohomologyError> {
        let acting = g.restrict(u)?;
        let complement = u.extend_to_basis(&[]);
        let mut all = complement.clone();
        all.extend(u.basis());
        let change = ExactMatrix::from_columns(&all, g.dim());
        let inv = crate::linalg::inverse(&change).expect("adapted basis is a basis");
        let c = complement.len();
        let actions = u
            .basis()
            .iter()
            .map(|y| {
                let cols: Vec<Vector> =
                    complement.iter().map(|x| inv.mul_vec(&g.bracket(y, x))[..c].to_vec()).collect();
                ExactMatrix::from_columns(&cols, c)
            })
            .collect();
        Ok((acting, Self::unchecked(c, actions)))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn actions(&self) -> &[ExactMatrix] {
        &self.actions
    }

    pub fn action(&self, j: usize) -> &ExactMatrix {
        &self.actions[j]
    }

    /// Action of a general element `Σ v_j e_j`.
    pub fn action_of(&self, v: &[GaussianRational]) -> ExactMatrix {
        let mut out = ExactMatrix::zeros(self.dim, self.dim);
        for (c, a) in v.iter().zip(&self.actions) {
            if !c.is_zero() {
                out = out.add(&a.scale(c));
            }
        }
        out
    }

    /// `ρ([e_a, e_b]) = [ρ(e_a), ρ(e_b)]`; otherwise the first failing pair.
    pub fn check_homomorphism(&self, g: &ComplexLieAlgebra) -> Result<(), (usize, usize)> {
        for a in 0..g.dim() {
            for b in a + 1..g.dim() {
                let lhs = self.action_of(g.bracket_basis(a, b));
                if lhs != self.actions[a].commutator(&self.actions[b]) {
                    return Err((a, b));
                }
            }
        }
        Ok(())
    }

    /// Contragredient module, `X ↦ −ρ(X)ᵀ`.
    pub fn dual(&self) -> Self {
        let m1 = GaussianRational::from_int(-1);
        Self::unchecked(self.dim, self.actions.iter().map(|a| a.transpose().scale(&m1)).collect())
    }

    /// `Λ^p` with the derivation action, on the lexicographic basis of
    /// `p`-subsets.
    pub fn exterior_power(&self, p: usize) -> Self {
        let subsets = Subsets::new(self.dim, p);
        let actions = self.actions.iter().map(|a| exterior_derivation(a, &subsets)).collect();
        Self::unchecked(subsets.len(), actions)
    }

    /// `V ⊗ W` with index `i · dim W + j`.
    pub fn tensor(&self, other: &Self) -> Self {
        let id_l = ExactMatrix::identity(self.dim);
        let id_r = ExactMatrix::identity(other.dim);
        let actions = self
            .actions
            .iter()
            .zip(&other.actions)
            .map(|(a, b)| kron(a, &id_r).add(&kron(&id_l, b)))
            .collect();
        Self::unchecked(self.dim * other.dim, actions)
    }

    /// Action matrices in a new basis of the acting algebra.
    pub fn rebase(&self, basis: &[Vector]) -> Self {
        Self::unchecked(self.dim, basis.iter().map(|v| self.action_of(v)).collect())
    }
}

/// Derivation extension of `a` to `Λ^p`, basis given by `subsets`.
pub fn exterior_derivation(a: &ExactMatrix, subsets: &Subsets) -> ExactMatrix {
    let n = subsets.len();
    let mut out = ExactMatrix::zeros(n, n);
    for (col, k) in subsets.list.iter().enumerate() {
        for (i, &ki) in k.iter().enumerate() {
            for j in 0..a.rows() {
                let c = &a[(j, ki)];
                if c.is_zero() {
                    continue;
                }
                let Some((k2, sign)) = replace_sorted(k, i, j) else { continue };
                let row = subsets.position(&k2).expect("subset of the same size");
                let term = if sign > 0 { c.clone() } else { -c };
                out[(row, col)] += &term;
            }
        }
    }
    out
}

pub fn kron(a: &ExactMatrix, b: &ExactMatrix) -> ExactMatrix {
    let mut out = ExactMatrix::zeros(a.rows() * b.rows(), a.cols() * b.cols());
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            let x = &a[(i, j)];
            if x.is_zero() {
                continue;
            }
            for k in 0..b.rows() {
                for l in 0..b.cols() {
                    let y = &b[(k, l)];
                    if !y.is_zero() {
                        out[(i * b.rows() + k, j * b.cols() + l)] = x * y;
                    }
                }
            }
        }
    }
    out
}
