use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use super::format::format_combination;
use super::subspace::Subspace;
use super::LieError;
use crate::linalg::{axpy, inverse, ExactMatrix, Vector};
use crate::scalar::GaussianRational;

/// Sparse structure constants: `[e_j, e_k] = Σ c_{jk}^l e_l`.
pub type Bracket = Vec<(usize, BigRational)>;

/// Real Lie algebra given by rational structure constants on a named basis.
/// Only pairs `j < k` are stored; antisymmetry is structural.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    name: String,
    basis: Vec<String>,
    constants: BTreeMap<(usize, usize), Bracket>,
    aliases: Vec<(String, Vector)>,
}

impl LieAlgebra {
    pub fn new(
        name: impl Into<String>,
        basis: Vec<String>,
        brackets: impl IntoIterator<Item = ((usize, usize), Bracket)>,
    ) -> Result<Self, LieError> {
        let n = basis.len();
        for (i, b) in basis.iter().enumerate() {
            if basis[..i].contains(b) {
                return Err(LieError::DuplicateName(b.clone()));
            }
        }
        let mut constants = BTreeMap::new();
        for ((j, k), terms) in brackets {
            if j >= k || k >= n {
                return Err(LieError::InvalidPair { j, k });
            }
            let mut dense = vec![BigRational::zero(); n];
            for (l, c) in terms {
                if l >= n {
                    return Err(LieError::InvalidPair { j, k });
                }
                dense[l] += c;
            }
            let sparse: Bracket = dense.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
            if constants.insert((j, k), sparse).is_some() {
                return Err(LieError::DuplicatePair { j, k });
            }
        }
        constants.retain(|_, v: &mut Bracket| !v.is_empty());
        Ok(Self { name: name.into(), basis, constants, aliases: Vec::new() })
    }

    pub fn abelian(name: impl Into<String>, basis: Vec<String>) -> Result<Self, LieError> {
        Self::new(name, basis, std::iter::empty())
    }

    /// Register a named vector usable wherever basis names are accepted.
    pub fn with_alias(mut self, name: impl Into<String>, v: Vector) -> Result<Self, LieError> {
        let name = name.into();
        if v.len() != self.dim() {
            return Err(LieError::LengthMismatch { expected: self.dim(), got: v.len() });
        }
        if self.resolve(&name).is_some() {
            return Err(LieError::DuplicateName(name));
        }
        self.aliases.push((name, v));
        Ok(self)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis
    }

    pub fn aliases(&self) -> &[(String, Vector)] {
        &self.aliases
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.basis.iter().position(|b| b == name)
    }

    /// Basis element or alias.
    pub fn resolve(&self, name: &str) -> Option<Vector> {
        if let Some(i) = self.index_of(name) {
            return Some(crate::linalg::unit_vector(self.dim(), i));
        }
        self.aliases.iter().find(|(a, _)| a == name).map(|(_, v)| v.clone())
    }

    /// Stored constants for `j < k`.
    pub fn stored_brackets(&self) -> impl Iterator<Item = (&(usize, usize), &Bracket)> {
        self.constants.iter()
    }

    /// `[e_j, e_k]` as a dense real vector.
    pub fn bracket_basis(&self, j: usize, k: usize) -> Vec<BigRational> {
        let mut out = vec![BigRational::zero(); self.dim()];
        let (key, sign) = match j.cmp(&k) {
            std::cmp::Ordering::Less => ((j, k), false),
            std::cmp::Ordering::Greater => ((k, j), true),
            std::cmp::Ordering::Equal => return out,
        };
        if let Some(terms) = self.constants.get(&key) {
            for (l, c) in terms {
                out[*l] = if sign { -c.clone() } else { c.clone() };
            }
        }
        out
    }

    pub fn bracket(&self, v: &[GaussianRational], w: &[GaussianRational]) -> Result<Vector, LieError> {
        let n = self.dim();
        for x in [v, w] {
            if x.len() != n {
                return Err(LieError::LengthMismatch { expected: n, got: x.len() });
            }
        }
        let mut out = vec![GaussianRational::zero(); n];
        for (&(j, k), terms) in &self.constants {
            let c = &(&v[j] * &w[k]) - &(&v[k] * &w[j]);
            if c.is_zero() {
                continue;
            }
            for (l, s) in terms {
                out[*l] += &(&c * &GaussianRational::from_real(s.clone()));
            }
        }
        Ok(out)
    }

    pub fn complexify(&self) -> ComplexLieAlgebra {
        let n = self.dim();
        let table = (0..n)
            .map(|j| {
                (0..n)
                    .map(|k| self.bracket_basis(j, k).into_iter().map(GaussianRational::from_real).collect())
                    .collect()
            })
            .collect();
        ComplexLieAlgebra { names: self.basis.clone(), table }
    }

    pub fn format_vector(&self, v: &[GaussianRational]) -> String {
        format_combination(&self.basis, v)
    }
}

/// First basis triple `j < k < l` violating Jacobi, with the nonzero sum.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JacobiWitness {
    pub triple: (usize, usize, usize),
    pub sum: Vector,
}

pub fn validate_algebra(g: &LieAlgebra) -> Result<(), JacobiWitness> {
    g.complexify().jacobi_witness().map_or(Ok(()), Err)
}

/// Complex Lie algebra with dense ℚ(i) structure constants. Produced by
/// complexifying a real form, or by restricting to a subalgebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexLieAlgebra {
    names: Vec<String>,
    table: Vec<Vec<Vector>>,
}

impl ComplexLieAlgebra {
    /// `table[j][k] = [e_j, e_k]`; must be antisymmetric.
    pub fn from_table(names: Vec<String>, table: Vec<Vec<Vector>>) -> Result<Self, LieError> {
        let n = names.len();
        if table.len() != n || table.iter().any(|r| r.len() != n || r.iter().any(|v| v.len() != n)) {
            return Err(LieError::LengthMismatch { expected: n, got: table.len() });
        }
        for j in 0..n {
            for k in 0..=j {
                let neg: Vector = table[k][j].iter().map(|x| -x).collect();
                if table[j][k] != neg {
                    return Err(LieError::NotAntisymmetric { j, k });
                }
            }
        }
        Ok(Self { names, table })
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn bracket_basis(&self, j: usize, k: usize) -> &Vector {
        &self.table[j][k]
    }

    pub fn bracket(&self, v: &[GaussianRational], w: &[GaussianRational]) -> Vector {
        let n = self.dim();
        assert!(v.len() == n && w.len() == n, "vector length must match algebra dimension");
        let mut out = vec![GaussianRational::zero(); n];
        for j in 0..n {
            if v[j].is_zero() {
                continue;
            }
            for k in 0..n {
                if j == k || w[k].is_zero() {
                    continue;
                }
                axpy(&mut out, &(&v[j] * &w[k]), &self.table[j][k]);
            }
        }
        out
    }

    /// Matrix of `ad_v`; column `k` holds `[v, e_k]`.
    pub fn ad(&self, v: &[GaussianRational]) -> ExactMatrix {
        let n = self.dim();
        let cols: Vec<Vector> = (0..n)
            .map(|k| {
                let mut out = vec![GaussianRational::zero(); n];
                for (j, vj) in v.iter().enumerate() {
                    axpy(&mut out, vj, &self.table[j][k]);
                }
                out
            })
            .collect();
        ExactMatrix::from_columns(&cols, n)
    }

    pub fn ad_basis(&self, j: usize) -> ExactMatrix {
        ExactMatrix::from_columns(&self.table[j], self.dim())
    }

    pub fn is_abelian(&self) -> bool {
        self.table.iter().flatten().all(|v| crate::linalg::is_zero_vec(v))
    }

    pub fn jacobi_witness(&self) -> Option<JacobiWitness> {
        let n = self.dim();
        let e = |i| crate::linalg::unit_vector(n, i);
        for j in 0..n {
            for k in j + 1..n {
                for l in k + 1..n {
                    let a = self.bracket(&self.table[j][k], &e(l));
                    let b = self.bracket(&self.table[k][l], &e(j));
                    let c = self.bracket(&self.table[l][j], &e(k));
                    let sum: Vector = a.iter().zip(&b).zip(&c).map(|((x, y), z)| &(x + y) + z).collect();
                    if !crate::linalg::is_zero_vec(&sum) {
                        return Some(JacobiWitness { triple: (j, k, l), sum });
                    }
                }
            }
        }
        None
    }

    /// Express the algebra in a new basis (rows of an invertible matrix).
    pub fn rebase(&self, basis: &[Vector], names: Vec<String>) -> Result<Self, LieError> {
        let n = self.dim();
        let change = ExactMatrix::from_columns(basis, n);
        let inv = inverse(&change).ok_or(LieError::SingularBasis)?;
        let table = (0..n)
            .map(|a| (0..n).map(|b| inv.mul_vec(&self.bracket(&basis[a], &basis[b]))).collect())
            .collect();
        Ok(Self { names, table })
    }

    /// The subalgebra `s` as a Lie algebra in its echelon basis.
    pub fn restrict(&self, s: &Subspace) -> Result<Self, LieError> {
        let basis = s.basis();
        let mut table = vec![vec![Vec::new(); basis.len()]; basis.len()];
        for a in 0..basis.len() {
            for b in 0..basis.len() {
                let br = self.bracket(&basis[a], &basis[b]);
                table[a][b] = s.coordinates(&br).ok_or(LieError::NotClosed { a, b })?;
            }
        }
        let names = basis.iter().map(|v| format_combination(&self.names, v)).collect();
        Ok(Self { names, table })
    }

    /// `B(x, y) = tr(ad_x ad_y)` on the basis.
    pub fn killing_form(&self) -> ExactMatrix {
        let n = self.dim();
        let ads: Vec<ExactMatrix> = (0..n).map(|j| self.ad_basis(j)).collect();
        let mut b = ExactMatrix::zeros(n, n);
        for j in 0..n {
            for k in j..n {
                let t = ads[j].mul(&ads[k]).trace();
                b[(k, j)] = t.clone();
                b[(j, k)] = t;
            }
        }
        b
    }

    pub fn format_vector(&self, v: &[GaussianRational]) -> String {
        format_combination(&self.names, v)
    }
}

/// `Ok` when every bracket of basis vectors stays in `s`; otherwise the
/// first failing pair of basis indices.
pub fn is_subalgebra(g: &ComplexLieAlgebra, s: &Subspace) -> Result<(), (usize, usize)> {
    let basis = s.basis();
    for a in 0..basis.len() {
        for b in a + 1..basis.len() {
            if !s.contains(&g.bracket(&basis[a], &basis[b])) {
                return Err((a, b));
            }
        }
    }
    Ok(())
}

/// Smallest subalgebra containing the given vectors.
pub fn generate_subalgebra(g: &ComplexLieAlgebra, vectors: &[Vector]) -> Result<Subspace, LieError> {
    let mut s = Subspace::new(g.dim(), vectors)?;
    loop {
        let basis = s.basis();
        let mut extra = Vec::new();
        for a in 0..basis.len() {
            for b in a + 1..basis.len() {
                let br = g.bracket(&basis[a], &basis[b]);
                if !s.contains(&br) {
                    extra.push(br);
                }
            }
        }
        if extra.is_empty() {
            return Ok(s);
        }
        extra.extend(basis);
        s = Subspace::new(g.dim(), &extra)?;
    }
}
