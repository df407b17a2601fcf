use rayon::prelude::*;
use serde::Serialize;

use super::module::GModule;
use super::subsets::{insert_sorted, Subsets};
use super::table::{CohomologyTable, Degree, Representatives};
use crate::lie::ComplexLieAlgebra;
use crate::linalg::{kernel, rank, rref, ExactMatrix, Vector};
use crate::scalar::GaussianRational;
use num_traits::Zero;

fn sign(s: usize) -> GaussianRational {
    GaussianRational::from_int(if s % 2 == 0 { 1 } else { -1 })
}

/// Matrix of `d` from cochains supported on the `inputs` monomials to the
/// `outputs` components, over the basis `w_K ⊗ m_a` (index `K · dim M + a`).
///
/// `(du)(e_{j_0},…,e_{j_k}) = Σ_s (−1)^s ρ(e_{j_s}) u(…ê_{j_s}…)
///                          + Σ_{s<t} (−1)^{s+t} u([e_{j_s},e_{j_t}], …ê_{j_s}…ê_{j_t}…)`.
pub fn ce_differential_on(g: &ComplexLieAlgebra, m: &GModule, inputs: &Subsets, outputs: &Subsets) -> ExactMatrix {
    let md = m.dim();
    let ncols = inputs.len() * md;
    let rows: Vec<Vec<Vector>> = outputs
        .list
        .par_iter()
        .map(|j| {
            let mut block = vec![vec![GaussianRational::zero(); ncols]; md];
            for s in 0..j.len() {
                let mut k = j.clone();
                let js = k.remove(s);
                let Some(col) = inputs.position(&k) else { continue };
                let rho = m.action(js);
                let sg = sign(s);
                for (b, row) in block.iter_mut().enumerate() {
                    for a in 0..md {
                        let x = &rho[(b, a)];
                        if !x.is_zero() {
                            row[col * md + a] += &(&sg * x);
                        }
                    }
                }
            }
            for s in 0..j.len() {
                for t in s + 1..j.len() {
                    let br = g.bracket_basis(j[s], j[t]);
                    let rest: Vec<usize> =
                        j.iter().enumerate().filter(|&(i, _)| i != s && i != t).map(|(_, &x)| x).collect();
                    for (l, c) in br.iter().enumerate() {
                        if c.is_zero() {
                            continue;
                        }
                        let Some((k, ins)) = insert_sorted(&rest, l) else { continue };
                        let Some(col) = inputs.position(&k) else { continue };
                        let coef = &(&sign(s + t) * c) * &GaussianRational::from_int(ins);
                        for (b, row) in block.iter_mut().enumerate() {
                            row[col * md + b] += &coef;
                        }
                    }
                }
            }
            block
        })
        .collect();
    ExactMatrix::from_rows_with_cols(rows.into_iter().flatten().collect(), ncols)
}

/// Matrix of `d: C^k(𝔤; M) → C^{k+1}(𝔤; M)`.
pub fn ce_differential(g: &ComplexLieAlgebra, m: &GModule, k: usize) -> ExactMatrix {
    let n = g.dim();
    ce_differential_on(g, m, &Subsets::new(n, k), &Subsets::new(n, k + 1))
}

/// Basis labels `w_{i1}∧…∧w_{ik}` (times `m_a` when `dim M > 1`).
pub fn cochain_labels(names: &[String], subsets: &Subsets, module_dim: usize) -> Vec<String> {
    let mut out = Vec::new();
    for s in &subsets.list {
        let w = if s.is_empty() {
            "1".to_string()
        } else {
            s.iter().map(|&i| format!("w_{}", names[i])).collect::<Vec<_>>().join("^")
        };
        for a in 0..module_dim {
            out.push(if module_dim == 1 { w.clone() } else { format!("{w}(x)m{a}") });
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CochainComplex {
    /// Basis labels of `C^k`.
    pub bases: Vec<Vec<String>>,
    /// `d_k: C^k → C^{k+1}`; the last one has zero rows.
    pub differentials: Vec<ExactMatrix>,
}

impl CochainComplex {
    pub fn dims(&self) -> Vec<usize> {
        self.bases.iter().map(Vec::len).collect()
    }

    /// `d_{k+1} ∘ d_k = 0` for every `k`.
    pub fn is_complex(&self) -> bool {
        self.differentials.windows(2).all(|w| w[1].mul(&w[0]).is_zero())
    }
}

pub fn ce_complex(g: &ComplexLieAlgebra, m: &GModule) -> CochainComplex {
    let n = g.dim();
    let subsets: Vec<Subsets> = (0..=n + 1).map(|k| Subsets::new(n, k)).collect();
    let differentials = (0..=n).into_par_iter().map(|k| ce_differential_on(g, m, &subsets[k], &subsets[k + 1])).collect();
    let bases = (0..=n).map(|k| cochain_labels(g.names(), &subsets[k], m.dim())).collect();
    CochainComplex { bases, differentials }
}

/// Kernel vectors reduced against the image: zero at the image's pivot
/// columns, then brought to RREF. The result is canonical for the pair of
/// subspaces.
pub fn quotient_representatives(cycles: &[Vector], boundaries: &[Vector], n: usize) -> Vec<Vector> {
    let (img, pivots) = rref(&ExactMatrix::from_rows_with_cols(boundaries.to_vec(), n));
    let reduced: Vec<Vector> = cycles
        .iter()
        .map(|v| {
            let mut v = v.clone();
            for (i, &p) in pivots.iter().enumerate() {
                let c = v[p].clone();
                if !c.is_zero() {
                    crate::linalg::axpy(&mut v, &-c, img.row(i));
                }
            }
            v
        })
        .collect();
    rref(&ExactMatrix::from_rows_with_cols(reduced, n)).0.to_rows()
}

/// Cohomology of a complex restricted to subcomplexes spanned by the columns
/// of `spaces[k]` (`None` = all of `C^k`).
pub(crate) fn subcomplex_cohomology(
    complex: &CochainComplex,
    spaces: &[Option<ExactMatrix>],
    degree: impl Fn(usize) -> Degree,
    representatives: bool,
) -> CohomologyTable {
    let top = complex.bases.len();
    let restricted: Vec<ExactMatrix> = (0..top)
        .into_par_iter()
        .map(|k| match &spaces[k] {
            Some(p) => complex.differentials[k].mul(p),
            None => complex.differentials[k].clone(),
        })
        .collect();
    let ranks: Vec<usize> = restricted.par_iter().map(rank).collect();
    let mut table = CohomologyTable::default();
    for k in 0..top {
        let dim_k = spaces[k].as_ref().map_or(complex.bases[k].len(), ExactMatrix::cols);
        let incoming = if k == 0 { 0 } else { ranks[k - 1] };
        let h = dim_k - ranks[k] - incoming;
        table.dims.insert(degree(k), h);
        if representatives {
            let lift = |x: Vector| spaces[k].as_ref().map_or(x.clone(), |p| p.mul_vec(&x));
            let cycles: Vec<Vector> = kernel(&restricted[k]).into_iter().map(lift).collect();
            let boundaries: Vec<Vector> = if k == 0 { Vec::new() } else { restricted[k - 1].transpose().to_rows() };
            let reps = quotient_representatives(&cycles, &boundaries, complex.bases[k].len());
            debug_assert_eq!(reps.len(), h);
            table.representatives.insert(degree(k), Representatives { basis: complex.bases[k].clone(), vectors: reps });
        }
    }
    table
}

pub fn ce_cohomology(g: &ComplexLieAlgebra, m: &GModule, representatives: bool) -> CohomologyTable {
    let c = ce_complex(g, m);
    let spaces = vec![None; c.bases.len()];
    subcomplex_cohomology(&c, &spaces, Degree::Single, representatives)
}
