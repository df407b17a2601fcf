//! Relative cohomology `H(𝔤, 𝔲; M)` on `𝔲`-invariant cochains of `𝔤/𝔲`.

use rayon::prelude::*;

use super::complex::{ce_differential_on, cochain_labels, subcomplex_cohomology, CochainComplex};
use super::module::{exterior_derivation, kron, GModule};
use super::subsets::Subsets;
use super::table::{CohomologyTable, Degree};
use super::CohomologyError;
use crate::lie::{is_subalgebra, ComplexLieAlgebra, Subspace};
use crate::linalg::{kernel, ExactMatrix, Vector};
use crate::scalar::GaussianRational;

/// Cochains are `Λ^k(𝔤/𝔲)^* ⊗ M` on a fixed complement of `𝔲`; the
/// invariance under the induced `𝔲`-action is imposed as a linear
/// condition, and the CE differential preserves the invariant subcomplex.
pub fn relative_ce_cohomology(
    g: &ComplexLieAlgebra,
    u: &Subspace,
    m: &GModule,
    representatives: bool,
) -> Result<CohomologyTable, CohomologyError> {
    if u.ambient_dim() != g.dim() {
        return Err(CohomologyError::AmbientMismatch { algebra: g.dim(), subspace: u.ambient_dim() });
    }
    if m.actions().len() != g.dim() {
        return Err(CohomologyError::ModuleShape { algebra_dim: g.dim(), module_dim: m.dim() });
    }
    if let Err((a, b)) = is_subalgebra(g, u) {
        return Err(CohomologyError::NotSubalgebra(a, b));
    }
    let complement = u.extend_to_basis(&[]);
    let c = complement.len();
    let mut basis: Vec<Vector> = complement.clone();
    basis.extend(u.basis());
    let names: Vec<String> = basis.iter().map(|v| g.format_vector(v)).collect();
    let gp = g.rebase(&basis, names.clone())?;
    let mp = m.rebase(&basis);
    let md = m.dim();

    let subsets: Vec<Subsets> = (0..=c + 1).map(|k| Subsets::new(c, k)).collect();
    let differentials: Vec<ExactMatrix> =
        (0..=c).into_par_iter().map(|k| ce_differential_on(&gp, &mp, &subsets[k], &subsets[k + 1])).collect();
    let bases = (0..=c).map(|k| cochain_labels(&names, &subsets[k], md)).collect();
    let complex = CochainComplex { bases, differentials };

    // Quotient action of each u-basis element on 𝔤/𝔲, then on cochains.
    let quotient: Vec<ExactMatrix> = (c..g.dim())
        .map(|y| {
            let mut a = ExactMatrix::zeros(c, c);
            for i in 0..c {
                let br = gp.bracket_basis(y, i);
                for l in 0..c {
                    a[(l, i)] = br[l].clone();
                }
            }
            a.transpose().scale(&GaussianRational::from_int(-1))
        })
        .collect();
    let spaces: Vec<Option<ExactMatrix>> = (0..=c)
        .into_par_iter()
        .map(|k| {
            if quotient.is_empty() {
                return None;
            }
            let id_m = ExactMatrix::identity(md);
            let dim_k = subsets[k].len() * md;
            let mut stacked = ExactMatrix::zeros(0, dim_k);
            for (q, y) in quotient.iter().zip(c..g.dim()) {
                let on_forms = exterior_derivation(q, &subsets[k]);
                let theta = kron(&on_forms, &id_m).add(&kron(&ExactMatrix::identity(subsets[k].len()), mp.action(y)));
                stacked = stacked.vstack(&theta);
            }
            Some(ExactMatrix::from_columns(&kernel(&stacked), dim_k))
        })
        .collect();
    let mut table = subcomplex_cohomology(&complex, &spaces, Degree::Single, representatives);
    if c > 0 {
        table.notes.push(format!("complement of u: {}", names[..c].join(", ")));
    }
    Ok(table)
}
