//! Assembly of `H^{p,q}(G; 𝔥)` for elliptic `𝔥` from the Dolbeault
//! cohomology of the orbit space and the de Rham cohomology of the fibre.

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::classify::classify_structure;
use crate::cohomology::{
    bigraded_cohomology, ce_cohomology, relative_ce_cohomology, CohomologyError, CohomologyTable, Degree, GModule,
};
use crate::lie::{is_subalgebra, ComplexLieAlgebra, Subspace};
use crate::linalg::{kernel, rank, ExactMatrix, Vector};
use crate::scalar::GaussianRational;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum DecomposeError {
    #[error("structure is not elliptic (h + conj(h) is a proper subspace)")]
    NotElliptic,
    #[error("complement u is not an ideal of h: [{h}, {u}] leaves u")]
    NoIdealComplement { h: String, u: String },
    #[error("no ad-invariant product: Killing form is degenerate and none was supplied")]
    NoInvariantProduct,
    #[error("inner product must be {expected}x{expected}, got {rows}x{cols}")]
    GramShape { expected: usize, rows: usize, cols: usize },
    #[error("inner product is not symmetric")]
    GramNotSymmetric,
    #[error("inner product is not ad-invariant under basis element {0}")]
    GramNotInvariant(usize),
    #[error("inner product is degenerate on h ∩ conj(h)")]
    DegenerateProduct,
    #[error("not a subalgebra: [b{0},b{1}] leaves the subspace")]
    NotSubalgebra(usize, usize),
    #[error("{inner} is not contained in {outer}")]
    NotContained { inner: &'static str, outer: &'static str },
    #[error(transparent)]
    Cohomology(#[from] CohomologyError),
}

/// `Λ^p(amb/u)` under the adjoint action of `u`, optionally dualized.
/// Returns the acting algebra (`u` in its echelon basis) with the module.
pub fn adjoint_quotient_module(
    amb: &ComplexLieAlgebra,
    u: &Subspace,
    p: usize,
    dual: bool,
) -> Result<(ComplexLieAlgebra, GModule), DecomposeError> {
    if let Err((a, b)) = is_subalgebra(amb, u) {
        return Err(DecomposeError::NotSubalgebra(a, b));
    }
    let (acting, quotient) = GModule::adjoint_quotient(amb, u)?;
    let mut m = quotient.exterior_power(p);
    if dual {
        m = m.dual();
    }
    m.check_homomorphism(&acting).map_err(|(a, b)| CohomologyError::NotAModule(a, b))?;
    Ok((acting, m))
}

/// `dims(p, q) = Σ_{r+s=q} omega(p, r) · k(s)`.
pub fn kunneth_assemble(omega: &CohomologyTable, k: &CohomologyTable) -> CohomologyTable {
    let k_series = k.series();
    let mut out = CohomologyTable::default();
    let Some(max_p) = omega.max_p() else { return out };
    let max_r = omega.row(0).len().saturating_sub(1);
    let max_q = max_r + k_series.len().saturating_sub(1);
    for p in 0..=max_p {
        for q in 0..=max_q {
            let total = (0..=q.min(max_r))
                .filter(|&r| q - r < k_series.len())
                .map(|r| omega.bidim(p, r) * k_series[q - r])
                .sum();
            out.dims.insert(Degree::Bi(p, q), total);
        }
    }
    out
}

/// `H^q(Ω; 𝒪^p)` as `H^q(u_*, pair; Λ^p(k_alg/u_*)^*)`.
pub fn bott_dolbeault(
    k_alg: &ComplexLieAlgebra,
    u_star: &Subspace,
    pair: &Subspace,
    p: usize,
) -> Result<CohomologyTable, DecomposeError> {
    if !u_star.contains_subspace(pair) {
        return Err(DecomposeError::NotContained { inner: "pair subalgebra", outer: "u_*" });
    }
    let (acting, m) = adjoint_quotient_module(k_alg, u_star, p, true)?;
    let local = relative_in(u_star, pair)?;
    Ok(relative_ce_cohomology(&acting, &local, &m, false)?)
}

/// `inner ⊂ outer` re-expressed in the echelon basis of `outer`.
fn relative_in(outer: &Subspace, inner: &Subspace) -> Result<Subspace, DecomposeError> {
    let coords: Vec<Vector> = inner.basis().iter().filter_map(|v| outer.coordinates(v)).collect();
    Subspace::new(outer.dim(), &coords).map_err(|e| CohomologyError::from(e).into())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ProductSource {
    NegativeKilling,
    User,
    Identity,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AssemblyReport {
    pub product: ProductSource,
    /// `𝔨 = 𝔥 ∩ 𝔥̄`.
    pub k: Vec<String>,
    /// Ideal complement of `𝔨` in `𝔥`.
    pub u: Vec<String>,
    /// Realized as `𝔥` itself.
    pub u_star: Vec<String>,
    pub k_table: CohomologyTable,
    pub omega_dual: CohomologyTable,
    pub omega_nondual: CohomologyTable,
    pub dual: CohomologyTable,
    pub nondual: CohomologyTable,
    /// `Σ_p` of the dual assembly, per `q`.
    pub p_summed: Vec<usize>,
    pub bigraded: CohomologyTable,
    pub matches_bigraded: bool,
    /// Bidegrees where the dual and non-dual assemblies differ.
    pub variant_disagreements: Vec<(usize, usize)>,
    /// For one-dimensional `𝔤/𝔥`: whether `Σ_p H^{p,q} = H^q(K) + H^{q−1}(K)`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub summed_reading_holds: Option<bool>,
    /// For one-dimensional `𝔤/𝔥`: whether every `H^{p,q} = H^q(K) + H^{q−1}(K)`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub per_bidegree_reading_holds: Option<bool>,
    pub notes: Vec<String>,
}

fn is_ad_invariant(g: &ComplexLieAlgebra, b: &ExactMatrix) -> Result<(), usize> {
    for j in 0..g.dim() {
        let ad = g.ad_basis(j);
        if !ad.transpose().mul(b).add(&b.mul(&ad)).is_zero() {
            return Err(j);
        }
    }
    Ok(())
}

fn choose_product(
    g: &ComplexLieAlgebra,
    gram: Option<&ExactMatrix>,
) -> Result<(ProductSource, ExactMatrix), DecomposeError> {
    let n = g.dim();
    let killing = g.killing_form();
    if rank(&killing) == n {
        return Ok((ProductSource::NegativeKilling, killing.scale(&GaussianRational::from_int(-1))));
    }
    if let Some(b) = gram {
        if b.rows() != n || b.cols() != n {
            return Err(DecomposeError::GramShape { expected: n, rows: b.rows(), cols: b.cols() });
        }
        if b.transpose() != *b {
            return Err(DecomposeError::GramNotSymmetric);
        }
        is_ad_invariant(g, b).map_err(DecomposeError::GramNotInvariant)?;
        return Ok((ProductSource::User, b.clone()));
    }
    let id = ExactMatrix::identity(n);
    if is_ad_invariant(g, &id).is_ok() {
        return Ok((ProductSource::Identity, id));
    }
    Err(DecomposeError::NoInvariantProduct)
}

/// Orthogonal complement of `k` inside `h` for `⟨v, w⟩ = vᵀ B w̄`.
fn orthogonal_complement(h: &Subspace, k: &Subspace, b: &ExactMatrix) -> Result<Subspace, DecomposeError> {
    let hb = h.basis();
    let kb = k.basis();
    let rows: Vec<Vector> = kb
        .iter()
        .map(|kappa| {
            let bk = b.mul_vec(&kappa.iter().map(GaussianRational::conj).collect::<Vector>());
            hb.iter().map(|v| crate::linalg::dot(v, &bk)).collect()
        })
        .collect();
    let coeffs = kernel(&ExactMatrix::from_rows_with_cols(rows, hb.len()));
    let basis = ExactMatrix::from_rows_with_cols(hb.clone(), h.ambient_dim());
    let vectors: Vec<Vector> = coeffs.iter().map(|c| basis.transpose().mul_vec(c)).collect();
    let u = Subspace::new(h.ambient_dim(), &vectors).map_err(CohomologyError::from)?;
    let meet = u.intersect(k).map_err(CohomologyError::from)?;
    if meet.dim() != 0 || u.dim() + k.dim() != h.dim() {
        return Err(DecomposeError::DegenerateProduct);
    }
    Ok(u)
}

fn omega_table(
    g: &ComplexLieAlgebra,
    h: &Subspace,
    k: &Subspace,
    dual: bool,
) -> Result<CohomologyTable, DecomposeError> {
    let m = g.dim() - h.dim();
    let pair = relative_in(h, k)?;
    let rows: Vec<Result<CohomologyTable, DecomposeError>> = (0..=m)
        .into_par_iter()
        .map(|p| {
            let (acting, module) = adjoint_quotient_module(g, h, p, dual)?;
            Ok(relative_ce_cohomology(&acting, &pair, &module, false)?)
        })
        .collect();
    let mut out = CohomologyTable::default();
    for (p, t) in rows.into_iter().enumerate() {
        for (r, n) in t?.series().into_iter().enumerate() {
            out.dims.insert(Degree::Bi(p, r), n);
        }
    }
    Ok(out)
}

fn same_dims(a: &CohomologyTable, b: &CohomologyTable) -> bool {
    let keys: std::collections::BTreeSet<&Degree> = a.dims.keys().chain(b.dims.keys()).collect();
    keys.into_iter().all(|d| a.dims.get(d).copied().unwrap_or(0) == b.dims.get(d).copied().unwrap_or(0))
}

/// Full assembly for an elliptic `𝔥` in a compact semisimple (or abelian)
/// algebra, with `𝔲_* = 𝔥`.
pub fn full_assembly(
    g: &ComplexLieAlgebra,
    h: &Subspace,
    gram: Option<&ExactMatrix>,
) -> Result<AssemblyReport, DecomposeError> {
    if h.ambient_dim() != g.dim() {
        return Err(CohomologyError::AmbientMismatch { algebra: g.dim(), subspace: h.ambient_dim() }.into());
    }
    if let Err((a, b)) = is_subalgebra(g, h) {
        return Err(DecomposeError::NotSubalgebra(a, b));
    }
    if !classify_structure(g, h).elliptic {
        return Err(DecomposeError::NotElliptic);
    }
    let (product, b) = choose_product(g, gram)?;
    let k = h.intersect(&h.conj()).map_err(CohomologyError::from)?;
    let u = orthogonal_complement(h, &k, &b)?;
    for x in h.basis() {
        for y in u.basis() {
            if !u.contains(&g.bracket(&x, &y)) {
                return Err(DecomposeError::NoIdealComplement { h: g.format_vector(&x), u: g.format_vector(&y) });
            }
        }
    }

    let k_alg = g.restrict(&k).map_err(CohomologyError::from)?;
    let k_table = ce_cohomology(&k_alg, &GModule::trivial(&k_alg), false);
    let (omega_dual, omega_nondual) =
        rayon::join(|| omega_table(g, h, &k, true), || omega_table(g, h, &k, false));
    let (omega_dual, omega_nondual) = (omega_dual?, omega_nondual?);
    let dual = kunneth_assemble(&omega_dual, &k_table);
    let nondual = kunneth_assemble(&omega_nondual, &k_table);
    let bigraded = bigraded_cohomology(g, h, None, false)?;
    let matches_bigraded = same_dims(&dual, &bigraded);
    let variant_disagreements: Vec<(usize, usize)> = dual
        .dims
        .iter()
        .filter_map(|(d, &n)| match *d {
            Degree::Bi(p, q) if nondual.bidim(p, q) != n => Some((p, q)),
            _ => None,
        })
        .collect();
    let p_summed = dual.p_summed();

    let mut notes = Vec::new();
    let (mut summed_reading_holds, mut per_bidegree_reading_holds) = (None, None);
    if g.dim() - h.dim() == 1 {
        let ks = k_table.series();
        let at = |q: usize| ks.get(q).copied().unwrap_or(0);
        let shifted = |q: usize| at(q) + if q == 0 { 0 } else { at(q - 1) };
        let summed = p_summed.iter().enumerate().all(|(q, &n)| n == shifted(q));
        let per = dual.dims.iter().all(|(d, &n)| match *d {
            Degree::Bi(_, q) => n == shifted(q),
            Degree::Single(_) => true,
        });
        summed_reading_holds = Some(summed);
        per_bidegree_reading_holds = Some(per);
        notes.push(format!(
            "H^q(K) + H^(q-1)(K) reading: summed over p {}, per bidegree {}",
            if summed { "holds" } else { "fails" },
            if per { "holds" } else { "fails" }
        ));
    }
    if !variant_disagreements.is_empty() {
        let list: Vec<String> = variant_disagreements.iter().map(|(p, q)| format!("({p},{q})")).collect();
        notes.push(format!("non-dual coefficient module disagrees at {}", list.join(", ")));
    }
    if !matches_bigraded {
        notes.push("dual assembly disagrees with the bigraded complex".into());
    }
    notes.push("closedness of K is assumed, not checked".into());
    notes.push("compactness of G is assumed, not checked".into());

    let names = |s: &Subspace| s.basis().iter().map(|v| g.format_vector(v)).collect();
    Ok(AssemblyReport {
        product,
        k: names(&k),
        u: names(&u),
        u_star: names(h),
        k_table,
        omega_dual,
        omega_nondual,
        dual,
        nondual,
        p_summed,
        bigraded,
        matches_bigraded,
        variant_disagreements,
        summed_reading_holds,
        per_bidegree_reading_holds,
        notes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::builtin;

    fn su2_data() -> (ComplexLieAlgebra, Subspace, Subspace) {
        let a = builtin::su2();
        let h = Subspace::new(3, &[a.resolve("T").unwrap(), a.resolve("L").unwrap()]).unwrap();
        let t = Subspace::new(3, &[a.resolve("T").unwrap()]).unwrap();
        (a.complexify(), h, t)
    }

    #[test]
    fn quotient_module_weights() {
        let (g, h, _) = su2_data();
        let (_, m) = adjoint_quotient_module(&g, &h, 1, true).unwrap();
        assert_eq!(m.dim(), 1);
        assert_eq!(m.action(0)[(0, 0)], "2i".parse().unwrap());
        let (_, m0) = adjoint_quotient_module(&g, &h, 0, true).unwrap();
        assert_eq!(m0.dim(), 1);
        assert!(m0.action(0).is_zero());
        let (_, full) = adjoint_quotient_module(&g, &Subspace::full(3), 1, false).unwrap();
        assert_eq!(full.dim(), 0);
    }

    #[test]
    fn kunneth_cp1_circle() {
        let mut omega = CohomologyTable::default();
        for (p, r, n) in [(0, 0, 1), (0, 1, 0), (1, 0, 0), (1, 1, 1)] {
            omega.dims.insert(Degree::Bi(p, r), n);
        }
        let t = kunneth_assemble(&omega, &CohomologyTable::from_series(&[1, 1]));
        assert_eq!(t.row(0), vec![1, 1, 0]);
        assert_eq!(t.row(1), vec![0, 1, 1]);
        let mut point = CohomologyTable::default();
        point.dims.insert(Degree::Bi(0, 0), 1);
        assert_eq!(kunneth_assemble(&point, &CohomologyTable::from_series(&[1, 3, 3, 1])).row(0), vec![1, 3, 3, 1]);
    }

    #[test]
    fn bott_cp1() {
        let (g, h, t) = su2_data();
        assert_eq!(bott_dolbeault(&g, &h, &t, 0).unwrap().series(), vec![1, 0]);
        assert_eq!(bott_dolbeault(&g, &h, &t, 1).unwrap().series(), vec![0, 1]);
        assert_eq!(bott_dolbeault(&g, &h, &h, 0).unwrap().series(), vec![1]);
    }

    #[test]
    fn su2_assembly() {
        let (g, h, _) = su2_data();
        let r = full_assembly(&g, &h, None).unwrap();
        assert_eq!(r.product, ProductSource::NegativeKilling);
        assert_eq!(r.k, vec!["T".to_string()]);
        assert_eq!(r.u, vec!["X-iY".to_string()]);
        assert_eq!(r.dual.row(0), vec![1, 1, 0]);
        assert_eq!(r.dual.row(1), vec![0, 1, 1]);
        assert!(r.matches_bigraded);
        assert_eq!(r.p_summed, vec![1, 2, 1]);
        assert_eq!(r.summed_reading_holds, Some(true));
        assert_eq!(r.per_bidegree_reading_holds, Some(false));
        assert!(r.variant_disagreements.contains(&(1, 1)));
    }

    #[test]
    fn whole_algebra_is_de_rham() {
        let g = builtin::su2().complexify();
        let r = full_assembly(&g, &Subspace::full(3), None).unwrap();
        assert_eq!(r.dual.row(0), vec![1, 0, 0, 1]);
        assert_eq!(r.dual.max_p(), Some(0));
    }

    #[test]
    fn torus_uses_identity() {
        let g = builtin::torus(2).complexify();
        let r = full_assembly(&g, &Subspace::full(2), None).unwrap();
        assert_eq!(r.product, ProductSource::Identity);
        assert_eq!(r.dual.row(0), vec![1, 2, 1]);
    }

    #[test]
    fn rejects_cr() {
        let a = builtin::su2();
        let h = Subspace::new(3, &[a.resolve("L").unwrap()]).unwrap();
        assert_eq!(full_assembly(&a.complexify(), &h, None), Err(DecomposeError::NotElliptic));
    }
}
