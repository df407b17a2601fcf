//! The quotient complex `Λ^{p,q} = N^{p,q} / N^{p+1,q−1}` of a subalgebra
//! `𝔥 ⊂ 𝔤` with its induced differential `d′`.
//!
//! With `τ_1..τ_n` dual to the basis of `𝔥` and `ζ_1..ζ_m` dual to a
//! complement, `Λ^{p,q}` has basis `ζ_I∧τ_J` with `|I| = p`, `|J| = q`. A
//! class is lifted to the genuine cochain `ζ_I∧τ_J`, the full CE
//! differential is applied, and only the component with exactly `p`
//! ζ-factors is kept.

use rayon::prelude::*;
use serde::Serialize;

use super::complex::{ce_differential_on, quotient_representatives};
use super::module::GModule;
use super::subsets::{binomial, combinations, Subsets};
use super::table::{CohomologyTable, Degree, Representatives};
use super::CohomologyError;
use crate::classify::classify_structure;
use crate::lie::{is_subalgebra, ComplexLieAlgebra, Subspace};
use crate::linalg::{kernel, rank, ExactMatrix, Vector};
use crate::scalar::GaussianRational;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BigradedComplex {
    pub p: usize,
    /// `dim 𝔥`.
    pub n: usize,
    /// `dim 𝔤 − dim 𝔥`.
    pub m: usize,
    /// Labels of the basis of `Λ^{p,q}`, per `q`.
    pub bases: Vec<Vec<String>>,
    /// `d′: Λ^{p,q} → Λ^{p,q+1}`, per `q` (the last has zero rows).
    pub dprime: Vec<ExactMatrix>,
}

impl BigradedComplex {
    pub fn is_complex(&self) -> bool {
        self.dprime.windows(2).all(|w| w[1].mul(&w[0]).is_zero())
    }
}

/// Deterministic complement: conjugates of the `𝔥` basis first, then
/// standard basis vectors.
pub fn default_complement(h: &Subspace) -> Vec<Vector> {
    let conj: Vec<Vector> = h.basis().iter().map(|v| v.iter().map(GaussianRational::conj).collect()).collect();
    h.extend_to_basis(&conj)
}

struct Adapted {
    algebra: ComplexLieAlgebra,
    h_names: Vec<String>,
    c_names: Vec<String>,
    n: usize,
    m: usize,
}

fn adapt(g: &ComplexLieAlgebra, h: &Subspace, complement: &[Vector]) -> Result<Adapted, CohomologyError> {
    if h.ambient_dim() != g.dim() {
        return Err(CohomologyError::AmbientMismatch { algebra: g.dim(), subspace: h.ambient_dim() });
    }
    if let Err((a, b)) = is_subalgebra(g, h) {
        return Err(CohomologyError::NotSubalgebra(a, b));
    }
    let n = h.dim();
    if complement.len() + n != g.dim() {
        return Err(CohomologyError::BadComplement);
    }
    let mut basis = h.basis();
    basis.extend(complement.iter().cloned());
    let names: Vec<String> = basis.iter().map(|v| g.format_vector(v)).collect();
    let algebra = g.rebase(&basis, names.clone()).map_err(|_| CohomologyError::BadComplement)?;
    Ok(Adapted { algebra, h_names: names[..n].to_vec(), c_names: names[n..].to_vec(), n, m: complement.len() })
}

fn pq_monomials(n: usize, m: usize, p: usize, q: usize) -> Vec<(Vec<usize>, Vec<usize>)> {
    let mut out = Vec::new();
    for i in combinations(m, p) {
        for j in combinations(n, q) {
            out.push((i.clone(), j));
        }
    }
    out
}

fn label(a: &Adapted, i: &[usize], j: &[usize]) -> String {
    let mut parts: Vec<String> = i.iter().map(|&x| format!("zeta[{}]", a.c_names[x])).collect();
    parts.extend(j.iter().map(|&x| format!("tau[{}]", a.h_names[x])));
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("^")
    }
}

fn complex_for(a: &Adapted, p: usize) -> BigradedComplex {
    let (n, m) = (a.n, a.m);
    let trivial = GModule::trivial(&a.algebra);
    // In the adapted basis τ-indices are 0..n and ζ-indices n..n+m, so the
    // sorted monomial is τ_J∧ζ_I = (−1)^{pq} ζ_I∧τ_J.
    let as_subsets = |q: usize| {
        Subsets::from_list(
            pq_monomials(n, m, p, q)
                .into_iter()
                .map(|(i, j)| j.into_iter().chain(i.into_iter().map(|x| x + n)).collect())
                .collect(),
        )
    };
    let levels: Vec<Subsets> = (0..=n + 1).map(as_subsets).collect();
    let flip = GaussianRational::from_int(if p % 2 == 0 { 1 } else { -1 });
    let dprime = (0..=n)
        .into_par_iter()
        .map(|q| ce_differential_on(&a.algebra, &trivial, &levels[q], &levels[q + 1]).scale(&flip))
        .collect();
    let bases = (0..=n).map(|q| pq_monomials(n, m, p, q).iter().map(|(i, j)| label(a, i, j)).collect()).collect();
    BigradedComplex { p, n, m, bases, dprime }
}

pub fn bigraded_complex(
    g: &ComplexLieAlgebra,
    h: &Subspace,
    complement: Option<&[Vector]>,
    p: usize,
) -> Result<BigradedComplex, CohomologyError> {
    let default;
    let complement = match complement {
        Some(c) => c,
        None => {
            default = default_complement(h);
            &default
        }
    };
    let a = adapt(g, h, complement)?;
    if p > a.m {
        return Err(CohomologyError::DegreeOutOfRange { p, max: a.m });
    }
    Ok(complex_for(&a, p))
}

/// `H^{p,q}(𝔤; 𝔥)` for all `0 ≤ p ≤ m`, `0 ≤ q ≤ n`.
pub fn bigraded_cohomology(
    g: &ComplexLieAlgebra,
    h: &Subspace,
    complement: Option<&[Vector]>,
    representatives: bool,
) -> Result<CohomologyTable, CohomologyError> {
    let default;
    let complement = match complement {
        Some(c) => c,
        None => {
            default = default_complement(h);
            &default
        }
    };
    let a = adapt(g, h, complement)?;
    let per_p: Vec<CohomologyTable> = (0..=a.m)
        .into_par_iter()
        .map(|p| {
            let cx = complex_for(&a, p);
            let ranks: Vec<usize> = cx.dprime.iter().map(rank).collect();
            let mut t = CohomologyTable::default();
            for q in 0..=a.n {
                let dim = binomial(a.m, p) * binomial(a.n, q);
                let incoming = if q == 0 { 0 } else { ranks[q - 1] };
                let h = dim - ranks[q] - incoming;
                t.dims.insert(Degree::Bi(p, q), h);
                if representatives {
                    let cycles = kernel(&cx.dprime[q]);
                    let boundaries = if q == 0 { Vec::new() } else { cx.dprime[q - 1].transpose().to_rows() };
                    let vectors = quotient_representatives(&cycles, &boundaries, dim);
                    t.representatives.insert(Degree::Bi(p, q), Representatives { basis: cx.bases[q].clone(), vectors });
                }
            }
            t
        })
        .collect();
    let mut table = CohomologyTable::default();
    for t in per_p {
        table.dims.extend(t.dims);
        table.representatives.extend(t.representatives);
    }
    table.notes.push(format!("complement: {}", a.c_names.join(", ")));
    if !classify_structure(g, h).elliptic {
        table.notes.push(
            "structure is not elliptic: these are left-invariant classes, which inject into but need not exhaust \
             the cohomology of the group"
                .into(),
        );
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::ce_cohomology;
    use crate::lie::builtin;

    fn su2_h() -> (ComplexLieAlgebra, Subspace) {
        let a = builtin::su2();
        let h = Subspace::new(3, &[a.resolve("T").unwrap(), a.resolve("L").unwrap()]).unwrap();
        (a.complexify(), h)
    }

    #[test]
    fn su2_dprime_01() {
        let (g, h) = su2_h();
        let cx = bigraded_complex(&g, &h, None, 0).unwrap();
        assert_eq!(cx.bases[1], vec!["tau[T]".to_string(), "tau[X-iY]".to_string()]);
        let expected = ExactMatrix::from_rows(vec![vec![0.into(), "-2i".parse().unwrap()]]);
        assert_eq!(cx.dprime[1], expected);
        assert!(cx.is_complex());
    }

    #[test]
    fn su2_table() {
        let (g, h) = su2_h();
        let t = bigraded_cohomology(&g, &h, None, true).unwrap();
        assert_eq!(t.row(0), vec![1, 1, 0]);
        assert_eq!(t.row(1), vec![0, 1, 1]);
        assert_eq!(t.representatives[&Degree::Bi(0, 1)].vectors.len(), 1);
    }

    #[test]
    fn whole_algebra_collapses() {
        let g = builtin::su2().complexify();
        let t = bigraded_cohomology(&g, &Subspace::full(3), None, false).unwrap();
        assert_eq!(t.row(0), ce_cohomology(&g, &GModule::trivial(&g), false).series());
        assert_eq!(t.max_p(), Some(0));
    }

    #[test]
    fn torus_line() {
        let g = builtin::torus(2).complexify();
        let h = Subspace::new(2, &[vec![1.into(), "-2/3".parse().unwrap()]]).unwrap();
        let t = bigraded_cohomology(&g, &h, None, false).unwrap();
        assert_eq!((t.bidim(0, 0), t.bidim(0, 1)), (1, 1));
        assert!(t.notes.iter().any(|n| n.contains("not elliptic")));
    }
}
