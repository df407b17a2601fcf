//! Structure types of a subalgebra `𝔥 ⊂ 𝔤`, characteristic covectors, the
//! Levi form at the identity and the BCT hypocomplexity test.

use num_integer::Integer;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::lie::{ComplexLieAlgebra, Subspace};
use crate::linalg::{dot, hermitian_inertia, ExactMatrix, Inertia, Vector};
use crate::scalar::GaussianRational;
use num_traits::Zero;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("covector has length {got}, expected {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("covector is not real")]
    NotReal,
    #[error("covector does not vanish on the subalgebra")]
    NotCharacteristic,
    #[error("covector is zero")]
    ZeroCovector,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub elliptic: bool,
    pub complex: bool,
    #[serde(rename = "CR")]
    pub cr: bool,
    pub essentially_real: bool,
    pub dim_algebra: usize,
    pub dim_h: usize,
    pub dim_hbar: usize,
    pub dim_sum: usize,
    pub dim_intersection: usize,
}

pub fn classify_structure(g: &ComplexLieAlgebra, h: &Subspace) -> ClassificationReport {
    let hbar = h.conj();
    let sum = h.sum(&hbar).expect("same ambient");
    let int = h.intersect(&hbar).expect("same ambient");
    let n = g.dim();
    ClassificationReport {
        elliptic: sum.dim() == n,
        complex: sum.dim() == n && int.dim() == 0,
        cr: int.dim() == 0,
        essentially_real: *h == hbar,
        dim_algebra: n,
        dim_h: h.dim(),
        dim_hbar: hbar.dim(),
        dim_sum: sum.dim(),
        dim_intersection: int.dim(),
    }
}

/// Real covectors annihilating `𝔥` (equivalently `𝔥 + 𝔥̄`), in RREF.
pub fn characteristic_space(h: &Subspace) -> Vec<Vector> {
    let sum = h.sum(&h.conj()).expect("same ambient");
    let basis = sum.annihilator();
    debug_assert!(basis.iter().all(|v| v.iter().all(GaussianRational::is_real)));
    basis
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LeviForm {
    pub covector: Vector,
    /// Basis `Z_a` of `𝔥` used for the matrix.
    pub basis: Vec<Vector>,
    /// Entries `(1/2i) ξ([Z_a, Z̄_b])`.
    pub matrix: ExactMatrix,
}

pub fn levi_form(g: &ComplexLieAlgebra, h: &Subspace, xi: &[GaussianRational]) -> Result<LeviForm, ClassifyError> {
    if xi.len() != g.dim() {
        return Err(ClassifyError::LengthMismatch { expected: g.dim(), got: xi.len() });
    }
    if !xi.iter().all(GaussianRational::is_real) {
        return Err(ClassifyError::NotReal);
    }
    if xi.iter().all(Zero::is_zero) {
        return Err(ClassifyError::ZeroCovector);
    }
    let basis = h.basis();
    if basis.iter().any(|z| !dot(xi, z).is_zero()) {
        return Err(ClassifyError::NotCharacteristic);
    }
    let half_over_i = GaussianRational::from_parts(0, 2).inv().expect("nonzero");
    let n = basis.len();
    let mut m = ExactMatrix::zeros(n, n);
    for a in 0..n {
        for b in 0..n {
            let zb: Vector = basis[b].iter().map(GaussianRational::conj).collect();
            m[(a, b)] = &dot(xi, &g.bracket(&basis[a], &zb)) * &half_over_i;
        }
    }
    assert!(m.is_hermitian(), "Levi matrix must be Hermitian");
    Ok(LeviForm { covector: xi.to_vec(), basis, matrix: m })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LeviSample {
    pub covector: Vector,
    pub inertia: Inertia,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict")]
pub enum BctVerdict {
    EllipticHenceHypocomplex,
    /// Both `ℒ_ξ` and `ℒ_{−ξ}` are indefinite for the spanning covector.
    HypocomplexByBCT { evidence: Vec<LeviSample> },
    Inconclusive { reason: String, evidence: Vec<LeviSample> },
}

fn sample(g: &ComplexLieAlgebra, h: &Subspace, xi: Vector) -> LeviSample {
    let form = levi_form(g, h, &xi).expect("characteristic covector");
    let inertia = hermitian_inertia(&form.matrix).expect("Hermitian by construction");
    LeviSample { covector: xi, inertia }
}

/// Nonzero integer points of `{−2,…,2}^d` with coprime entries, in
/// lexicographic order.
pub fn sample_grid(d: usize) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let total = 5usize.pow(d as u32);
    for code in 0..total {
        let mut c = vec![0i64; d];
        let mut x = code;
        for slot in c.iter_mut().rev() {
            *slot = (x % 5) as i64 - 2;
            x /= 5;
        }
        let g = c.iter().fold(0i64, |acc, v| acc.gcd(v));
        if g == 1 {
            out.push(c);
        }
    }
    out
}

pub fn bct_check(g: &ComplexLieAlgebra, h: &Subspace) -> BctVerdict {
    let chars = characteristic_space(h);
    match chars.len() {
        0 => BctVerdict::EllipticHenceHypocomplex,
        1 => {
            let xi = chars[0].clone();
            let neg: Vector = xi.iter().map(|x| -x).collect();
            let evidence = vec![sample(g, h, xi), sample(g, h, neg)];
            if evidence.iter().all(|s| s.inertia.is_indefinite()) {
                BctVerdict::HypocomplexByBCT { evidence }
            } else {
                BctVerdict::Inconclusive {
                    reason: "Levi form is semidefinite at a characteristic covector".into(),
                    evidence,
                }
            }
        }
        d => {
            let evidence: Vec<LeviSample> = sample_grid(d)
                .into_par_iter()
                .map(|c| {
                    let mut xi = vec![GaussianRational::zero(); g.dim()];
                    for (ci, b) in c.iter().zip(&chars) {
                        crate::linalg::axpy(&mut xi, &GaussianRational::from_int(*ci), b);
                    }
                    sample(g, h, xi)
                })
                .collect();
            BctVerdict::Inconclusive {
                reason: format!("characteristic space has dimension {d}; sampled covectors are evidence only"),
                evidence,
            }
        }
    }
}
