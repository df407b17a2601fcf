use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::matrix::ExactMatrix;
use super::LinalgError;
use crate::scalar::GaussianRational;

/// Signature counts of a Hermitian form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Inertia {
    pub n_pos: usize,
    pub n_neg: usize,
    pub n_zero: usize,
}

impl Inertia {
    pub fn new(n_pos: usize, n_neg: usize, n_zero: usize) -> Self {
        Self { n_pos, n_neg, n_zero }
    }

    pub fn dim(&self) -> usize {
        self.n_pos + self.n_neg + self.n_zero
    }

    /// Inertia of the negated form.
    pub fn swapped(&self) -> Self {
        Self { n_pos: self.n_neg, n_neg: self.n_pos, n_zero: self.n_zero }
    }

    pub fn is_indefinite(&self) -> bool {
        self.n_pos > 0 && self.n_neg > 0
    }
}

/// Schur complement `A_rest − C B⁻¹ C*` for pivot set `piv`.
fn schur(a: &ExactMatrix, piv: &[usize], b_inv: &ExactMatrix) -> ExactMatrix {
    let rest: Vec<usize> = (0..a.rows()).filter(|i| !piv.contains(i)).collect();
    let a_rest = a.select(&rest, &rest);
    let c = a.select(&rest, piv);
    a_rest.sub(&c.mul(b_inv).mul(&c.adjoint()))
}

/// Exact inertia by congruence: pivot on the first nonzero diagonal entry;
/// when the diagonal vanishes, split off a hyperbolic 2×2 block.
pub fn hermitian_inertia(h: &ExactMatrix) -> Result<Inertia, LinalgError> {
    if !h.is_square() {
        return Err(LinalgError::NotSquare { rows: h.rows(), cols: h.cols() });
    }
    if !h.is_hermitian() {
        return Err(LinalgError::NotHermitian);
    }
    let mut out = Inertia::new(0, 0, 0);
    let mut a = h.clone();
    while a.rows() > 0 {
        let n = a.rows();
        if let Some(i) = (0..n).find(|&i| !a[(i, i)].is_zero()) {
            let d = a[(i, i)].clone();
            if d.re().is_positive() {
                out.n_pos += 1;
            } else {
                out.n_neg += 1;
            }
            let b_inv = ExactMatrix::from_diagonal(&[d.inv().expect("nonzero pivot")]);
            a = schur(&a, &[i], &b_inv);
            continue;
        }
        let Some((i, j)) = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).find(|&(i, j)| !a[(i, j)].is_zero())
        else {
            out.n_zero += n;
            break;
        };
        let x = a[(i, j)].clone();
        let zero = GaussianRational::zero();
        let b_inv = ExactMatrix::from_rows(vec![
            vec![zero.clone(), x.conj().inv().expect("nonzero")],
            vec![x.inv().expect("nonzero"), zero],
        ]);
        out.n_pos += 1;
        out.n_neg += 1;
        a = schur(&a, &[i, j], &b_inv);
    }
    Ok(out)
}
