//! Fraction-free Gauss–Jordan elimination over the Gaussian integers.
//!
//! Rows are first scaled into ℤ[i]; every elimination step divides by the
//! previous pivot, and that division is exact because each intermediate
//! entry is a minor of the scaled input. After the last step every pivot
//! entry equals the final pivot `d`, so the top `rank` rows are `d · RREF`.
//!
//! Pivot choice: the leftmost column with a nonzero entry at or below the
//! current row, and within it the topmost such row.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::matrix::{ExactMatrix, Vector};
use crate::scalar::GaussianRational;

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub(crate) struct GaussInt {
    pub re: BigInt,
    pub im: BigInt,
}

impl GaussInt {
    pub fn new(re: BigInt, im: BigInt) -> Self {
        Self { re, im }
    }

    pub fn one() -> Self {
        Self { re: BigInt::one(), im: BigInt::zero() }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self { re: &self.re * &o.re - &self.im * &o.im, im: &self.re * &o.im + &self.im * &o.re }
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self { re: &self.re - &o.re, im: &self.im - &o.im }
    }

    pub fn norm(&self) -> BigInt {
        &self.re * &self.re + &self.im * &self.im
    }

    /// `self / d` when the quotient lies in ℤ[i].
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        let n = d.norm();
        let re = &self.re * &d.re + &self.im * &d.im;
        let im = &self.im * &d.re - &self.re * &d.im;
        let (qr, rr) = re.div_rem(&n);
        let (qi, ri) = im.div_rem(&n);
        (rr.is_zero() && ri.is_zero()).then_some(Self { re: qr, im: qi })
    }

    pub fn to_scalar(&self) -> GaussianRational {
        GaussianRational::new(
            BigRational::from_integer(self.re.clone()),
            BigRational::from_integer(self.im.clone()),
        )
    }

    /// `self` as a Gaussian integer, if both parts are integral.
    pub fn from_scalar(x: &GaussianRational) -> Option<Self> {
        (x.re().is_integer() && x.im().is_integer())
            .then(|| Self { re: x.re().to_integer(), im: x.im().to_integer() })
    }
}

/// Result of fraction-free Gauss–Jordan on a matrix.
pub(crate) struct Echelon {
    pub cols: usize,
    pub pivots: Vec<usize>,
    /// Top `rank` rows of the reduced integral matrix.
    pub rows: Vec<Vec<GaussInt>>,
    /// Common pivot value.
    pub d: GaussInt,
}

fn integral_row(row: &[GaussianRational]) -> Vec<GaussInt> {
    let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(&x.denom_lcm()));
    let scale = BigRational::from_integer(l);
    row.iter()
        .map(|x| {
            let re = x.re() * &scale;
            let im = x.im() * &scale;
            GaussInt::new(re.to_integer(), im.to_integer())
        })
        .collect()
}

pub(crate) fn echelon(m: &ExactMatrix) -> Echelon {
    let (nr, nc) = (m.rows(), m.cols());
    let mut a: Vec<Vec<GaussInt>> = (0..nr).map(|i| integral_row(m.row(i))).collect();
    let mut prev = GaussInt::one();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..nc {
        if r == nr {
            break;
        }
        let Some(pr) = (r..nr).find(|&i| !a[i][col].is_zero()) else { continue };
        a.swap(r, pr);
        let pivot_row = a[r].clone();
        let p = pivot_row[col].clone();
        for (k, row) in a.iter_mut().enumerate() {
            if k == r {
                continue;
            }
            let factor = row[col].clone();
            for (j, entry) in row.iter_mut().enumerate() {
                let keep = entry.mul(&p);
                let next = if factor.is_zero() || pivot_row[j].is_zero() {
                    keep
                } else {
                    keep.sub(&factor.mul(&pivot_row[j]))
                };
                *entry = if next.is_zero() {
                    next
                } else {
                    next.exact_div(&prev).expect("fraction-free division must be exact")
                };
            }
        }
        prev = p;
        pivots.push(col);
        r += 1;
    }
    a.truncate(r);
    Echelon { cols: nc, pivots, rows: a, d: prev }
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn rref(&self) -> ExactMatrix {
        let dinv = self.d.to_scalar().inv().expect("nonzero pivot");
        let rows = self.rows.iter().map(|row| row.iter().map(|x| &x.to_scalar() * &dinv).collect()).collect();
        ExactMatrix::from_rows_with_cols(rows, self.cols)
    }

    /// RREF null-space basis: one vector per free column, in ascending
    /// order, with a 1 in that column.
    pub fn kernel(&self) -> Vec<Vector> {
        let dinv = self.d.to_scalar().inv().expect("nonzero pivot");
        let mut is_pivot = vec![false; self.cols];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = vec![GaussianRational::zero(); self.cols];
                v[f] = GaussianRational::one();
                for (row, &p) in self.rows.iter().zip(&self.pivots) {
                    if !row[f].is_zero() {
                        v[p] = -(&row[f].to_scalar() * &dinv);
                    }
                }
                v
            })
            .collect()
    }
}

/// Rank and RREF kernel basis. `rank + kernel.len() == cols`.
pub fn rank_kernel(m: &ExactMatrix) -> (usize, Vec<Vector>) {
    let e = echelon(m);
    (e.rank(), e.kernel())
}

pub fn rank(m: &ExactMatrix) -> usize {
    echelon(m).rank()
}

pub fn kernel(m: &ExactMatrix) -> Vec<Vector> {
    echelon(m).kernel()
}

/// Reduced row-echelon form (zero rows dropped) and pivot columns.
pub fn rref(m: &ExactMatrix) -> (ExactMatrix, Vec<usize>) {
    let e = echelon(m);
    (e.rref(), e.pivots.clone())
}

/// Some `x` with `M x = b`, or `None` when the system is inconsistent.
/// Free variables are set to zero.
pub fn solve_linear(m: &ExactMatrix, b: &[GaussianRational]) -> Option<Vector> {
    assert_eq!(b.len(), m.rows(), "right-hand side length must equal row count");
    let aug = m.hstack(&ExactMatrix::from_columns(&[b.to_vec()], m.rows()));
    let (r, pivots) = rref(&aug);
    if pivots.last() == Some(&m.cols()) {
        return None;
    }
    let mut x = vec![GaussianRational::zero(); m.cols()];
    for (i, &p) in pivots.iter().enumerate() {
        x[p] = r[(i, m.cols())].clone();
    }
    Some(x)
}

pub fn inverse(m: &ExactMatrix) -> Option<ExactMatrix> {
    if !m.is_square() {
        return None;
    }
    let n = m.rows();
    let (r, pivots) = rref(&m.hstack(&ExactMatrix::identity(n)));
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    let cols: Vec<usize> = (n..2 * n).collect();
    let rows: Vec<usize> = (0..n).collect();
    Some(r.select(&rows, &cols))
}
