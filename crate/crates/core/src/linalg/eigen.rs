//! Eigenvalues with exact splitting over ℚ(i).
//!
//! The characteristic polynomial comes from Faddeev–LeVerrier. After
//! stripping zero roots and rescaling to a monic polynomial in ℤ[i][μ],
//! every root is a Gaussian-integer divisor of the constant term, so an
//! exhaustive divisor search either finds all roots or proves that some
//! irreducible factor of degree ≥ 2 remains.

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use super::bareiss::{kernel, GaussInt};
use super::matrix::{ExactMatrix, Vector};
use super::LinalgError;
use crate::scalar::GaussianRational;

/// Largest constant-term norm the divisor search will factor.
const MAX_NORM_BITS: u64 = 48;

/// One eigenvalue with its algebraic multiplicity and an RREF basis of
/// `ker(M − λI)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EigenPair {
    pub value: GaussianRational,
    pub multiplicity: usize,
    pub eigenspace: Vec<Vector>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EigenSplit {
    /// Sorted by `(re, im)`.
    pub pairs: Vec<EigenPair>,
    pub diagonalizable: bool,
}

impl EigenSplit {
    pub fn eigenvalues(&self) -> Vec<GaussianRational> {
        self.pairs.iter().map(|p| p.value.clone()).collect()
    }

    /// Columns: the eigenspace bases concatenated in order.
    pub fn eigenbasis(&self) -> Vec<Vector> {
        self.pairs.iter().flat_map(|p| p.eigenspace.iter().cloned()).collect()
    }
}

/// Coefficients `c_0, …, c_n` (ascending, `c_n = 1`) of `det(λI − M)`.
pub fn characteristic_polynomial(m: &ExactMatrix) -> Vec<GaussianRational> {
    assert!(m.is_square(), "characteristic polynomial of a non-square matrix");
    let n = m.rows();
    let mut c = vec![GaussianRational::zero(); n + 1];
    c[n] = GaussianRational::one();
    let mut mk = ExactMatrix::zeros(n, n);
    let id = ExactMatrix::identity(n);
    for k in 1..=n {
        mk = m.mul(&mk).add(&id.scale(&c[n - k + 1]));
        let t = m.mul(&mk).trace();
        c[n - k] = -(&t / &GaussianRational::from_int(k as i64));
    }
    c
}

pub fn eval_poly(coeffs: &[GaussianRational], x: &GaussianRational) -> GaussianRational {
    coeffs.iter().rev().fold(GaussianRational::zero(), |acc, c| &(&acc * x) + c)
}

/// Divide by `(x − r)`, assuming `r` is a root; returns the quotient.
fn deflate(coeffs: &[GaussianRational], r: &GaussianRational) -> Vec<GaussianRational> {
    let n = coeffs.len() - 1;
    let mut q = vec![GaussianRational::zero(); n];
    let mut carry = GaussianRational::zero();
    for k in (1..=n).rev() {
        carry = &(&carry * r) + &coeffs[k];
        q[k - 1] = carry.clone();
    }
    q
}

fn divisors(mut n: u128) -> Vec<u128> {
    let mut factors: Vec<(u128, u32)> = Vec::new();
    let mut p = 2u128;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            factors.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        factors.push((n, 1));
    }
    let mut out = vec![1u128];
    for (p, e) in factors {
        let prev = out.clone();
        let mut pk = 1u128;
        for _ in 0..e {
            pk *= p;
            out.extend(prev.iter().map(|d| d * pk));
        }
    }
    out.sort_unstable();
    out
}

/// Gaussian integers of norm `n`.
fn gaussian_of_norm(n: u128) -> Vec<GaussInt> {
    let mut out = Vec::new();
    let mut x = 0u128;
    while x * x <= n {
        let y2 = n - x * x;
        let y = y2.sqrt();
        if y * y == y2 {
            for (sx, sy) in [(1i64, 1i64), (1, -1), (-1, 1), (-1, -1)] {
                let g = GaussInt::new(BigInt::from(x) * sx, BigInt::from(y) * sy);
                if !out.contains(&g) {
                    out.push(g);
                }
            }
        }
        x += 1;
    }
    out
}

/// All roots (with repetition) of a monic polynomial over ℚ(i), or the
/// degree of the unsplit remainder.
pub fn split_roots(coeffs: &[GaussianRational]) -> Result<Vec<GaussianRational>, LinalgError> {
    let mut p: Vec<GaussianRational> = coeffs.to_vec();
    while p.len() > 1 && p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    let lead = p.last().cloned().unwrap_or_else(GaussianRational::one);
    if lead.is_zero() {
        return Ok(Vec::new());
    }
    let lead_inv = lead.inv().expect("nonzero leading coefficient");
    p.iter_mut().for_each(|c| *c = &*c * &lead_inv);

    let mut roots = Vec::new();
    while p.len() > 1 && p[0].is_zero() {
        p.remove(0);
        roots.push(GaussianRational::zero());
    }
    let n = p.len() - 1;
    if n == 0 {
        return Ok(roots);
    }

    // λ = μ / D makes Σ c_k D^{n−k} μ^k monic over ℤ[i].
    let d = p.iter().fold(BigInt::one(), |acc, c| acc.lcm(&c.denom_lcm()));
    let dq = GaussianRational::from(d.clone());
    let mut q: Vec<GaussianRational> = (0..=n).map(|k| &p[k] * &dq.pow((n - k) as u32)).collect();
    let a0 = GaussInt::from_scalar(&q[0]).expect("scaled constant term is integral");
    let norm = a0.norm();
    if norm.bits() > MAX_NORM_BITS {
        return Err(LinalgError::RootSearchTooLarge { norm_bits: norm.bits() });
    }
    let norm = norm.to_u128().expect("bounded norm");

    let d_inv = dq.inv().expect("nonzero scale");
    'outer: for nd in divisors(norm) {
        for mu in gaussian_of_norm(nd) {
            if a0.exact_div(&mu).is_none() {
                continue;
            }
            let mu_s = mu.to_scalar();
            while q.len() > 1 && eval_poly(&q, &mu_s).is_zero() {
                q = deflate(&q, &mu_s);
                roots.push(&mu_s * &d_inv);
            }
            if q.len() == 1 {
                break 'outer;
            }
        }
    }
    if q.len() > 1 {
        return Err(LinalgError::NonSplit { remaining_degree: q.len() - 1 });
    }
    Ok(roots)
}

/// Exact eigen-decomposition when the characteristic polynomial splits
/// over ℚ(i).
pub fn split_eigen(m: &ExactMatrix) -> Result<EigenSplit, LinalgError> {
    if !m.is_square() {
        return Err(LinalgError::NotSquare { rows: m.rows(), cols: m.cols() });
    }
    let n = m.rows();
    let mut roots = split_roots(&characteristic_polynomial(m))?;
    roots.sort();
    let mut pairs: Vec<EigenPair> = Vec::new();
    for r in roots {
        match pairs.last_mut() {
            Some(last) if last.value == r => last.multiplicity += 1,
            _ => pairs.push(EigenPair { value: r, multiplicity: 1, eigenspace: Vec::new() }),
        }
    }
    let id = ExactMatrix::identity(n);
    for pair in &mut pairs {
        pair.eigenspace = kernel(&m.sub(&id.scale(&pair.value)));
    }
    let total: usize = pairs.iter().map(|p| p.eigenspace.len()).sum();
    Ok(EigenSplit { pairs, diagonalizable: total == n })
}
