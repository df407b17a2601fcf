//! Generators and independent reference implementations shared by the
//! integration suites.
#![allow(dead_code)]

use liecoh::lie::{generate_subalgebra, ComplexLieAlgebra, LieAlgebra, Subspace};
use liecoh::{ExactMatrix, GaussianRational, Vector};
use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;

pub fn gq(re: (i64, i64), im: (i64, i64)) -> GaussianRational {
    GaussianRational::new(BigRational::new(re.0.into(), re.1.into()), BigRational::new(im.0.into(), im.1.into()))
}

/// Small Gaussian rationals, zero with noticeable probability.
pub fn scalar() -> impl Strategy<Value = GaussianRational> {
    prop_oneof![
        1 => Just(GaussianRational::zero()),
        3 => ((-4i64..=4, 1i64..=3), (-4i64..=4, 1i64..=3)).prop_map(|(re, im)| gq(re, im)),
    ]
}

pub fn gaussian_int() -> impl Strategy<Value = GaussianRational> {
    (-3i64..=3, -3i64..=3).prop_map(|(a, b)| GaussianRational::from_parts(a, b))
}

pub fn matrix_with(rows: usize, cols: usize, entry: BoxedStrategy<GaussianRational>) -> impl Strategy<Value = ExactMatrix> {
    proptest::collection::vec(proptest::collection::vec(entry, cols), rows)
        .prop_map(move |r| ExactMatrix::from_rows_with_cols(r, cols))
}

pub fn matrix(max: usize) -> impl Strategy<Value = ExactMatrix> {
    (1..=max, 1..=max).prop_flat_map(|(r, c)| matrix_with(r, c, scalar().boxed()))
}

pub fn square(max: usize) -> impl Strategy<Value = ExactMatrix> {
    (1..=max).prop_flat_map(|n| matrix_with(n, n, scalar().boxed()))
}

pub fn hermitian(max: usize) -> impl Strategy<Value = ExactMatrix> {
    square(max).prop_map(|a| a.add(&a.adjoint()))
}

/// Random solvable algebra: `s` commuting derivations `t_i` acting on
/// planes `(x_k, y_k)` by `a·I + b·J`, optionally with `[x_1, y_1] = z`.
#[derive(Clone, Debug)]
pub struct SolvableSpec {
    pub weights: Vec<Vec<(i64, i64)>>,
    pub heisenberg: bool,
}

pub fn solvable_spec() -> impl Strategy<Value = SolvableSpec> {
    (1usize..=2, 1usize..=2, any::<bool>()).prop_flat_map(|(s, p, heisenberg)| {
        proptest::collection::vec(proptest::collection::vec((-2i64..=2, -2i64..=2), p), s)
            .prop_map(move |weights| SolvableSpec { weights, heisenberg })
    })
}

pub fn build_solvable(spec: &SolvableSpec) -> LieAlgebra {
    let s = spec.weights.len();
    let p = spec.weights[0].len();
    let mut names: Vec<String> = (0..s).map(|i| format!("t{i}")).collect();
    for k in 0..p {
        names.push(format!("x{k}"));
        names.push(format!("y{k}"));
    }
    if spec.heisenberg {
        names.push("z".into());
    }
    let r = |n: i64| BigRational::from_integer(n.into());
    let mut brackets = Vec::new();
    for (i, row) in spec.weights.iter().enumerate() {
        for (k, &(a, b)) in row.iter().enumerate() {
            let (x, y) = (s + 2 * k, s + 2 * k + 1);
            brackets.push(((i, x), vec![(x, r(a)), (y, r(b))]));
            brackets.push(((i, y), vec![(x, r(-b)), (y, r(a))]));
        }
        if spec.heisenberg {
            brackets.push(((i, s + 2 * p), vec![(s + 2 * p, r(2 * row[0].0))]));
        }
    }
    if spec.heisenberg {
        brackets.push(((s, s + 1), vec![(s + 2 * p, r(1))]));
    }
    LieAlgebra::new("solvable", names, brackets).expect("well-formed table")
}

pub fn solvable() -> impl Strategy<Value = LieAlgebra> {
    solvable_spec().prop_map(|s| build_solvable(&s))
}

/// Entries in `{0, ±1, ±i}`.
pub fn unit_entry() -> impl Strategy<Value = GaussianRational> {
    prop_oneof![
        Just(GaussianRational::from_int(0)),
        Just(GaussianRational::from_int(1)),
        Just(GaussianRational::from_int(-1)),
        Just(GaussianRational::i()),
        Just(-GaussianRational::i()),
    ]
}

/// A random algebra with the subalgebra generated by 1–3 random vectors.
pub fn algebra_with_subalgebra() -> impl Strategy<Value = (ComplexLieAlgebra, Subspace)> {
    solvable().prop_flat_map(|g| {
        let n = g.dim();
        let c = g.complexify();
        proptest::collection::vec(proptest::collection::vec(unit_entry(), n), 1..=3).prop_map(move |vs| {
            let h = generate_subalgebra(&c, &vs).expect("generation terminates");
            (c.clone(), h)
        })
    })
}

/// Rank by plain field elimination (no fraction-free tricks).
pub fn naive_rank(m: &ExactMatrix) -> usize {
    let mut a = m.to_rows();
    let cols = m.cols();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        let inv = a[r][c].inv().unwrap();
        let pivot: Vector = a[r].iter().map(|x| x * &inv).collect();
        for (i, row) in a.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x -= &(&f * y);
                }
            }
        }
        a[r] = pivot;
        r += 1;
    }
    r
}

/// Value of the alternating form with coefficients `coef` on the sorted
/// monomials of `subsets`, at the ordered argument tuple `args`.
fn eval_form(coef: &[GaussianRational], subsets: &[Vec<usize>], args: &[usize]) -> GaussianRational {
    let mut sorted = args.to_vec();
    let mut sign = 1i64;
    for i in 0..sorted.len() {
        for j in 0..sorted.len() - 1 - i {
            if sorted[j] == sorted[j + 1] {
                return GaussianRational::zero();
            }
            if sorted[j] > sorted[j + 1] {
                sorted.swap(j, j + 1);
                sign = -sign;
            }
        }
    }
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return GaussianRational::zero();
    }
    match subsets.iter().position(|s| *s == sorted) {
        Some(i) => &coef[i] * &GaussianRational::from_int(sign),
        None => GaussianRational::zero(),
    }
}

pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Trivial-coefficient CE differential by direct evaluation of
/// `du(x_0..x_k) = Σ_{s<t} (−1)^{s+t} u([x_s,x_t], x_0..x̂_s..x̂_t..x_k)`.
pub fn reference_differential(g: &ComplexLieAlgebra, k: usize) -> ExactMatrix {
    let n = g.dim();
    let src = subsets(n, k);
    let dst = subsets(n, k + 1);
    let mut m = ExactMatrix::zeros(dst.len(), src.len());
    for col in 0..src.len() {
        let mut coef = vec![GaussianRational::zero(); src.len()];
        coef[col] = GaussianRational::from_int(1);
        for (row, j) in dst.iter().enumerate() {
            let mut acc = GaussianRational::zero();
            for s in 0..j.len() {
                for t in s + 1..j.len() {
                    let br = g.bracket_basis(j[s], j[t]);
                    let rest: Vec<usize> =
                        j.iter().enumerate().filter(|&(i, _)| i != s && i != t).map(|(_, &x)| x).collect();
                    let sg = GaussianRational::from_int(if (s + t) % 2 == 0 { 1 } else { -1 });
                    for (l, c) in br.iter().enumerate() {
                        if c.is_zero() {
                            continue;
                        }
                        let mut args = vec![l];
                        args.extend(&rest);
                        acc += &(&(&sg * c) * &eval_form(&coef, &src, &args));
                    }
                }
            }
            m[(row, col)] = acc;
        }
    }
    m
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}
