//! Root-space decomposition under a user-supplied torus, positive systems and
//! the standard structures `𝔥 = 𝔲 ⊕ ⨁_{α∈Δ₊} 𝔤_α`.

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::classify::{classify_structure, ClassificationReport};
use crate::lie::{is_subalgebra, ComplexLieAlgebra, LieError, Subspace};
use crate::linalg::{split_eigen, solve_linear, ExactMatrix, LinalgError, Vector};
use crate::scalar::GaussianRational;
use num_traits::Zero;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum RootError {
    #[error("torus is not abelian: basis vectors {0} and {1} do not commute")]
    NonAbelianTorus(usize, usize),
    #[error("ad of torus element {0} has a characteristic polynomial that does not split over Q(i)")]
    NonSplit(usize),
    #[error("ad of torus element {0} is not diagonalizable")]
    NonSemisimpleAction(usize),
    #[error("weight {0:?} is not purely imaginary")]
    NonImaginaryRoot(Vec<String>),
    #[error("bracket of root spaces {0:?} and {1:?} leaves the expected space")]
    GradingViolation(Vec<String>, Vec<String>),
    #[error("{0:?} is not a root")]
    NotARoot(Vec<String>),
    #[error("positive system must contain exactly one of ±{0:?}")]
    NotASignChoice(Vec<String>),
    #[error("s = {s}, t = {t} is inconsistent with torus rank {rank} (need s + t <= rank, t even)")]
    InconsistentRank { s: usize, t: usize, rank: usize },
    #[error("standard structure is not a subalgebra: basis vectors {0} and {1}")]
    ClosureFailure(usize, usize),
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

pub type Root = Vec<GaussianRational>;

fn root_strings(r: &[GaussianRational]) -> Vec<String> {
    r.iter().map(ToString::to_string).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RootSpace {
    pub root: Root,
    pub space: Subspace,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RootDatum {
    pub torus: Subspace,
    /// Sorted by root.
    pub spaces: Vec<RootSpace>,
    pub zero_space: Subspace,
    /// `zero_space = torus`.
    pub torus_is_self_centralizing: bool,
}

impl RootDatum {
    pub fn roots(&self) -> Vec<Root> {
        self.spaces.iter().map(|s| s.root.clone()).collect()
    }

    pub fn rank(&self) -> usize {
        self.torus.dim()
    }

    pub fn space(&self, root: &[GaussianRational]) -> Option<&Subspace> {
        if root.iter().all(Zero::is_zero) {
            return Some(&self.zero_space);
        }
        self.spaces.iter().find(|s| s.root == root).map(|s| &s.space)
    }
}

/// Restriction of `op` to the span of `block` (columns), in block coordinates.
fn restrict_operator(op: &ExactMatrix, block: &[Vector]) -> ExactMatrix {
    let b = ExactMatrix::from_columns(block, op.rows());
    let cols: Vec<Vector> = block
        .iter()
        .map(|v| solve_linear(&b, &op.mul_vec(v)).expect("block is invariant"))
        .collect();
    ExactMatrix::from_columns(&cols, block.len())
}

pub fn root_decomposition(g: &ComplexLieAlgebra, t: &Subspace) -> Result<RootDatum, RootError> {
    let tb = t.basis();
    for a in 0..tb.len() {
        for b in a + 1..tb.len() {
            if !g.bracket(&tb[a], &tb[b]).iter().all(Zero::is_zero) {
                return Err(RootError::NonAbelianTorus(a, b));
            }
        }
    }
    let n = g.dim();
    let mut blocks: Vec<(Root, Vec<Vector>)> =
        vec![(Vec::new(), (0..n).map(|i| crate::linalg::unit_vector(n, i)).collect())];
    for (j, tj) in tb.iter().enumerate() {
        let ad = g.ad(tj);
        let refined: Vec<Result<Vec<(Root, Vec<Vector>)>, RootError>> = blocks
            .par_iter()
            .map(|(prefix, block)| {
                let local = restrict_operator(&ad, block);
                let split = split_eigen(&local).map_err(|e| match e {
                    LinalgError::NonSplit { .. } | LinalgError::RootSearchTooLarge { .. } => RootError::NonSplit(j),
                    other => RootError::Linalg(other),
                })?;
                if !split.diagonalizable {
                    return Err(RootError::NonSemisimpleAction(j));
                }
                let b = ExactMatrix::from_columns(block, n);
                Ok(split
                    .pairs
                    .into_iter()
                    .map(|p| {
                        let mut root = prefix.clone();
                        root.push(p.value);
                        (root, p.eigenspace.iter().map(|c| b.mul_vec(c)).collect())
                    })
                    .collect())
            })
            .collect();
        blocks = Vec::new();
        for r in refined {
            blocks.extend(r?);
        }
    }
    let mut spaces = Vec::new();
    let mut zero_space = Subspace::zero(n);
    for (root, vecs) in blocks {
        if root.iter().any(|x| !x.re().is_zero()) {
            return Err(RootError::NonImaginaryRoot(root_strings(&root)));
        }
        let space = Subspace::new(n, &vecs)?;
        if root.iter().all(Zero::is_zero) {
            zero_space = space;
        } else {
            spaces.push(RootSpace { root, space });
        }
    }
    spaces.sort_by(|a, b| a.root.cmp(&b.root));
    let total: usize = zero_space.dim() + spaces.iter().map(|s| s.space.dim()).sum::<usize>();
    assert_eq!(total, n, "diagonalizable commuting family must decompose the space");
    let rd = RootDatum { torus_is_self_centralizing: zero_space == *t, torus: t.clone(), spaces, zero_space };
    check_grading(g, &rd)?;
    Ok(rd)
}

fn add_roots(a: &[GaussianRational], b: &[GaussianRational]) -> Root {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// `[𝔤_α, 𝔤_β] ⊆ 𝔤_{α+β}` (the zero space when `α+β = 0`, and `0` when
/// `α+β` is not a weight), over all pairs including the zero space.
pub fn check_grading(g: &ComplexLieAlgebra, rd: &RootDatum) -> Result<(), RootError> {
    let r = rd.rank();
    let zero = vec![GaussianRational::zero(); r];
    let mut all: Vec<(Root, &Subspace)> = vec![(zero, &rd.zero_space)];
    all.extend(rd.spaces.iter().map(|s| (s.root.clone(), &s.space)));
    for (a, sa) in &all {
        for (b, sb) in &all {
            let target = rd.space(&add_roots(a, b));
            for x in sa.basis() {
                for y in sb.basis() {
                    let br = g.bracket(&x, &y);
                    let ok = match target {
                        Some(s) => s.contains(&br),
                        None => br.iter().all(Zero::is_zero),
                    };
                    if !ok {
                        return Err(RootError::GradingViolation(root_strings(a), root_strings(b)));
                    }
                }
            }
        }
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PositiveSystem {
    pub positive_roots: Vec<Root>,
    /// `α, β ∈ Δ₊`, `α + β ∈ Δ` implies `α + β ∈ Δ₊`.
    pub closed: bool,
    /// Sums `α + β` of positive roots that are roots, with membership.
    pub closure_checks: Vec<ClosureCheck>,
    pub rule: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClosureCheck {
    pub alpha: Root,
    pub beta: Root,
    pub sum: Root,
    pub in_positive: bool,
}

fn lex_positive(root: &[GaussianRational]) -> bool {
    root.iter().find(|x| !x.is_zero()).is_some_and(|x| x.im() > &num_rational::BigRational::zero())
}

fn assemble(rd: &RootDatum, mut positive: Vec<Root>, rule: &str) -> PositiveSystem {
    positive.sort();
    let roots = rd.roots();
    let mut checks = Vec::new();
    for (i, a) in positive.iter().enumerate() {
        for b in &positive[i + 1..] {
            let s = add_roots(a, b);
            if roots.contains(&s) {
                checks.push(ClosureCheck {
                    alpha: a.clone(),
                    beta: b.clone(),
                    in_positive: positive.contains(&s),
                    sum: s,
                });
            }
        }
    }
    PositiveSystem { closed: checks.iter().all(|c| c.in_positive), positive_roots: positive, closure_checks: checks, rule: rule.into() }
}

/// `α ∈ Δ₊` iff the first nonzero entry of `α / i` is positive.
pub fn positive_system(rd: &RootDatum) -> PositiveSystem {
    let pos = rd.roots().into_iter().filter(|r| lex_positive(r)).collect();
    assemble(rd, pos, "lexicographic")
}

/// User-chosen `Δ₊`, validated as a sign choice; closure is reported.
pub fn positive_system_override(rd: &RootDatum, chosen: &[Root]) -> Result<PositiveSystem, RootError> {
    let roots = rd.roots();
    for c in chosen {
        if !roots.contains(c) {
            return Err(RootError::NotARoot(root_strings(c)));
        }
    }
    for r in &roots {
        let neg: Root = r.iter().map(|x| -x).collect();
        if chosen.contains(r) == chosen.contains(&neg) {
            return Err(RootError::NotASignChoice(root_strings(r)));
        }
    }
    let mut uniq: Vec<Root> = chosen.to_vec();
    uniq.sort();
    uniq.dedup();
    Ok(assemble(rd, uniq, "override"))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PredictedFlags {
    pub elliptic: bool,
    pub complex: bool,
    #[serde(rename = "CR")]
    pub cr: bool,
    pub essentially_real: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StandardStructure {
    pub subalgebra: Subspace,
    /// Span of the chosen torus directions `𝔲`.
    pub u: Subspace,
    pub predicted: PredictedFlags,
    pub verified: ClassificationReport,
    pub agrees: bool,
}

/// `𝔲 = span{T_1..T_s} ⊕ span{T_{s+1}+iT_{s+2}, …, T_{s+t−1}+iT_{s+t}}` and
/// `𝔥 = 𝔲 ⊕ ⨁_{α∈Δ₊} 𝔤_α`, where `T_j` is the echelon basis of the torus.
pub fn build_standard(
    g: &ComplexLieAlgebra,
    rd: &RootDatum,
    s: usize,
    t: usize,
    plus: &PositiveSystem,
) -> Result<StandardStructure, RootError> {
    let r = rd.rank();
    if s + t > r || t % 2 == 1 {
        return Err(RootError::InconsistentRank { s, t, rank: r });
    }
    let tb = rd.torus.basis();
    let mut u_vecs: Vec<Vector> = tb[..s].to_vec();
    for k in (s..s + t).step_by(2) {
        let v: Vector = tb[k].iter().zip(&tb[k + 1]).map(|(a, b)| a + &b.mul_i()).collect();
        u_vecs.push(v);
    }
    let u = Subspace::new(g.dim(), &u_vecs)?;
    let mut h_vecs = u_vecs.clone();
    for root in &plus.positive_roots {
        let sp = rd.space(root).ok_or_else(|| RootError::NotARoot(root_strings(root)))?;
        h_vecs.extend(sp.basis());
    }
    let h = Subspace::new(g.dim(), &h_vecs)?;
    if let Err((a, b)) = is_subalgebra(g, &h) {
        return Err(RootError::ClosureFailure(a, b));
    }
    let torus_full = rd.torus_is_self_centralizing;
    let predicted = PredictedFlags {
        elliptic: s + t == r && torus_full,
        complex: s == 0 && t == r && torus_full,
        cr: s == 0,
        essentially_real: t == 0 && rd.spaces.is_empty(),
    };
    let verified = classify_structure(g, &h);
    let agrees = predicted.elliptic == verified.elliptic
        && predicted.complex == verified.complex
        && predicted.cr == verified.cr
        && predicted.essentially_real == verified.essentially_real;
    Ok(StandardStructure { subalgebra: h, u, predicted, verified, agrees })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::builtin;

    fn g(s: &str) -> GaussianRational {
        s.parse().unwrap()
    }

    fn root(xs: &[&str]) -> Root {
        xs.iter().map(|x| g(x)).collect()
    }

    fn span(a: &crate::lie::LieAlgebra, names: &[&str]) -> Subspace {
        let vs: Vec<Vector> = names.iter().map(|n| a.resolve(n).unwrap()).collect();
        Subspace::new(a.dim(), &vs).unwrap()
    }

    #[test]
    fn su2_roots() {
        let a = builtin::su2();
        let c = a.complexify();
        let rd = root_decomposition(&c, &span(&a, &["T"])).unwrap();
        assert_eq!(rd.roots(), vec![root(&["-2i"]), root(&["2i"])]);
        assert_eq!(rd.space(&root(&["2i"])).unwrap(), &span(&a, &["L"]));
        assert_eq!(rd.space(&root(&["-2i"])).unwrap(), &span(&a, &["Lbar"]));
        assert!(rd.torus_is_self_centralizing);
        let plus = positive_system(&rd);
        assert_eq!(plus.positive_roots, vec![root(&["2i"])]);
        let st = build_standard(&c, &rd, 1, 0, &plus).unwrap();
        assert_eq!(st.subalgebra, span(&a, &["T", "L"]));
        assert!(st.agrees && st.verified.elliptic);
        let st = build_standard(&c, &rd, 0, 0, &plus).unwrap();
        assert!(st.agrees && st.verified.cr && !st.verified.elliptic);
        assert!(matches!(build_standard(&c, &rd, 1, 1, &plus), Err(RootError::InconsistentRank { .. })));
    }

    #[test]
    fn torus_has_no_roots() {
        let a = builtin::torus(3);
        let rd = root_decomposition(&a.complexify(), &Subspace::full(3)).unwrap();
        assert!(rd.spaces.is_empty());
        assert_eq!(rd.zero_space.dim(), 3);
        assert!(positive_system(&rd).positive_roots.is_empty());
    }

    #[test]
    fn non_abelian_torus_rejected() {
        let a = builtin::su2();
        let r = root_decomposition(&a.complexify(), &span(&a, &["T", "X"]));
        assert_eq!(r, Err(RootError::NonAbelianTorus(0, 1)));
    }

    #[test]
    fn su3_positive_systems() {
        let a = builtin::su3();
        let c = a.complexify();
        let rd = root_decomposition(&c, &span(&a, &["T1", "T2"])).unwrap();
        assert_eq!(rd.spaces.len(), 6);
        let lex = positive_system(&rd);
        assert_eq!(lex.positive_roots, vec![root(&["i", "-3i"]), root(&["i", "3i"]), root(&["2i", "0"])]);
        assert!(lex.closed);
        let chosen = vec![root(&["2i", "0"]), root(&["i", "3i"]), root(&["-i", "3i"])];
        let over = positive_system_override(&rd, &chosen).unwrap();
        assert!(over.closed);
        assert!(over.closure_checks.iter().any(|c| c.sum == root(&["i", "3i"]) && c.in_positive));
        let bad = vec![root(&["2i", "0"]), root(&["-2i", "0"])];
        assert!(positive_system_override(&rd, &bad).is_err());
        let st = build_standard(&c, &rd, 2, 0, &over).unwrap();
        assert_eq!(st.subalgebra, span(&a, &["L1", "L2", "L3", "T1", "T2"]));
        assert!(st.verified.elliptic && st.agrees);
    }
}
