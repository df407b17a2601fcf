//! The operator `L = ∂x − μ∂y` on the two-torus: singular frequencies,
//! a truncated Fourier solver and continued-fraction divisor diagnostics.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::scalar::GaussianRational;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum TorusError {
    #[error("continued fraction has no quotients")]
    Empty,
    #[error("partial quotient a_{index} must be at least 1")]
    BadQuotient { index: usize },
    #[error("need {needed} partial quotients for depth {depth}, got {got}")]
    InsufficientDepth { depth: usize, needed: usize, got: usize },
    #[error("cannot parse {0:?}")]
    Parse(String),
    #[error("frequency ({xi},{eta}) lies outside cutoff {cutoff}")]
    OutsideCutoff { xi: i64, eta: i64, cutoff: i64 },
    #[error("frequency ({xi},{eta}) given twice")]
    DuplicateFrequency { xi: i64, eta: i64 },
    #[error("cutoff must be non-negative")]
    NegativeCutoff,
}

fn ser_display<T: fmt::Display, S: Serializer>(v: &T, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}

fn ser_display_vec<T: fmt::Display, S: Serializer>(v: &[T], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(ToString::to_string))
}

/// `[a₀; a₁, a₂, …]`. A `truncated` fraction is a prefix of an infinite
/// (irrational) expansion; otherwise it denotes the rational it evaluates to.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ContinuedFraction {
    #[serde(serialize_with = "ser_display_vec")]
    quotients: Vec<BigInt>,
    truncated: bool,
}

impl ContinuedFraction {
    /// Finite fractions are canonicalized so the last quotient is at least 2.
    pub fn new(quotients: Vec<BigInt>, truncated: bool) -> Result<Self, TorusError> {
        if quotients.is_empty() {
            return Err(TorusError::Empty);
        }
        if let Some(index) = quotients.iter().skip(1).position(|a| a < &BigInt::one()) {
            return Err(TorusError::BadQuotient { index: index + 1 });
        }
        let mut quotients = quotients;
        if !truncated && quotients.len() > 1 && quotients.last().is_some_and(BigInt::is_one) {
            quotients.pop();
            *quotients.last_mut().expect("length > 1") += 1;
        }
        Ok(Self { quotients, truncated })
    }

    pub fn from_ints(quotients: &[i64], truncated: bool) -> Result<Self, TorusError> {
        Self::new(quotients.iter().map(|&a| BigInt::from(a)).collect(), truncated)
    }

    pub fn of_rational(mu: &BigRational) -> Self {
        let (mut n, mut d) = (mu.numer().clone(), mu.denom().clone());
        let mut quotients = Vec::new();
        while !d.is_zero() {
            let (a, r) = n.div_mod_floor(&d);
            quotients.push(a);
            n = std::mem::replace(&mut d, r);
        }
        Self::new(quotients, false).expect("euclid quotients are positive")
    }

    pub fn quotients(&self) -> &[BigInt] {
        &self.quotients
    }

    pub fn is_truncated(&self) -> bool {
        self.truncated
    }

    /// Value of the given quotients read as a finite fraction.
    pub fn value(&self) -> BigRational {
        let (p, q) = convergents(&self.quotients).pop().expect("non-empty");
        BigRational::new(p, q)
    }
}

impl fmt::Display for ContinuedFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}", self.quotients[0])?;
        for (i, a) in self.quotients.iter().enumerate().skip(1) {
            write!(f, "{}{a}", if i == 1 { ";" } else { "," })?;
        }
        if self.truncated {
            write!(f, "{}...", if self.quotients.len() == 1 { ";" } else { "," })?;
        }
        write!(f, "]")
    }
}

/// Accepts `1,1,1`, `[1;1,1]` and a trailing `...` for a truncated expansion.
impl FromStr for ContinuedFraction {
    type Err = TorusError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || TorusError::Parse(s.to_string());
        let body = s.trim().trim_start_matches('[').trim_end_matches(']').replace(';', ",");
        let mut parts: Vec<&str> = body.split(',').map(str::trim).collect();
        let truncated = matches!(parts.last(), Some(&"...") | Some(&"…"));
        if truncated {
            parts.pop();
        }
        let quotients = parts.iter().map(|p| p.parse::<BigInt>().map_err(|_| bad())).collect::<Result<_, _>>()?;
        Self::new(quotients, truncated)
    }
}

/// `p_j / q_j` for `j = 0..len`.
pub fn convergents(quotients: &[BigInt]) -> Vec<(BigInt, BigInt)> {
    let (mut p2, mut p1) = (BigInt::zero(), BigInt::one());
    let (mut q2, mut q1) = (BigInt::one(), BigInt::zero());
    quotients
        .iter()
        .map(|a| {
            let p = a * &p1 + &p2;
            let q = a * &q1 + &q2;
            p2 = std::mem::replace(&mut p1, p.clone());
            q2 = std::mem::replace(&mut q1, q.clone());
            (p, q)
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum MuSpec {
    Rational {
        #[serde(serialize_with = "ser_display")]
        value: BigRational,
    },
    ContinuedFraction {
        #[serde(serialize_with = "ser_display")]
        cf: ContinuedFraction,
    },
}

impl MuSpec {
    pub fn rational(value: BigRational) -> Self {
        MuSpec::Rational { value }
    }

    /// The exact `μ` used by the solver, with a note when a truncated
    /// expansion had to be replaced by its deepest convergent.
    pub fn working_value(&self) -> (BigRational, Option<String>) {
        match self {
            MuSpec::Rational { value } => (value.clone(), None),
            MuSpec::ContinuedFraction { cf } => {
                let v = cf.value();
                let note = cf.truncated.then(|| format!("mu {cf} replaced by its deepest convergent {v}"));
                (v, note)
            }
        }
    }
}

/// All `k·(p, q)` with `μ = p/q` and both coordinates bounded by `bound`,
/// in ascending `k`.
pub fn singular_lattice(mu: &BigRational, bound: i64) -> Vec<(i64, i64)> {
    let (p, q) = (mu.numer().to_i64(), mu.denom().to_i64());
    let (Some(p), Some(q)) = (p, q) else {
        return vec![(0, 0)];
    };
    let step = p.abs().max(q);
    let kmax = bound / step;
    (-kmax..=kmax).map(|k| (k * p, k * q)).collect()
}

/// `ξ − μη`, so that `L e^{i(ξx+ηy)} = i(ξ − μη) e^{i(ξx+ηy)}`.
fn symbol(mu: &BigRational, xi: i64, eta: i64) -> BigRational {
    BigRational::from_integer(xi.into()) - mu * BigRational::from_integer(eta.into())
}

/// Finitely supported Fourier coefficients `f̂(ξ, η)` with `|ξ|, |η| ≤ cutoff`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FourierData {
    pub cutoff: i64,
    pub coefficients: BTreeMap<(i64, i64), GaussianRational>,
}

#[derive(Serialize, Deserialize)]
struct CoefficientJson {
    xi: i64,
    eta: i64,
    value: GaussianRational,
}

#[derive(Serialize, Deserialize)]
struct FourierJson {
    cutoff: i64,
    coefficients: Vec<CoefficientJson>,
}

impl FourierData {
    pub fn new(cutoff: i64, entries: impl IntoIterator<Item = ((i64, i64), GaussianRational)>) -> Result<Self, TorusError> {
        if cutoff < 0 {
            return Err(TorusError::NegativeCutoff);
        }
        let mut coefficients = BTreeMap::new();
        for ((xi, eta), v) in entries {
            if xi.abs() > cutoff || eta.abs() > cutoff {
                return Err(TorusError::OutsideCutoff { xi, eta, cutoff });
            }
            if coefficients.insert((xi, eta), v).is_some() {
                return Err(TorusError::DuplicateFrequency { xi, eta });
            }
        }
        coefficients.retain(|_, v: &mut GaussianRational| !v.is_zero());
        Ok(Self { cutoff, coefficients })
    }

    pub fn get(&self, xi: i64, eta: i64) -> GaussianRational {
        self.coefficients.get(&(xi, eta)).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    pub fn support(&self) -> Vec<(i64, i64)> {
        self.coefficients.keys().copied().collect()
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.coefficients.clone();
        for (k, v) in &other.coefficients {
            *out.entry(*k).or_default() -= v;
        }
        out.retain(|_, v| !v.is_zero());
        Self { cutoff: self.cutoff.max(other.cutoff), coefficients: out }
    }
}

impl Serialize for FourierData {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        FourierJson {
            cutoff: self.cutoff,
            coefficients: self
                .coefficients
                .iter()
                .map(|(&(xi, eta), v)| CoefficientJson { xi, eta, value: v.clone() })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for FourierData {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = FourierJson::deserialize(d)?;
        Self::new(raw.cutoff, raw.coefficients.into_iter().map(|c| ((c.xi, c.eta), c.value)))
            .map_err(serde::de::Error::custom)
    }
}

/// `L u` for `L = ∂x − μ∂y`.
pub fn apply_operator(mu: &BigRational, u: &FourierData) -> FourierData {
    let coefficients = u
        .coefficients
        .par_iter()
        .map(|(&(xi, eta), v)| ((xi, eta), &GaussianRational::new(BigRational::zero(), symbol(mu, xi, eta)) * v))
        .filter(|(_, v)| !v.is_zero())
        .collect();
    FourierData { cutoff: u.cutoff, coefficients }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TorusSolution {
    #[serde(serialize_with = "ser_display")]
    pub mu: BigRational,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub substitution: Option<String>,
    pub u: FourierData,
    /// Singular frequencies where `f̂ ≠ 0`.
    pub obstructions: Vec<(i64, i64)>,
    /// `L u − f`.
    pub residual: FourierData,
    /// The residual is supported on the obstruction set.
    pub residual_ok: bool,
}

/// `û(ξ, η) = f̂(ξ, η) / (i(ξ − μη))` off the singular set.
pub fn solve_dprime(mu: &MuSpec, f: &FourierData) -> TorusSolution {
    let (mu, substitution) = mu.working_value();
    let solved: Vec<Result<((i64, i64), GaussianRational), (i64, i64)>> = f
        .coefficients
        .par_iter()
        .map(|(&(xi, eta), v)| {
            let s = symbol(&mu, xi, eta);
            if s.is_zero() {
                return Err((xi, eta));
            }
            let inv = GaussianRational::new(BigRational::zero(), s).inv().expect("nonzero symbol");
            Ok(((xi, eta), v * &inv))
        })
        .collect();
    let mut coefficients = BTreeMap::new();
    let mut obstructions = Vec::new();
    for r in solved {
        match r {
            Ok((k, v)) => {
                coefficients.insert(k, v);
            }
            Err(k) => obstructions.push(k),
        }
    }
    let u = FourierData { cutoff: f.cutoff, coefficients };
    let residual = apply_operator(&mu, &u).sub(f);
    let residual_ok = residual.coefficients.keys().all(|k| obstructions.contains(k));
    TorusSolution { mu, substitution, u, obstructions, residual, residual_ok }
}

/// Largest partial quotient (beyond `a₀`) still counted as bounded.
pub const BOUNDED_QUOTIENT_CAP: u32 = 100;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum InequalityStatus {
    Holds,
    Fails,
    Undetermined,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DivisorRow {
    pub j: usize,
    #[serde(serialize_with = "ser_display")]
    pub p: BigInt,
    #[serde(serialize_with = "ser_display")]
    pub q: BigInt,
    /// Exact enclosure of `|p_j − μ q_j|`.
    #[serde(serialize_with = "ser_display")]
    pub divisor_low: BigRational,
    #[serde(serialize_with = "ser_display")]
    pub divisor_high: BigRational,
    /// `(p_j² + q_j²)^{−j}`.
    #[serde(serialize_with = "ser_display")]
    pub threshold: BigRational,
    pub status: InequalityStatus,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Rational,
    LiouvilleEvidence,
    DiophantineEvidence,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DivisorReport {
    #[serde(serialize_with = "ser_display")]
    pub cf: ContinuedFraction,
    pub depth: usize,
    /// `μ` lies in `[low, high]`.
    #[serde(serialize_with = "ser_display_vec")]
    pub enclosure: Vec<BigRational>,
    pub rows: Vec<DivisorRow>,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub j0: Option<usize>,
    pub notes: Vec<String>,
}

fn enclosure(cf: &ContinuedFraction) -> (BigRational, BigRational) {
    let conv = convergents(&cf.quotients);
    let (pn, qn) = conv.last().expect("non-empty").clone();
    let last = BigRational::new(pn.clone(), qn.clone());
    if !cf.truncated {
        return (last.clone(), last);
    }
    // μ = [a₀; …, a_n, t] with t ≥ 1: the convergent (t → ∞) and the mediant (t = 1).
    let (pm, qm) = if conv.len() >= 2 { conv[conv.len() - 2].clone() } else { (BigInt::one(), BigInt::zero()) };
    let mediant = BigRational::new(&pn + pm, &qn + qm);
    if last < mediant {
        (last, mediant)
    } else {
        (mediant, last)
    }
}

fn window(p: &BigInt, q: &BigInt, lo: &BigRational, hi: &BigRational) -> (BigRational, BigRational) {
    let c = BigRational::new(p.clone(), q.clone());
    let q = BigRational::from_integer(q.clone());
    let (a, b) = ((lo - &c).abs(), (hi - &c).abs());
    if &c < lo || &c > hi {
        (&q * a.clone().min(b.clone()), &q * a.max(b))
    } else {
        (BigRational::zero(), &q * a.max(b))
    }
}

/// Compares `|p_j − μq_j|` against `(p_j² + q_j²)^{−j}` for `j = 0..=depth`.
/// Verdicts are evidence from finitely many quotients, never proofs.
pub fn liouville_report(cf: &ContinuedFraction, depth: usize) -> Result<DivisorReport, TorusError> {
    let len = cf.quotients.len();
    if cf.truncated && len < depth + 1 {
        return Err(TorusError::InsufficientDepth { depth, needed: depth + 1, got: len });
    }
    let depth = if cf.truncated { depth } else { depth.min(len - 1) };
    let conv = convergents(&cf.quotients);
    let (lo, hi) = enclosure(cf);
    let rows: Vec<DivisorRow> = (0..=depth)
        .into_par_iter()
        .map(|j| {
            let (p, q) = conv[j].clone();
            let (divisor_low, divisor_high) = window(&p, &q, &lo, &hi);
            let base: BigInt = &p * &p + &q * &q;
            let threshold = BigRational::new(BigInt::one(), num_traits::pow(base, j));
            let status = if divisor_high <= threshold {
                InequalityStatus::Holds
            } else if divisor_low > threshold {
                InequalityStatus::Fails
            } else {
                InequalityStatus::Undetermined
            };
            DivisorRow { j, p, q, divisor_low, divisor_high, threshold, status }
        })
        .collect();

    let mut notes = Vec::new();
    let (verdict, j0) = if !cf.truncated {
        notes.push("rational: infinite-dimensional H^{0,1}, range closed".into());
        (Verdict::Rational, None)
    } else {
        let deepest = len - 1;
        let ok = |r: &DivisorRow| {
            r.status == InequalityStatus::Holds || (r.j == deepest && r.status == InequalityStatus::Undetermined)
        };
        let j0 = (1..depth).find(|&j0| rows[j0..].iter().all(ok));
        let cap = BigInt::from(BOUNDED_QUOTIENT_CAP);
        let bounded = cf.quotients[1..=depth].iter().all(|a| a <= &cap);
        if j0.is_some() {
            notes.push("range of L is not closed if the inequality persists for all j".into());
            (Verdict::LiouvilleEvidence, j0)
        } else if bounded {
            notes.push(format!("partial quotients up to depth {depth} are at most {BOUNDED_QUOTIENT_CAP}"));
            (Verdict::DiophantineEvidence, None)
        } else {
            (Verdict::Inconclusive, None)
        }
    };
    Ok(DivisorReport { cf: cf.clone(), depth, enclosure: vec![lo, hi], rows, verdict, j0, notes })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ratio(p: i64, q: i64) -> BigRational {
        BigRational::new(p.into(), q.into())
    }

    #[test]
    fn lattice_examples() {
        assert_eq!(singular_lattice(&ratio(2, 3), 10), vec![(-6, -9), (-4, -6), (-2, -3), (0, 0), (2, 3), (4, 6), (6, 9)]);
        assert_eq!(singular_lattice(&ratio(0, 1), 2), vec![(0, -2), (0, -1), (0, 0), (0, 1), (0, 2)]);
        assert_eq!(singular_lattice(&ratio(-5, 7), 0), vec![(0, 0)]);
    }

    #[test]
    fn single_mode_solve() {
        let mu = MuSpec::rational(ratio(2, 3));
        let f = FourierData::new(3, [((1, 1), GaussianRational::from_int(1))]).unwrap();
        let s = solve_dprime(&mu, &f);
        assert_eq!(s.u.get(1, 1), "-3i".parse().unwrap());
        assert!(s.obstructions.is_empty());
        assert!(s.residual.is_zero());

        let g = FourierData::new(3, [((2, 3), GaussianRational::from_int(1))]).unwrap();
        let s = solve_dprime(&mu, &g);
        assert!(s.u.is_zero());
        assert_eq!(s.obstructions, vec![(2, 3)]);
        assert!(s.residual_ok);
    }

    #[test]
    fn cf_parsing_and_canonical_form() {
        let cf: ContinuedFraction = "[0;1,1,1]".parse().unwrap();
        assert_eq!(cf.quotients(), &[BigInt::from(0), BigInt::from(1), BigInt::from(2)]);
        assert_eq!(cf.value(), ratio(2, 3));
        assert_eq!(ContinuedFraction::of_rational(&ratio(2, 3)), cf);
        let gold: ContinuedFraction = "1,1,1,...".parse().unwrap();
        assert!(gold.is_truncated());
        assert_eq!(gold.to_string(), "[1;1,1,...]");
        assert_eq!("1,0".parse::<ContinuedFraction>(), Err(TorusError::BadQuotient { index: 1 }));
    }

    #[test]
    fn golden_ratio() {
        let cf = ContinuedFraction::from_ints(&[1; 12], true).unwrap();
        let r = liouville_report(&cf, 8).unwrap();
        assert_eq!(r.verdict, Verdict::DiophantineEvidence);
        assert_eq!(r.rows[1].status, InequalityStatus::Fails);
    }

    #[test]
    fn constructed_liouville() {
        let mut quotients = vec![BigInt::zero()];
        for j in 0..4u32 {
            let q = convergents(&quotients).pop().unwrap().1;
            quotients.push(num_traits::pow(q, 2 * j as usize));
        }
        assert_eq!(quotients[3], BigInt::from(16));
        let cf = ContinuedFraction::new(quotients, true).unwrap();
        let r = liouville_report(&cf, 4).unwrap();
        assert_eq!(r.verdict, Verdict::LiouvilleEvidence);
        assert_eq!(r.j0, Some(1));
        assert_eq!(r.rows[4].status, InequalityStatus::Undetermined);
    }

    #[test]
    fn rational_report_and_depth() {
        let r = liouville_report(&ContinuedFraction::of_rational(&ratio(2, 3)), 5).unwrap();
        assert_eq!(r.verdict, Verdict::Rational);
        assert_eq!(r.rows.last().unwrap().divisor_high, BigRational::zero());
        let short = ContinuedFraction::from_ints(&[1, 1], true).unwrap();
        assert!(matches!(liouville_report(&short, 4), Err(TorusError::InsufficientDepth { .. })));
    }
}
