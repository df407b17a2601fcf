//! Builtin real forms: `su2`, `su3` and the abelian `torus<r>`.

use num_rational::BigRational;

use super::algebra::LieAlgebra;
use super::LieError;
use crate::linalg::Vector;
use crate::scalar::GaussianRational;

fn table(name: &str, basis: &[&str], rows: &[(&str, &str, &[(&str, i64)])]) -> LieAlgebra {
    let idx = |n: &str| basis.iter().position(|b| *b == n).expect("known basis name");
    let brackets = rows.iter().map(|(a, b, terms)| {
        let (j, k) = (idx(a), idx(b));
        assert!(j < k);
        ((j, k), terms.iter().map(|(l, c)| (idx(l), BigRational::from_integer((*c).into()))).collect())
    });
    LieAlgebra::new(name, basis.iter().map(|s| s.to_string()).collect(), brackets).expect("valid builtin table")
}

/// `X − iY` and `X + iY` in a basis of dimension `n`.
fn pair(n: usize, x: usize, y: usize, sign: i64) -> Vector {
    let mut v = vec![GaussianRational::from_int(0); n];
    v[x] = GaussianRational::from_int(1);
    v[y] = GaussianRational::from_parts(0, sign);
    v
}

pub fn su2() -> LieAlgebra {
    let g = table("su2", &["T", "X", "Y"], &[("T", "X", &[("Y", 2)]), ("T", "Y", &[("X", -2)]), ("X", "Y", &[("T", 2)])]);
    g.with_alias("L", pair(3, 1, 2, -1)).and_then(|g| g.with_alias("Lbar", pair(3, 1, 2, 1))).expect("fresh aliases")
}

pub fn su3() -> LieAlgebra {
    let basis = ["T1", "T2", "X1", "Y1", "X2", "Y2", "X3", "Y3"];
    let rows: &[(&str, &str, &[(&str, i64)])] = &[
        ("T1", "X1", &[("Y1", 2)]),
        ("T1", "Y1", &[("X1", -2)]),
        ("T1", "X2", &[("Y2", 1)]),
        ("T1", "Y2", &[("X2", -1)]),
        ("T1", "X3", &[("Y3", -1)]),
        ("T1", "Y3", &[("X3", 1)]),
        ("T2", "X2", &[("Y2", 3)]),
        ("T2", "Y2", &[("X2", -3)]),
        ("T2", "X3", &[("Y3", 3)]),
        ("T2", "Y3", &[("X3", -3)]),
        ("X1", "Y1", &[("T1", 2)]),
        ("X1", "X2", &[("Y3", 1)]),
        ("X1", "Y2", &[("X3", -1)]),
        ("X1", "X3", &[("Y2", 1)]),
        ("X1", "Y3", &[("X2", -1)]),
        ("Y1", "X2", &[("X3", 1)]),
        ("Y1", "Y2", &[("Y3", 1)]),
        ("Y1", "X3", &[("X2", -1)]),
        ("Y1", "Y3", &[("Y2", -1)]),
        ("X2", "Y2", &[("T1", 1), ("T2", 1)]),
        ("X2", "X3", &[("Y1", 1)]),
        ("X2", "Y3", &[("X1", 1)]),
        ("Y2", "X3", &[("X1", -1)]),
        ("Y2", "Y3", &[("Y1", 1)]),
        ("X3", "Y3", &[("T1", -1), ("T2", 1)]),
    ];
    let mut g = table("su3", &basis, rows);
    for k in 1..=3 {
        let (x, y) = (2 * k, 2 * k + 1);
        g = g.with_alias(format!("L{k}"), pair(8, x, y, -1)).expect("fresh alias");
        g = g.with_alias(format!("Lbar{k}"), pair(8, x, y, 1)).expect("fresh alias");
    }
    g
}

/// Abelian algebra of rank `r` with basis `x1, …, xr`.
pub fn torus(r: usize) -> LieAlgebra {
    LieAlgebra::abelian(format!("torus{r}"), (1..=r).map(|i| format!("x{i}")).collect()).expect("distinct names")
}

/// Resolve `su2`, `su3`, `torus<r>` or `torus(<r>)`, with or without the
/// `builtin:` prefix.
pub fn lookup(name: &str) -> Result<LieAlgebra, LieError> {
    let bare = name.strip_prefix("builtin:").unwrap_or(name);
    match bare {
        "su2" => return Ok(su2()),
        "su3" => return Ok(su3()),
        _ => {}
    }
    let rank = bare
        .strip_prefix("torus")
        .map(|r| r.trim_start_matches('(').trim_end_matches(')'))
        .and_then(|r| r.parse::<usize>().ok());
    match rank {
        Some(r) if r >= 1 => Ok(torus(r)),
        _ => Err(LieError::UnknownBuiltin(name.to_string())),
    }
}
