//! Loading algebras, subalgebras, modules and matrices from arguments.

use std::collections::BTreeMap;
use std::io::ErrorKind;
use std::path::{Path, PathBuf};

use liecoh::cohomology::GModule;
use liecoh::lie::io::{parse_subalgebra, AlgebraJson, AlgebraRef};
use liecoh::lie::{builtin, is_subalgebra, parse_span, ComplexLieAlgebra, LieAlgebra, Subspace};
use liecoh::{ExactMatrix, GaussianRational, Vector};
use serde::Deserialize;
use serde_json::json;

use crate::error::CliError;

pub fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| match e.kind() {
        ErrorKind::NotFound => CliError::NoInput(format!("{}: no such file", path.display())),
        _ => CliError::NoInput(format!("{}: {e}", path.display())),
    })
}

fn parse_json<'a, T: Deserialize<'a>>(text: &'a str, path: &Path) -> Result<T, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::Malformed(format!("{}: {e}", path.display())))
}

/// `builtin:NAME`, a JSON file, or a bare builtin name.
pub fn load_algebra(arg: &str) -> Result<LieAlgebra, CliError> {
    if arg.starts_with("builtin:") {
        return Ok(builtin::lookup(arg)?);
    }
    let path = Path::new(arg);
    if !path.exists() {
        if let Ok(g) = builtin::lookup(arg) {
            return Ok(g);
        }
    }
    let text = read_file(path)?;
    let j: AlgebraJson = parse_json(&text, path)?;
    Ok(j.to_algebra()?)
}

/// Subalgebra vectors from `span{...}` or a JSON file. A file may name its
/// algebra, which is used when `algebra` is `None`.
pub fn load_vectors(arg: &str, algebra: Option<LieAlgebra>) -> Result<(LieAlgebra, Vec<Vector>), CliError> {
    if arg.trim_start().starts_with("span") {
        let g = algebra.ok_or_else(|| CliError::Usage("span{...} needs --algebra".into()))?;
        let vs = parse_span(&g, arg)?;
        return Ok((g, vs));
    }
    let path = Path::new(arg);
    let text = read_file(path)?;
    let sub = parse_subalgebra(&text).map_err(|e| CliError::Malformed(format!("{}: {e}", path.display())))?;
    let g = match (algebra, &sub.algebra) {
        (Some(g), _) => g,
        (None, Some(AlgebraRef::Name(n))) => match builtin::lookup(n) {
            Ok(g) => g,
            Err(_) => load_algebra(&sibling(path, n).to_string_lossy())?,
        },
        (None, Some(AlgebraRef::Inline(j))) => j.to_algebra()?,
        (None, None) => return Err(CliError::Usage(format!("{}: no algebra given; pass --algebra", path.display()))),
    };
    let vs = sub.vectors_in(&g)?;
    Ok((g, vs))
}

fn sibling(path: &Path, name: &str) -> PathBuf {
    let p = Path::new(name);
    if p.is_absolute() {
        return p.to_path_buf();
    }
    path.parent().map_or_else(|| p.to_path_buf(), |d| d.join(p))
}

/// A bracket-closed subspace of the complexification.
pub fn load_subalgebra(
    arg: &str,
    algebra: Option<LieAlgebra>,
) -> Result<(LieAlgebra, ComplexLieAlgebra, Subspace), CliError> {
    let (g, vs) = load_vectors(arg, algebra)?;
    let c = g.complexify();
    let s = Subspace::new(g.dim(), &vs)?;
    closed(&c, &s)?;
    Ok((g, c, s))
}

pub fn closed(g: &ComplexLieAlgebra, s: &Subspace) -> Result<(), CliError> {
    is_subalgebra(g, s).map_err(|(a, b)| {
        let basis = s.basis();
        let (x, y) = (g.format_vector(&basis[a]), g.format_vector(&basis[b]));
        CliError::math(format!("not a subalgebra: [{x}, {y}] leaves the span"), json!({"not_closed": [x, y]}))
    })
}

/// `--algebra` if given, loaded.
pub fn optional_algebra(arg: Option<&str>) -> Result<Option<LieAlgebra>, CliError> {
    arg.map(load_algebra).transpose()
}

pub fn require_algebra(arg: Option<&str>) -> Result<LieAlgebra, CliError> {
    optional_algebra(arg)?.ok_or_else(|| CliError::Usage("--algebra is required".into()))
}

type JsonMatrix = Vec<Vec<GaussianRational>>;

fn matrix(rows: JsonMatrix, n: usize, what: &str) -> Result<ExactMatrix, CliError> {
    if rows.len() != n || rows.iter().any(|r| r.len() != n) {
        return Err(CliError::Malformed(format!("{what} must be {n}x{n}")));
    }
    Ok(ExactMatrix::from_rows(rows))
}

/// Inner product as a JSON matrix of scalar strings.
pub fn load_gram(arg: &str, n: usize) -> Result<ExactMatrix, CliError> {
    let path = Path::new(arg);
    let text = read_file(path)?;
    matrix(parse_json(&text, path)?, n, "inner product")
}

#[derive(Deserialize)]
struct ModuleJson {
    dim: usize,
    actions: BTreeMap<String, JsonMatrix>,
}

/// `trivial`, `adjoint`, or a JSON file `{"dim": n, "actions": {"T": [[...]]}}`;
/// omitted basis elements act by zero.
pub fn load_module(arg: &str, g: &LieAlgebra, c: &ComplexLieAlgebra) -> Result<GModule, CliError> {
    match arg {
        "trivial" => return Ok(GModule::trivial(c)),
        "adjoint" => return Ok(GModule::adjoint(c)),
        _ => {}
    }
    let path = Path::new(arg);
    let text = read_file(path)?;
    let raw: ModuleJson = parse_json(&text, path)?;
    let mut actions = vec![ExactMatrix::zeros(raw.dim, raw.dim); g.dim()];
    for (name, rows) in raw.actions {
        let j = g.index_of(&name).ok_or_else(|| CliError::Malformed(format!("unknown basis name {name:?}")))?;
        actions[j] = matrix(rows, raw.dim, &format!("action of {name}"))?;
    }
    GModule::new(c, raw.dim, actions).map_err(|e| match e {
        liecoh::cohomology::CohomologyError::NotAModule(a, b) => {
            let (x, y) = (&g.basis_names()[a], &g.basis_names()[b]);
            CliError::math(format!("not a module: rho([{x},{y}]) != [rho({x}),rho({y})]"), json!({"not_a_module": [x, y]}))
        }
        other => CliError::Malformed(other.to_string()),
    })
}

/// Covector as a combination of basis names read in the dual basis.
pub fn parse_covector(text: &str, g: &LieAlgebra) -> Result<Vector, CliError> {
    let n = g.dim();
    let lookup = |name: &str| g.index_of(name).map(|i| liecoh::linalg::unit_vector(n, i));
    Ok(liecoh::lie::parse_combination(text, n, lookup)?)
}

/// Roots as `a,b;c,d` (scalars in units of the torus basis).
pub fn parse_roots(text: &str) -> Result<Vec<Vector>, CliError> {
    text.split(';')
        .map(|r| {
            r.split(',')
                .map(|x| x.trim().parse::<GaussianRational>().map_err(|e| CliError::Malformed(format!("root {r:?}: {e}"))))
                .collect()
        })
        .collect()
}
