//! JSON interchange for algebras and subalgebras.
//!
//! ```json
//! {"name": "su2", "basis": ["T", "X", "Y"],
//!  "brackets": [{"on": ["T", "X"], "result": {"Y": "2"}}, ...]}
//! ```
//!
//! Subalgebras: `{"algebra": "builtin:su2" | {...}, "vectors": [{"X": "1", "Y": "-i"}]}`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::algebra::LieAlgebra;
use super::{builtin, LieError};
use crate::linalg::{axpy, Vector};
use crate::scalar::GaussianRational;
use num_traits::Zero;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BracketJson {
    pub on: [String; 2],
    pub result: BTreeMap<String, GaussianRational>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AlgebraJson {
    pub name: String,
    pub basis: Vec<String>,
    #[serde(default)]
    pub brackets: Vec<BracketJson>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub aliases: BTreeMap<String, BTreeMap<String, GaussianRational>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum AlgebraRef {
    Name(String),
    Inline(AlgebraJson),
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SubalgebraJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub algebra: Option<AlgebraRef>,
    pub vectors: Vec<BTreeMap<String, GaussianRational>>,
}

impl AlgebraJson {
    pub fn to_algebra(&self) -> Result<LieAlgebra, LieError> {
        let idx = |n: &str| {
            self.basis.iter().position(|b| b == n).ok_or_else(|| LieError::UnknownName(n.to_string()))
        };
        let mut brackets = Vec::new();
        for b in &self.brackets {
            let (j, k) = (idx(&b.on[0])?, idx(&b.on[1])?);
            if j >= k {
                return Err(LieError::InvalidPair { j, k });
            }
            let mut terms = Vec::new();
            for (name, c) in &b.result {
                if !c.is_real() {
                    return Err(LieError::NonRealConstant { pair: b.on.clone(), value: c.to_string() });
                }
                terms.push((idx(name)?, c.re().clone()));
            }
            brackets.push(((j, k), terms));
        }
        let mut g = LieAlgebra::new(self.name.clone(), self.basis.clone(), brackets)?;
        for (name, coeffs) in &self.aliases {
            let v = combination_from_map(&g, coeffs)?;
            g = g.with_alias(name.clone(), v)?;
        }
        Ok(g)
    }

    pub fn from_algebra(g: &LieAlgebra) -> Self {
        let names = g.basis_names();
        let brackets = g
            .stored_brackets()
            .map(|(&(j, k), terms)| BracketJson {
                on: [names[j].clone(), names[k].clone()],
                result: terms.iter().map(|(l, c)| (names[*l].clone(), GaussianRational::from_real(c.clone()))).collect(),
            })
            .collect();
        let aliases = g
            .aliases()
            .iter()
            .map(|(a, v)| {
                let m = names.iter().zip(v).filter(|(_, c)| !c.is_zero()).map(|(n, c)| (n.clone(), c.clone())).collect();
                (a.clone(), m)
            })
            .collect();
        Self { name: g.name().to_string(), basis: names.to_vec(), brackets, aliases }
    }
}

impl AlgebraRef {
    /// Builtin names only; file paths are resolved by the caller.
    pub fn to_algebra(&self) -> Result<LieAlgebra, LieError> {
        match self {
            AlgebraRef::Name(n) => builtin::lookup(n),
            AlgebraRef::Inline(j) => j.to_algebra(),
        }
    }
}

/// `Σ c · name` where names are basis elements or aliases.
pub fn combination_from_map(g: &LieAlgebra, coeffs: &BTreeMap<String, GaussianRational>) -> Result<Vector, LieError> {
    let mut v = vec![GaussianRational::zero(); g.dim()];
    for (name, c) in coeffs {
        let e = g.resolve(name).ok_or_else(|| LieError::UnknownName(name.clone()))?;
        axpy(&mut v, c, &e);
    }
    Ok(v)
}

pub fn parse_algebra(text: &str) -> Result<LieAlgebra, LieError> {
    let j: AlgebraJson = serde_json::from_str(text).map_err(|e| LieError::Json(e.to_string()))?;
    j.to_algebra()
}

pub fn parse_subalgebra(text: &str) -> Result<SubalgebraJson, LieError> {
    serde_json::from_str(text).map_err(|e| LieError::Json(e.to_string()))
}

impl SubalgebraJson {
    pub fn vectors_in(&self, g: &LieAlgebra) -> Result<Vec<Vector>, LieError> {
        self.vectors.iter().map(|m| combination_from_map(g, m)).collect()
    }
}
