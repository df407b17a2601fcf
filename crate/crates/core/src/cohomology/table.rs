use std::collections::BTreeMap;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::linalg::Vector;

/// Cohomological degree `k` or bidegree `(p, q)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Degree {
    Single(usize),
    Bi(usize, usize),
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::Single(k) => write!(f, "{k}"),
            Degree::Bi(p, q) => write!(f, "{p},{q}"),
        }
    }
}

impl Serialize for Degree {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Representatives of one degree: coordinate vectors over labelled cochains.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Representatives {
    pub basis: Vec<String>,
    pub vectors: Vec<Vector>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CohomologyTable {
    pub dims: BTreeMap<Degree, usize>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub representatives: BTreeMap<Degree, Representatives>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl CohomologyTable {
    pub fn from_series(dims: &[usize]) -> Self {
        Self { dims: dims.iter().enumerate().map(|(k, &d)| (Degree::Single(k), d)).collect(), ..Self::default() }
    }

    pub fn dim(&self, k: usize) -> usize {
        self.dims.get(&Degree::Single(k)).copied().unwrap_or(0)
    }

    pub fn bidim(&self, p: usize, q: usize) -> usize {
        self.dims.get(&Degree::Bi(p, q)).copied().unwrap_or(0)
    }

    /// Dims of single degrees `0..=max`, in order.
    pub fn series(&self) -> Vec<usize> {
        let max = self.dims.keys().filter_map(|d| if let Degree::Single(k) = d { Some(*k) } else { None }).max();
        max.map_or_else(Vec::new, |m| (0..=m).map(|k| self.dim(k)).collect())
    }

    /// `H^{p,·}` for `q = 0..=max_q`.
    pub fn row(&self, p: usize) -> Vec<usize> {
        let max_q = self.dims.keys().filter_map(|d| if let Degree::Bi(_, q) = d { Some(*q) } else { None }).max();
        max_q.map_or_else(Vec::new, |m| (0..=m).map(|q| self.bidim(p, q)).collect())
    }

    pub fn max_p(&self) -> Option<usize> {
        self.dims.keys().filter_map(|d| if let Degree::Bi(p, _) = d { Some(*p) } else { None }).max()
    }

    /// `Σ_p H^{p,q}` for each total `q` column.
    pub fn p_summed(&self) -> Vec<usize> {
        let mut out: Vec<usize> = Vec::new();
        for (d, &n) in &self.dims {
            if let Degree::Bi(_, q) = *d {
                if out.len() <= q {
                    out.resize(q + 1, 0);
                }
                out[q] += n;
            }
        }
        out
    }

    pub fn total_dimension(&self) -> usize {
        self.dims.values().sum()
    }

    /// Human-readable rendering: one line per degree or per `p`.
    pub fn render(&self) -> String {
        let mut s = String::new();
        if let Some(mp) = self.max_p() {
            for p in 0..=mp {
                let row: Vec<String> = self.row(p).iter().map(ToString::to_string).collect();
                s.push_str(&format!("H^{{{p},.}} = ({})\n", row.join(", ")));
            }
        } else {
            let row: Vec<String> = self.series().iter().map(ToString::to_string).collect();
            s.push_str(&format!("H^* = ({})\n", row.join(", ")));
        }
        for n in &self.notes {
            s.push_str(&format!("note: {n}\n"));
        }
        s
    }
}
