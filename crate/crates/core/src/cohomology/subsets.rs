use std::collections::HashMap;

/// All `k`-subsets of `0..n`, lexicographic, with a reverse index.
#[derive(Clone, Debug)]
pub struct Subsets {
    pub list: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, usize>,
}

impl Subsets {
    pub fn new(n: usize, k: usize) -> Self {
        Self::from_list(combinations(n, k))
    }

    pub fn from_list(list: Vec<Vec<usize>>) -> Self {
        let index = list.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect();
        Self { list, index }
    }

    pub fn len(&self) -> usize {
        self.list.len()
    }

    pub fn is_empty(&self) -> bool {
        self.list.is_empty()
    }

    pub fn position(&self, s: &[usize]) -> Option<usize> {
        self.index.get(s).copied()
    }
}

pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        let Some(i) = (0..k).rev().find(|&i| cur[i] < n - k + i) else { break };
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
    out
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// Insert `x` into sorted `set`; returns the sorted set and the sign of the
/// permutation moving `x` from the front to its place, or `None` if `x`
/// already occurs.
pub fn insert_sorted(set: &[usize], x: usize) -> Option<(Vec<usize>, i64)> {
    let pos = set.partition_point(|&y| y < x);
    if set.get(pos) == Some(&x) {
        return None;
    }
    let mut out = Vec::with_capacity(set.len() + 1);
    out.extend_from_slice(&set[..pos]);
    out.push(x);
    out.extend_from_slice(&set[pos..]);
    Some((out, if pos % 2 == 0 { 1 } else { -1 }))
}

/// Replace the element at position `i` of sorted `set` by `x` and re-sort;
/// returns the set and the permutation sign, or `None` on a repeat.
pub fn replace_sorted(set: &[usize], i: usize, x: usize) -> Option<(Vec<usize>, i64)> {
    let mut rest: Vec<usize> = set.to_vec();
    rest.remove(i);
    let (out, s) = insert_sorted(&rest, x)?;
    // moving from position i to the front costs i transpositions
    let s = if i % 2 == 0 { s } else { -s };
    Some((out, s))
}
