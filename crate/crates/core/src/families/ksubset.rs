use std::fmt;

use serde::{Deserialize, Serialize};

use super::FamilyError;
use crate::modn;

/// A k-subset of `[n]`, stored strictly ascending with 1-based elements.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct KSubset {
    elements: Vec<usize>,
    ambient: usize,
}

impl KSubset {
    /// Sorts `elements`; rejects repeats, zero, values above `n`, and the empty set.
    pub fn new(mut elements: Vec<usize>, n: usize) -> Result<Self, FamilyError> {
        elements.sort_unstable();
        if elements.is_empty() {
            return Err(FamilyError::InvalidSubset("empty subset".into()));
        }
        if elements[0] == 0 || *elements.last().unwrap() > n {
            return Err(FamilyError::InvalidSubset(format!(
                "{elements:?} is not inside [1, {n}]"
            )));
        }
        if elements.windows(2).any(|w| w[0] == w[1]) {
            return Err(FamilyError::InvalidSubset(format!("{elements:?} repeats an element")));
        }
        Ok(KSubset {
            elements,
            ambient: n,
        })
    }

    /// Builds from arbitrary integers reduced modulo `[n]`.
    pub fn from_residues(values: impl IntoIterator<Item = i64>, n: usize) -> Result<Self, FamilyError> {
        KSubset::new(values.into_iter().map(|x| modn::wrap(x, n)).collect(), n)
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn k(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    pub fn is_disjoint(&self, other: &KSubset) -> bool {
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.elements, &other.elements);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => return false,
            }
        }
        true
    }

    /// Clockwise gaps `l_1..l_k`: `v_{i+1} - v_i`, and `v_1 + n - v_k` last.
    /// Each is at least 1 and they sum to `n`.
    pub fn gaps(&self) -> Vec<usize> {
        let v = &self.elements;
        let mut gaps: Vec<usize> = v.windows(2).map(|w| w[1] - w[0]).collect();
        gaps.push(v[0] + self.ambient - v[v.len() - 1]);
        gaps
    }

    /// Every two distinct elements satisfy `s <= |i - j| <= n - s`.
    pub fn is_s_stable(&self, s: usize) -> bool {
        if self.k() == 1 {
            return true;
        }
        self.gaps().iter().all(|&g| g >= s)
    }
}

impl fmt::Display for KSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, x) in self.elements.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "}}")
    }
}

/// All k-subsets of `[n]` in lexicographic order.
pub fn enumerate_subsets(n: usize, k: usize) -> Vec<KSubset> {
    enumerate_with_min_gap(n, k, 1)
}

/// All s-stable k-subsets of `[n]`, lexicographically ordered. This order is
/// the vertex order of every stable Kneser graph.
pub fn enumerate_stable_subsets(n: usize, k: usize, s: usize) -> Vec<KSubset> {
    enumerate_with_min_gap(n, k, s.max(1))
}

fn enumerate_with_min_gap(n: usize, k: usize, s: usize) -> Vec<KSubset> {
    let mut out = Vec::new();
    if k == 0 || k > n {
        return out;
    }
    let mut cur = Vec::with_capacity(k);
    fn rec(n: usize, k: usize, s: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<KSubset>) {
        if cur.len() == k {
            let wrap_gap = cur[0] + n - cur[k - 1];
            if k == 1 || wrap_gap >= s {
                out.push(KSubset {
                    elements: cur.clone(),
                    ambient: n,
                });
            }
            return;
        }
        let remaining = k - cur.len() - 1;
        let mut x = start;
        while x + remaining * s <= n {
            cur.push(x);
            rec(n, k, s, x + s, cur, out);
            cur.pop();
            x += 1;
        }
    }
    rec(n, k, s, 1, &mut cur, &mut out);
    out
}
