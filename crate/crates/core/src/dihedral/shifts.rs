//! Shifts: automorphisms sending every vertex to a neighbour.

use std::collections::BTreeSet;

use serde::{Serialize, Serializer};

use super::{induced_automorphism, stable_parameters, DihedralElement, DihedralError, ElementKind};
use crate::exec::Exec;
use crate::families::KSubset;
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    BruteForce,
    LemmaFormula,
}

/// A set of shifts of `KG(n,k)_{s-stab}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftSet {
    pub n: usize,
    pub k: usize,
    pub s: usize,
    pub members: BTreeSet<DihedralElement>,
    pub provenance: Provenance,
}

impl ShiftSet {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, e: &DihedralElement) -> bool {
        self.members.contains(e)
    }

    /// Sorted element texts, e.g. `["r1", "r7"]`.
    pub fn texts(&self) -> Vec<String> {
        self.members.iter().map(|e| e.to_string()).collect()
    }

    /// Member-wise equality, ignoring provenance.
    pub fn same_members(&self, other: &ShiftSet) -> bool {
        self.members == other.members
    }

    pub fn is_inverse_closed(&self) -> bool {
        self.members.iter().all(|e| self.members.contains(&e.inverse()))
    }
}

impl Serialize for ShiftSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Wire {
            n: usize,
            k: usize,
            s: usize,
            members: Vec<String>,
            provenance: Provenance,
        }
        Wire {
            n: self.n,
            k: self.k,
            s: self.s,
            members: self.texts(),
            provenance: self.provenance,
        }
        .serialize(serializer)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ShiftVerdict {
    Shift,
    /// `witness` is not adjacent to its image.
    NotShift { witness: KSubset },
}

impl ShiftVerdict {
    pub fn is_shift(&self) -> bool {
        matches!(self, ShiftVerdict::Shift)
    }
}

/// Scans vertices in canonical order for one not adjacent to its image.
pub fn is_shift(e: &DihedralElement, g: &Graph) -> Result<ShiftVerdict, DihedralError> {
    let perm = induced_automorphism(e, g)?;
    Ok(match (0..g.order()).find(|&u| !g.has_edge(u, perm[u])) {
        None => ShiftVerdict::Shift,
        Some(u) => ShiftVerdict::NotShift {
            witness: g.label(u).and_then(|l| l.as_subset()).unwrap().clone(),
        },
    })
}

pub fn enumerate_shifts(g: &Graph) -> Result<ShiftSet, DihedralError> {
    enumerate_shifts_with(g, Exec::default())
}

/// Brute force over all `2n` group elements.
pub fn enumerate_shifts_with(g: &Graph, exec: Exec) -> Result<ShiftSet, DihedralError> {
    let (n, k, s) = stable_parameters(g)?;
    let elements = DihedralElement::all(n)?;
    let verdicts = exec.map(&elements, |e| is_shift(e, g));
    let mut members = BTreeSet::new();
    for (e, v) in elements.into_iter().zip(verdicts) {
        if v?.is_shift() {
            members.insert(e);
        }
    }
    Ok(ShiftSet { n, k, s, members, provenance: Provenance::BruteForce })
}

/// Which closed-form characterisation applies to `(n, k, s)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ShiftRegime {
    /// `n >= (k+1)s - 1`: exactly the `2(s-1)` short rotations.
    Wide,
    /// `sk + 1 <= n <= (k+1)s - 2`: short rotations plus middle bands.
    Narrow,
}

pub fn shift_regime(n: usize, k: usize, s: usize) -> Option<ShiftRegime> {
    if n < k * s + 1 {
        None
    } else if n + 1 >= (k + 1) * s {
        Some(ShiftRegime::Wide)
    } else {
        Some(ShiftRegime::Narrow)
    }
}

fn check_params(n: usize, k: usize, s: usize) -> Result<ShiftRegime, DihedralError> {
    if k < 2 || s < 2 {
        return Err(DihedralError::NoPrediction { n, k, s });
    }
    shift_regime(n, k, s).ok_or(DihedralError::NoPrediction { n, k, s })
}

/// Rotation indices of the closed-form shift set.
fn predicted_rotation_indices(n: usize, k: usize, s: usize, regime: ShiftRegime) -> BTreeSet<usize> {
    let mut idx: BTreeSet<usize> = (1..s).chain(n - s + 1..n).collect();
    if regime == ShiftRegime::Narrow {
        let r = n - s * k;
        // m ranges over [k-2]; empty when k = 2
        for m in 1..=k.saturating_sub(2) {
            idx.extend(m * s + r + 1..(m + 1) * s);
        }
    }
    idx
}

/// The closed-form shift set; rejects `n <= ks` where no characterisation applies.
pub fn predicted_shifts(n: usize, k: usize, s: usize) -> Result<ShiftSet, DihedralError> {
    let regime = check_params(n, k, s)?;
    let members = predicted_rotation_indices(n, k, s, regime)
        .into_iter()
        .map(|i| DihedralElement::rotation(n, i))
        .collect::<Result<_, _>>()?;
    Ok(ShiftSet { n, k, s, members, provenance: Provenance::LemmaFormula })
}

/// Constructs a vertex `v` with `v ∩ e(v) ≠ ∅`, certifying that `e` is not a
/// shift. The construction follows the element's kind:
///
/// * `ρ_i`: `{i-s, i, i+s, ..., i+(k-2)s}` contains the fixed point `i`;
/// * `δ_i`, `k >= 3`: `{i, i+s, ..., i+(k-2)s, i-s-1}` contains the swapped pair `i+s, i-s-1`;
/// * `δ_i`, `k = 2`: the swapped pair `{i+⌊s/2⌋, i-1-⌊s/2⌋}` itself;
/// * `σ^i`, wide regime, `s <= i < ks`: with `js <= i < (j+1)s`,
///   `{1+ts : t < j} ∪ {1+i+ts : t < k-j}`;
/// * `σ^i`, wide regime, `ks <= i <= n-s`: `{1, 1+s, ..., 1+(k-2)s, 1+i}`;
/// * `σ^i`, narrow regime, `i = ds + t` with `0 <= t <= n - sk`:
///   `{1, 1+s+t, 1+2s+t, ..., 1+(k-1)s+t}`.
///
/// The result is checked to be s-stable and to meet its image.
pub fn non_shift_witness(e: &DihedralElement, n: usize, k: usize, s: usize) -> Result<KSubset, DihedralError> {
    let regime = check_params(n, k, s)?;
    if e.ambient() != n {
        return Err(DihedralError::AmbientMismatch(e.ambient(), n));
    }
    let no_witness = || DihedralError::NoWitness(e.to_string());
    let (n64, k64, s64) = (n as i64, k as i64, s as i64);

    let points: Vec<i64> = match e.kind() {
        ElementKind::ReflRho(i) => {
            let i = i as i64;
            std::iter::once(i - s64).chain((0..k64 - 1).map(|t| i + t * s64)).collect()
        }
        ElementKind::ReflDelta(i) if k == 2 => {
            // {i, i-s-1} can be mapped off itself; use a δ_i-invariant pair instead
            let (i, h) = (i as i64, s64 / 2);
            vec![i + h, i - 1 - h]
        }
        ElementKind::ReflDelta(i) => {
            let i = i as i64;
            (0..k64 - 1).map(|t| i + t * s64).chain(std::iter::once(i - s64 - 1)).collect()
        }
        ElementKind::Rotation(i) => {
            if i == 0 || predicted_rotation_indices(n, k, s, regime).contains(&i) {
                return Err(no_witness());
            }
            let i = i as i64;
            match regime {
                ShiftRegime::Wide if i < k64 * s64 => {
                    let j = i / s64;
                    (0..j).map(|t| 1 + t * s64).chain((0..k64 - j).map(|t| 1 + i + t * s64)).collect()
                }
                ShiftRegime::Wide => (0..k64 - 1).map(|t| 1 + t * s64).chain(std::iter::once(1 + i)).collect(),
                ShiftRegime::Narrow => {
                    let r = n64 - s64 * k64;
                    let d = i / s64;
                    let t = i - d * s64;
                    if d < 1 || d > k64 - 1 || t > r {
                        return Err(no_witness());
                    }
                    std::iter::once(1).chain((1..k64).map(|m| 1 + m * s64 + t)).collect()
                }
            }
        }
    };

    let defect = |w: String| DihedralError::WitnessDefect { element: e.to_string(), witness: w };
    let v = KSubset::from_residues(points.iter().copied(), n).map_err(|_| defect(format!("{points:?}")))?;
    if v.k() != k || !v.is_s_stable(s) {
        return Err(defect(v.to_string()));
    }
    let image = super::act_on_vertex(e, &v)?;
    if image.is_disjoint(&v) {
        return Err(defect(v.to_string()));
    }
    Ok(v)
}
