//! The sets `S` (distance-`s` pairs) and `T` (antipodal pairs) of
//! `KG(2s+2,2)_{s-stab}`, written out by extension.

use crate::families::{FamilyError, KSubset};
use crate::modn::wrap;

fn pair(a: usize, b: usize, n: usize) -> KSubset {
    KSubset::from_residues([a as i64, b as i64], n).expect("distinct residues")
}

/// `S = {{i,i+s} : i ∈ [s+2]} ∪ {{i,i+s+2} : i ∈ [s]}`, indices modulo `[2s+2]`.
pub fn s_set(s: usize) -> Result<Vec<KSubset>, FamilyError> {
    check(s)?;
    let n = 2 * s + 2;
    Ok((1..=s + 2)
        .map(|i| pair(i, wrap((i + s) as i64, n), n))
        .chain((1..=s).map(|i| pair(i, wrap((i + s + 2) as i64, n), n)))
        .collect())
}

/// `T = {{i,i+s+1} : i ∈ [s+1]}`.
pub fn t_set(s: usize) -> Result<Vec<KSubset>, FamilyError> {
    check(s)?;
    let n = 2 * s + 2;
    Ok((1..=s + 1).map(|i| pair(i, i + s + 1, n)).collect())
}

fn check(s: usize) -> Result<(), FamilyError> {
    if s < 2 {
        return Err(FamilyError::InvalidParameters(format!("S/T sets need s >= 2, got {s}")));
    }
    Ok(())
}
