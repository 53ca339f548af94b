//! Known closed forms for the chromatic number.

use serde::{Deserialize, Serialize};

use super::HomError;
use crate::families::FamilySpec;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChiFormula {
    pub value: usize,
    /// `false` for conjectured values.
    pub proven: bool,
    /// The formula that produced `value`.
    pub source: String,
}

fn proven(value: usize, source: &str) -> ChiFormula {
    ChiFormula { value, proven: true, source: source.into() }
}

/// `χ` from a closed form.
///
/// Stable Kneser graphs are covered by theorems for `s = 2`, `n = ks`
/// (a complete graph), `n = ks + 1` and `(k, n) = (2, 2s + 2)`; every other
/// stable instance gets the conjectured `n - (k-1)s` with `proven = false`.
pub fn closed_form_chi(spec: &FamilySpec) -> Result<ChiFormula, HomError> {
    spec.build()?;
    Ok(match *spec {
        FamilySpec::Kneser { n, k } => proven(n - 2 * k + 2, "n-2k+2"),
        FamilySpec::StableKneser { n, k, s } => {
            if s == 2 {
                proven(n - 2 * k + 2, "n-2k+2")
            } else if n == k * s {
                proven(s, "s")
            } else if n == k * s + 1 {
                proven(s + 1, "ceil((ks+1)/k)")
            } else if k == 2 && n == 2 * s + 2 {
                proven(s + 2, "s+2")
            } else {
                ChiFormula { value: n - (k - 1) * s, proven: false, source: "n-(k-1)s".into() }
            }
        }
        FamilySpec::Circular { n, k } => proven(n.div_ceil(k), "ceil(n/k)"),
        FamilySpec::CyclePower { n, a } => {
            let (q, r) = (n / (a + 1), n % (a + 1));
            proven(a + 1 + r.div_ceil(q), "a+1+ceil(r/q), n=q(a+1)+r")
        }
        FamilySpec::Circulant { .. } | FamilySpec::CayleyDihedral { .. } => {
            return Err(HomError::Uncovered(spec.to_string()))
        }
    })
}
