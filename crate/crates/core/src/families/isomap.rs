//! Explicit vertex maps from circular graphs into (stable) Kneser graphs.

use super::{circular_graph, kneser, stable_kneser, FamilyError, KSubset};
use crate::graph::{check_isomorphism, VertexLabel};

/// Image of every vertex `u = 0..=ks` of `G(ks+1, k)` under the explicit
/// isomorphism onto `KG(ks+1, k)_{s-stab}`.
///
/// Writing `u = jk + i` with `0 <= j < s`, `0 <= i < k`, the image has
/// `r`-th element `j + 1 + (r-1)s` for `r <= k - i` and `j + 2 + (r-1)s`
/// afterwards; the last vertex `ks` maps to `{s+1, 2s+1, ..., ks+1}`.
pub fn prop_iso_subsets(k: usize, s: usize) -> Result<Vec<KSubset>, FamilyError> {
    if k < 2 || s < 2 {
        return Err(FamilyError::InvalidParameters(format!(
            "explicit isomorphism needs s,k >= 2 (k={k}, s={s})"
        )));
    }
    let n = k * s + 1;
    let mut images = Vec::with_capacity(n);
    for u in 0..k * s {
        let (j, i) = (u / k, u % k);
        let elems = (1..=k)
            .map(|r| {
                let bump = if r <= k - i { 1 } else { 2 };
                j + bump + (r - 1) * s
            })
            .collect();
        images.push(KSubset::new(elems, n)?);
    }
    images.push(KSubset::new((1..=k).map(|r| r * s + 1).collect(), n)?);
    Ok(images)
}

/// The explicit isomorphism as an index map `circular_graph(ks+1,k) ->
/// stable_kneser(ks+1,k,s)`, checked (bijective, edges and non-edges
/// preserved) before it is returned.
pub fn prop_iso_map(k: usize, s: usize) -> Result<Vec<usize>, FamilyError> {
    let images = prop_iso_subsets(k, s)?;
    let n = k * s + 1;
    let circ = circular_graph(n, k)?;
    let stable = stable_kneser(n, k, s)?;
    let index = stable.label_index();
    let map: Option<Vec<usize>> = images
        .into_iter()
        .map(|v| index.get(&VertexLabel::Subset(v)).copied())
        .collect();
    match map {
        Some(map) if check_isomorphism(&circ, &stable, &map) => Ok(map),
        _ => Err(FamilyError::IsoCheckFailed(format!("k={k}, s={s}"))),
    }
}

/// `G(n,k)` realised inside `KG(n,k)` by `u -> {u+1, ..., u+k}` modulo `[n]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CircularEmbedding {
    /// `subsets[u]` is the circular interval assigned to `u`.
    pub subsets: Vec<KSubset>,
    /// `map[u]` is the index of `subsets[u]` in `kneser(n, k)`.
    pub map: Vec<usize>,
}

pub fn embed_circular_in_kneser(n: usize, k: usize) -> Result<CircularEmbedding, FamilyError> {
    let full = kneser(n, k)?;
    let index = full.label_index();
    let subsets = (0..n)
        .map(|u| KSubset::from_residues((1..=k).map(|t| (u + t) as i64), n))
        .collect::<Result<Vec<_>, _>>()?;
    let map = subsets
        .iter()
        .map(|v| index[&VertexLabel::Subset(v.clone())])
        .collect();
    Ok(CircularEmbedding { subsets, map })
}
