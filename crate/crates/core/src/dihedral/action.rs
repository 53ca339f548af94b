use super::{DihedralElement, DihedralError};
use crate::families::KSubset;
use crate::graph::{Graph, VertexLabel};

/// `{x_1..x_k} -> {e(x_1)..e(x_k)}`, re-sorted.
pub fn act_on_vertex(e: &DihedralElement, v: &KSubset) -> Result<KSubset, DihedralError> {
    if e.ambient() != v.ambient() {
        return Err(DihedralError::AmbientMismatch(e.ambient(), v.ambient()));
    }
    let image = v.elements().iter().map(|&x| e.apply_unchecked(x)).collect();
    Ok(KSubset::new(image, v.ambient()).expect("a permutation maps a k-subset to a k-subset"))
}

/// `(n, k, s)` of a labelled stable Kneser graph. `s` is the smallest
/// circular gap occurring among the vertices.
pub fn stable_parameters(g: &Graph) -> Result<(usize, usize, usize), DihedralError> {
    let labels = g
        .labels()
        .ok_or_else(|| DihedralError::NotStableKneser("unlabelled".into()))?;
    let mut params: Option<(usize, usize)> = None;
    let mut s = usize::MAX;
    for l in labels {
        let v = l
            .as_subset()
            .ok_or_else(|| DihedralError::NotStableKneser(format!("label {l} is not a subset")))?;
        match params {
            None => params = Some((v.ambient(), v.k())),
            Some(p) if p != (v.ambient(), v.k()) => {
                return Err(DihedralError::NotStableKneser("mixed subset sizes".into()))
            }
            _ => {}
        }
        if v.k() >= 2 {
            s = s.min(*v.gaps().iter().min().unwrap());
        }
    }
    let (n, k) = params.ok_or_else(|| DihedralError::NotStableKneser("no vertices".into()))?;
    Ok((n, k, s))
}

/// The vertex permutation of `g` induced by `e`: `perm[u]` is the index of
/// `e(label(u))`. Fails if the image leaves the vertex set or the
/// permutation does not preserve adjacency.
pub fn induced_automorphism(e: &DihedralElement, g: &Graph) -> Result<Vec<usize>, DihedralError> {
    let (n, _, _) = stable_parameters(g)?;
    if n != e.ambient() {
        return Err(DihedralError::AmbientMismatch(e.ambient(), n));
    }
    let index = g.label_index();
    let labels = g.labels().unwrap();
    let perm = labels
        .iter()
        .map(|l| {
            let image = act_on_vertex(e, l.as_subset().unwrap())?;
            index
                .get(&VertexLabel::Subset(image))
                .copied()
                .ok_or_else(|| DihedralError::NotAutomorphism(e.to_string()))
        })
        .collect::<Result<Vec<_>, _>>()?;
    if !g.is_automorphism(&perm) {
        return Err(DihedralError::NotAutomorphism(e.to_string()));
    }
    Ok(perm)
}
