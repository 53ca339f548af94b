//! Automorphisms read off vertex labels, used to prune search roots.
//!
//! Labels only suggest a group: every candidate generator is checked to be
//! an automorphism before it contributes to the orbit partition.

use crate::dihedral::{induced_automorphism, DihedralElement};
use crate::graph::{Graph, VertexLabel};

/// Candidate automorphism generators suggested by `g`'s labels.
fn label_generators(g: &Graph) -> Vec<Vec<usize>> {
    let Some(labels) = g.labels() else {
        return Vec::new();
    };
    let Some(first) = labels.first() else {
        return Vec::new();
    };
    let index = g.label_index();
    match first {
        VertexLabel::CyclicElem { modulus, .. } => {
            let m = *modulus;
            let perm: Option<Vec<usize>> = labels
                .iter()
                .map(|l| match l {
                    VertexLabel::CyclicElem { value, modulus } if *modulus == m => index
                        .get(&VertexLabel::CyclicElem { value: (value + 1) % m, modulus: m })
                        .copied(),
                    _ => None,
                })
                .collect();
            perm.into_iter().collect()
        }
        VertexLabel::Subset(v) => {
            let n = v.ambient();
            [DihedralElement::rotation(n, 1), DihedralElement::rho(n, 1)]
                .into_iter()
                .filter_map(|e| e.ok())
                .filter_map(|e| induced_automorphism(&e, g).ok())
                .collect()
        }
        VertexLabel::GroupElem(e) => {
            let n = e.ambient();
            // left multiplication preserves u⁻¹v
            [DihedralElement::rotation(n, 1), DihedralElement::rho(n, 1)]
                .into_iter()
                .filter_map(|a| a.ok())
                .filter_map(|a| {
                    labels
                        .iter()
                        .map(|l| {
                            let x = l.as_group_elem()?;
                            let y = a.compose(x).ok()?;
                            index.get(&VertexLabel::GroupElem(y)).copied()
                        })
                        .collect::<Option<Vec<_>>>()
                })
                .collect()
        }
        _ => Vec::new(),
    }
}

/// Verified automorphism generators of `g` derived from its labels.
pub fn label_automorphisms(g: &Graph) -> Vec<Vec<usize>> {
    label_generators(g)
        .into_iter()
        .filter(|p| g.is_automorphism(p))
        .collect()
}

/// For each vertex, the smallest vertex in its orbit under the verified
/// label automorphisms (the identity partition when there are none).
pub fn orbit_representatives(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for perm in label_automorphisms(g) {
        for (u, &v) in perm.iter().enumerate() {
            let (a, b) = (find(&mut parent, u), find(&mut parent, v));
            if a != b {
                // keep the smaller index as root
                let (lo, hi) = if a < b { (a, b) } else { (b, a) };
                parent[hi] = lo;
            }
        }
    }
    (0..n).map(|u| find(&mut parent, u)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{cayley_dihedral, circular_graph, stable_kneser};

    #[test]
    fn circulants_are_vertex_transitive() {
        let g = circular_graph(7, 2).unwrap();
        assert_eq!(orbit_representatives(&g), vec![0; 7]);
    }

    #[test]
    fn dihedral_cayley_graphs_are_vertex_transitive() {
        let gens = [1, 7].map(|i| DihedralElement::rotation(8, i).unwrap()).into_iter().collect();
        let g = cayley_dihedral(8, &gens).unwrap();
        assert_eq!(orbit_representatives(&g), vec![0; 16]);
    }

    #[test]
    fn stable_kneser_orbits_follow_gap_type() {
        // KG(8,2)_{3-stab}: distance-3 pairs form one orbit, antipodal pairs another
        let g = stable_kneser(8, 2, 3).unwrap();
        let reps = orbit_representatives(&g);
        let distinct: std::collections::BTreeSet<_> = reps.iter().collect();
        assert_eq!(distinct.len(), 2);
        // KG(6,2)_{2-stab}: {1,3}-type and {1,4}-type are separate orbits
        let g = stable_kneser(6, 2, 2).unwrap();
        let distinct: std::collections::BTreeSet<_> = orbit_representatives(&g).into_iter().collect();
        assert_eq!(distinct.len(), 2);
    }

    #[test]
    fn unlabelled_graphs_get_trivial_orbits() {
        let g = Graph::cycle(5);
        assert_eq!(orbit_representatives(&g), vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn bogus_labels_are_not_trusted() {
        // path labelled as if it were a circulant: rotation is not an automorphism
        let g = Graph::path(4)
            .with_labels((0..4).map(|value| VertexLabel::CyclicElem { value, modulus: 4 }).collect())
            .unwrap();
        assert!(label_automorphisms(&g).is_empty());
        assert_eq!(orbit_representatives(&g), vec![0, 1, 2, 3]);
    }
}
