use fixedbitset::FixedBitSet;

use super::Graph;

/// Independent check that `map` is an isomorphism `g -> h`: a bijection
/// with `u ~ v` in `g` exactly when `map[u] ~ map[v]` in `h`.
pub fn check_isomorphism(g: &Graph, h: &Graph, map: &[usize]) -> bool {
    let n = g.order();
    if h.order() != n || map.len() != n {
        return false;
    }
    let mut hit = vec![false; n];
    for &x in map {
        if x >= n || std::mem::replace(&mut hit[x], true) {
            return false;
        }
    }
    for u in 0..n {
        for v in (u + 1)..n {
            if g.has_edge(u, v) != h.has_edge(map[u], map[v]) {
                return false;
            }
        }
    }
    true
}

/// Per-vertex invariant: degree, distance profile, sorted neighbour degrees.
fn invariants(g: &Graph) -> Vec<(usize, Vec<usize>, Vec<usize>)> {
    (0..g.order())
        .map(|u| {
            let mut profile = vec![0usize; g.order() + 1];
            for d in g.distances_from(u) {
                // unreachable vertices are counted in the last slot
                profile[d.unwrap_or(g.order())] += 1;
            }
            let mut nd: Vec<usize> = g.neighbors(u).ones().map(|v| g.degree(v)).collect();
            nd.sort_unstable();
            (g.degree(u), profile, nd)
        })
        .collect()
}

/// Searches for an isomorphism `g -> h`. The returned map (`map[u]` is the
/// image of `u`) always passes [`check_isomorphism`].
pub fn are_isomorphic(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    let n = g.order();
    if h.order() != n || g.edge_count() != h.edge_count() {
        return None;
    }
    let ig = invariants(g);
    let ih = invariants(h);
    let mut sg = ig.clone();
    let mut sh = ih.clone();
    sg.sort();
    sh.sort();
    if sg != sh {
        return None;
    }

    // Candidate classes: h-vertices sharing each g-vertex's invariant.
    let class: Vec<FixedBitSet> = ig
        .iter()
        .map(|inv| {
            let mut set = FixedBitSet::with_capacity(n);
            set.extend((0..n).filter(|&x| &ih[x] == inv));
            set
        })
        .collect();

    // Connected, most-constrained-first order.
    let mut order = Vec::with_capacity(n);
    let mut placed = FixedBitSet::with_capacity(n);
    while order.len() < n {
        let next = (0..n)
            .filter(|&u| !placed.contains(u))
            .max_by_key(|&u| {
                let links = g.neighbors(u).intersection(&placed).count();
                (links, std::cmp::Reverse(class[u].count_ones(..)), std::cmp::Reverse(u))
            })
            .unwrap();
        placed.insert(next);
        order.push(next);
    }

    let mut map = vec![usize::MAX; n];
    let mut used = FixedBitSet::with_capacity(n);
    if extend(g, h, &order, &class, 0, &mut map, &mut used) {
        assert!(check_isomorphism(g, h, &map), "isomorphism search produced an invalid map");
        Some(map)
    } else {
        None
    }
}

fn extend(
    g: &Graph,
    h: &Graph,
    order: &[usize],
    class: &[FixedBitSet],
    depth: usize,
    map: &mut [usize],
    used: &mut FixedBitSet,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let u = order[depth];
    let mut cand = class[u].clone();
    cand.difference_with(used);
    for &w in &order[..depth] {
        let fw = map[w];
        if g.has_edge(u, w) {
            cand.intersect_with(h.neighbors(fw));
        } else {
            cand.difference_with(h.neighbors(fw));
        }
        if cand.is_clear() {
            return false;
        }
    }
    for x in cand.ones() {
        map[u] = x;
        used.insert(x);
        if extend(g, h, order, class, depth + 1, map, used) {
            return true;
        }
        used.set(x, false);
    }
    map[u] = usize::MAX;
    false
}
