use fixedbitset::FixedBitSet;

use super::{Graph, GraphError, VertexLabel};

impl Graph {
    /// Same vertices; `u ~ v` exactly when `u != v` and they were not adjacent.
    pub fn complement(&self) -> Graph {
        let n = self.order();
        let adj = (0..n)
            .map(|u| {
                let mut row = self.neighbors(u).clone();
                row.toggle_range(..);
                row.set(u, false);
                row
            })
            .collect();
        Graph::from_parts(adj, self.labels.clone())
    }

    /// `u ~ v` in the result exactly when `1 <= dist(u, v) <= p`.
    pub fn power(&self, p: usize) -> Result<Graph, GraphError> {
        if p == 0 {
            return Err(GraphError::ZeroPower);
        }
        let n = self.order();
        let adj = (0..n)
            .map(|u| {
                let mut row = FixedBitSet::with_capacity(n);
                for (v, d) in self.distances_from(u).into_iter().enumerate() {
                    if matches!(d, Some(d) if d >= 1 && d <= p) {
                        row.insert(v);
                    }
                }
                row
            })
            .collect();
        Ok(Graph::from_parts(adj, self.labels.clone()))
    }

    /// Cartesian product `G □ H`. Vertex `(u, v)` has index `u * |H| + v`
    /// and, when both factors are labelled, a `Pair` label.
    pub fn cartesian_product(&self, other: &Graph) -> Graph {
        let (n, m) = (self.order(), other.order());
        let total = n * m;
        let mut adj = vec![FixedBitSet::with_capacity(total); total];
        for u in 0..n {
            for v in 0..m {
                let row = &mut adj[u * m + v];
                for v2 in other.neighbors(v).ones() {
                    row.insert(u * m + v2);
                }
                for u2 in self.neighbors(u).ones() {
                    row.insert(u2 * m + v);
                }
            }
        }
        let labels = match (self.labels(), other.labels()) {
            (Some(a), Some(b)) => Some(
                a.iter()
                    .flat_map(|la| b.iter().map(move |lb| VertexLabel::pair(la.clone(), lb.clone())))
                    .collect(),
            ),
            _ => None,
        };
        Graph::from_parts(adj, labels)
    }

    /// `G ⊎ H`: the vertices of `H` follow those of `G`. Labels survive only
    /// when both sides are labelled and the combined list stays distinct.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let (n, m) = (self.order(), other.order());
        let total = n + m;
        let mut adj = Vec::with_capacity(total);
        for u in 0..n {
            let mut row = FixedBitSet::with_capacity(total);
            row.extend(self.neighbors(u).ones());
            adj.push(row);
        }
        for v in 0..m {
            let mut row = FixedBitSet::with_capacity(total);
            row.extend(other.neighbors(v).ones().map(|w| w + n));
            adj.push(row);
        }
        let labels = match (self.labels(), other.labels()) {
            (Some(a), Some(b)) => {
                let all: Vec<_> = a.iter().chain(b).cloned().collect();
                let distinct: std::collections::HashSet<_> = all.iter().collect();
                (distinct.len() == all.len()).then_some(all)
            }
            _ => None,
        };
        Graph::from_parts(adj, labels)
    }

    /// Subgraph induced by `keep`, re-indexed in ascending original order.
    pub fn induced_subgraph(&self, keep: &[usize]) -> Result<Graph, GraphError> {
        let n = self.order();
        let mut sorted = keep.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if let Some(&bad) = sorted.iter().find(|&&v| v >= n) {
            return Err(GraphError::VertexOutOfRange { vertex: bad, order: n });
        }
        let k = sorted.len();
        let adj = sorted
            .iter()
            .map(|&u| {
                let mut row = FixedBitSet::with_capacity(k);
                for (j, &w) in sorted.iter().enumerate() {
                    if self.has_edge(u, w) {
                        row.insert(j);
                    }
                }
                row
            })
            .collect();
        let labels = self
            .labels()
            .map(|l| sorted.iter().map(|&v| l[v].clone()).collect());
        Ok(Graph::from_parts(adj, labels))
    }

    pub fn delete_vertex(&self, v: usize) -> Result<Graph, GraphError> {
        if v >= self.order() {
            return Err(GraphError::VertexOutOfRange {
                vertex: v,
                order: self.order(),
            });
        }
        let keep: Vec<usize> = (0..self.order()).filter(|&u| u != v).collect();
        self.induced_subgraph(&keep)
    }
}
