//! Immutable finite simple graphs with dense bit-set adjacency.
//!
//! Vertices are indexed `0..order`. Adjacency rows are [`FixedBitSet`]s so
//! neighbourhood intersections in the solvers are word-parallel. Graphs may
//! carry one [`VertexLabel`] per vertex; labels are what the family
//! constructors and the dihedral action use to talk about vertices.

mod clique;
pub mod dimacs;
mod iso;
mod label;
mod ops;

use std::collections::{HashMap, VecDeque};

use fixedbitset::FixedBitSet;

pub use clique::{clique_number, independence_number, max_clique_in, CliqueWitness};
pub use iso::{are_isomorphic, check_isomorphism};
pub use label::{LabelParseError, VertexLabel};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("expected {expected} labels, got {got}")]
    LabelCount { expected: usize, got: usize },
    #[error("duplicate vertex label {0}")]
    DuplicateLabel(String),
    #[error("graph power must be at least 1")]
    ZeroPower,
    #[error("adjacency is not symmetric at ({0},{1})")]
    Asymmetric(usize, usize),
    #[error("DIMACS line {line}: {message}")]
    Dimacs { line: usize, message: String },
}

/// An immutable simple undirected graph.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    order: usize,
    adj: Vec<FixedBitSet>,
    labels: Option<Vec<VertexLabel>>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("order", &self.order)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .field("labelled", &self.labels.is_some())
            .finish()
    }
}

impl Graph {
    /// Builds a graph from an edge list. Duplicates and both orientations
    /// of an edge collapse to one edge.
    pub fn new(order: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut adj = vec![FixedBitSet::with_capacity(order); order];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= order {
                    return Err(GraphError::VertexOutOfRange { vertex: w, order });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph {
            order,
            adj,
            labels: None,
        })
    }

    /// Builds a graph from a symmetric predicate evaluated on every pair `u < v`.
    pub fn from_fn(order: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Self {
        let mut adj = vec![FixedBitSet::with_capacity(order); order];
        for u in 0..order {
            for v in (u + 1)..order {
                if adjacent(u, v) {
                    adj[u].insert(v);
                    adj[v].insert(u);
                }
            }
        }
        Graph {
            order,
            adj,
            labels: None,
        }
    }

    pub fn empty(order: usize) -> Self {
        Graph::from_fn(order, |_, _| false)
    }

    pub fn complete(order: usize) -> Self {
        Graph::from_fn(order, |_, _| true)
    }

    pub fn cycle(order: usize) -> Self {
        assert!(order >= 3, "a cycle needs at least 3 vertices");
        Graph::from_fn(order, |u, v| v == u + 1 || (u == 0 && v == order - 1))
    }

    pub fn path(order: usize) -> Self {
        Graph::from_fn(order, |u, v| v == u + 1)
    }

    /// Attaches labels. They must be one per vertex and pairwise distinct.
    pub fn with_labels(mut self, labels: Vec<VertexLabel>) -> Result<Self, GraphError> {
        if labels.len() != self.order {
            return Err(GraphError::LabelCount {
                expected: self.order,
                got: labels.len(),
            });
        }
        let mut seen = std::collections::HashSet::with_capacity(labels.len());
        for l in &labels {
            if !seen.insert(l) {
                return Err(GraphError::DuplicateLabel(l.to_string()));
            }
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn without_labels(mut self) -> Self {
        self.labels = None;
        self
    }

    pub(crate) fn from_parts(adj: Vec<FixedBitSet>, labels: Option<Vec<VertexLabel>>) -> Self {
        let order = adj.len();
        debug_assert!(labels.as_ref().is_none_or(|l| l.len() == order));
        Graph { order, adj, labels }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    #[inline]
    pub fn neighbors(&self, u: usize) -> &FixedBitSet {
        &self.adj[u]
    }

    #[inline]
    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].count_ones(..)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones(..)).sum::<usize>() / 2
    }

    /// Edges as pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order).flat_map(move |u| self.adj[u].ones().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn labels(&self) -> Option<&[VertexLabel]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: usize) -> Option<&VertexLabel> {
        self.labels.as_ref().map(|l| &l[v])
    }

    /// Label-to-index lookup table; empty when the graph is unlabelled.
    pub fn label_index(&self) -> HashMap<&VertexLabel, usize> {
        self.labels
            .iter()
            .flatten()
            .enumerate()
            .map(|(i, l)| (l, i))
            .collect()
    }

    pub fn find_label(&self, label: &VertexLabel) -> Option<usize> {
        self.labels.as_ref()?.iter().position(|l| l == label)
    }

    pub fn is_regular(&self) -> bool {
        (0..self.order).all(|u| self.degree(u) == self.degree(0))
    }

    /// BFS distances from `src`; `None` for unreachable vertices.
    pub fn distances_from(&self, src: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.order];
        let mut queue = VecDeque::new();
        dist[src] = Some(0);
        queue.push_back(src);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap();
            for v in self.adj[u].ones() {
                if dist[v].is_none() {
                    dist[v] = Some(d + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    pub fn component_count(&self) -> usize {
        let mut seen = FixedBitSet::with_capacity(self.order);
        let mut count = 0;
        for s in 0..self.order {
            if seen.contains(s) {
                continue;
            }
            count += 1;
            let mut stack = vec![s];
            seen.insert(s);
            while let Some(u) = stack.pop() {
                for v in self.adj[u].ones() {
                    if !seen.contains(v) {
                        seen.insert(v);
                        stack.push(v);
                    }
                }
            }
        }
        count
    }

    /// Structural audit: symmetric, irreflexive, label count and distinctness.
    pub fn audit(&self) -> Result<(), GraphError> {
        for u in 0..self.order {
            if self.adj[u].len() != self.order {
                return Err(GraphError::VertexOutOfRange {
                    vertex: self.adj[u].len(),
                    order: self.order,
                });
            }
            if self.adj[u].contains(u) {
                return Err(GraphError::SelfLoop(u));
            }
            for v in self.adj[u].ones() {
                if !self.adj[v].contains(u) {
                    return Err(GraphError::Asymmetric(u, v));
                }
            }
        }
        if let Some(labels) = &self.labels {
            if labels.len() != self.order {
                return Err(GraphError::LabelCount {
                    expected: self.order,
                    got: labels.len(),
                });
            }
            let mut seen = std::collections::HashSet::new();
            for l in labels {
                if !seen.insert(l) {
                    return Err(GraphError::DuplicateLabel(l.to_string()));
                }
            }
        }
        Ok(())
    }

    /// True when `perm` is an automorphism (bijective, preserves edges and non-edges).
    pub fn is_automorphism(&self, perm: &[usize]) -> bool {
        check_isomorphism(self, self, perm)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn make_graph_examples() {
        let k2 = Graph::new(2, &[(0, 1)]).unwrap();
        assert_eq!(k2.edge_count(), 1);
        assert!(k2.has_edge(1, 0));

        let e3 = Graph::new(3, &[]).unwrap();
        assert_eq!(e3.order(), 3);
        assert_eq!(e3.edge_count(), 0);

        let c4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert!((0..4).all(|v| c4.degree(v) == 2));
        c4.audit().unwrap();
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::new(3, &[(0, 1), (1, 0), (0, 1), (1, 2)]).unwrap();
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn construction_errors() {
        assert_eq!(Graph::new(3, &[(1, 1)]), Err(GraphError::SelfLoop(1)));
        assert_eq!(
            Graph::new(3, &[(0, 3)]),
            Err(GraphError::VertexOutOfRange { vertex: 3, order: 3 })
        );
        let g = Graph::new(2, &[(0, 1)]).unwrap();
        assert!(matches!(
            g.clone().with_labels(vec![VertexLabel::Index(0)]),
            Err(GraphError::LabelCount { .. })
        ));
        assert!(matches!(
            g.with_labels(vec![VertexLabel::Index(0), VertexLabel::Index(0)]),
            Err(GraphError::DuplicateLabel(_))
        ));
    }

    #[test]
    fn components_and_distances() {
        let g = Graph::new(5, &[(0, 1), (1, 2), (3, 4)]).unwrap();
        assert_eq!(g.component_count(), 2);
        assert_eq!(g.distances_from(0), vec![Some(0), Some(1), Some(2), None, None]);
    }
}
