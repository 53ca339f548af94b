//! Constructors for the graph families under study.
//!
//! Vertex order is canonical for every family: lexicographic on the
//! subset labels for Kneser-type graphs, residue order for circulants, and
//! rotations-then-reflexions for dihedral Cayley graphs.

mod isomap;
mod ksubset;
mod spec;

use std::collections::BTreeSet;

use crate::dihedral::{DihedralElement, DihedralError};
use crate::graph::{Graph, GraphError, VertexLabel};

pub use isomap::{
    embed_circular_in_kneser, prop_iso_map, prop_iso_subsets, CircularEmbedding,
};
pub use ksubset::{enumerate_stable_subsets, enumerate_subsets, KSubset};
pub use spec::FamilySpec;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FamilyError {
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("invalid subset: {0}")]
    InvalidSubset(String),
    #[error("connection set must avoid 0 and be closed under negation: {0}")]
    BadConnectionSet(String),
    #[error("cannot parse family spec {0:?}")]
    Parse(String),
    #[error("explicit isomorphism failed its check for {0}")]
    IsoCheckFailed(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Dihedral(#[from] DihedralError),
}

fn require(cond: bool, msg: impl FnOnce() -> String) -> Result<(), FamilyError> {
    if cond {
        Ok(())
    } else {
        Err(FamilyError::InvalidParameters(msg()))
    }
}

fn subset_graph(vertices: Vec<KSubset>) -> Graph {
    let g = Graph::from_fn(vertices.len(), |u, v| vertices[u].is_disjoint(&vertices[v]));
    g.with_labels(vertices.into_iter().map(VertexLabel::Subset).collect())
        .expect("subsets are distinct")
}

/// Kneser graph `KG(n,k)`: k-subsets of `[n]`, adjacent when disjoint.
pub fn kneser(n: usize, k: usize) -> Result<Graph, FamilyError> {
    require(k >= 1 && n >= 2 * k, || format!("kneser needs k >= 1 and n >= 2k (n={n}, k={k})"))?;
    Ok(subset_graph(enumerate_subsets(n, k)))
}

/// `KG(n,k)_{s-stab}`: the Kneser graph restricted to s-stable subsets.
pub fn stable_kneser(n: usize, k: usize, s: usize) -> Result<Graph, FamilyError> {
    require(k >= 2 && s >= 2 && n >= k * s, || {
        format!("stable kneser needs s,k >= 2 and n >= ks (n={n}, k={k}, s={s})")
    })?;
    Ok(subset_graph(enumerate_stable_subsets(n, k, s)))
}

fn cyclic_labels(n: usize) -> Vec<VertexLabel> {
    (0..n)
        .map(|value| VertexLabel::CyclicElem { value, modulus: n })
        .collect()
}

/// `Cay(Z_n, connection)`.
pub fn circulant(n: usize, connection: &BTreeSet<usize>) -> Result<Graph, FamilyError> {
    require(n >= 1, || "circulant needs n >= 1".into())?;
    for &x in connection {
        if x == 0 || x >= n || !connection.contains(&(n - x)) {
            return Err(FamilyError::BadConnectionSet(format!("{connection:?} in Z_{n}")));
        }
    }
    let g = Graph::from_fn(n, |u, v| connection.contains(&((v + n - u) % n)));
    Ok(g.with_labels(cyclic_labels(n))?)
}

/// Circular graph `G(n,k) = Cay(Z_n, {k, ..., n-k})`.
pub fn circular_graph(n: usize, k: usize) -> Result<Graph, FamilyError> {
    require(k >= 1 && n >= 2 * k, || format!("circular graph needs k >= 1 and n >= 2k (n={n}, k={k})"))?;
    circulant(n, &(k..=n - k).collect())
}

/// `a`-th power of the `n`-cycle, `C_n^a`.
pub fn cycle_power(n: usize, a: usize) -> Result<Graph, FamilyError> {
    require(a >= 1 && n >= 3 && n >= 2 * a, || {
        format!("cycle power needs a >= 1, n >= 3 and n >= 2a (n={n}, a={a})")
    })?;
    let g = Graph::cycle(n).power(a)?;
    Ok(g.with_labels(cyclic_labels(n))?)
}

/// `Cay(D_2n, gens)` with `u ~ v` exactly when `u⁻¹ ∘ v ∈ gens`.
pub fn cayley_dihedral(n: usize, gens: &BTreeSet<DihedralElement>) -> Result<Graph, FamilyError> {
    let elements = DihedralElement::all(n)?;
    for g in gens {
        if g.ambient() != n {
            return Err(FamilyError::InvalidParameters(format!("generator {g} is not in D_{}", 2 * n)));
        }
        if g.is_identity() {
            return Err(FamilyError::InvalidParameters("generator set contains the identity".into()));
        }
        if !gens.contains(&g.inverse()) {
            return Err(FamilyError::InvalidParameters(format!(
                "generator set is not closed under inverses ({g})"
            )));
        }
    }
    let g = Graph::from_fn(elements.len(), |u, v| {
        let quotient = elements[u].inverse().compose(&elements[v]).expect("same ambient");
        gens.contains(&quotient)
    });
    Ok(g.with_labels(elements.into_iter().map(VertexLabel::GroupElem).collect())?)
}
