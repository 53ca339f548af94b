//! Exact decision procedures built on homomorphism search.
//!
//! Every positive answer carries a map re-checked by
//! [`verify_homomorphism`], which shares no code with the search itself.
//! Negative answers are only reported after an exhaustive search; running
//! out of budget is always its own outcome.

mod cayley;
mod certificate;
mod coloring;
mod cores;
mod formulas;
mod search;
pub mod symmetry;

use serde::{Deserialize, Serialize};

use crate::budget::SearchStats;
use crate::families::FamilyError;
use crate::graph::Graph;

pub use cayley::{normal_cayley_self_hom, transport_square_hom};
pub use certificate::{Certificate, CertificateKind};
pub use coloring::{chromatic_number, Coloring};
pub use cores::{
    find_retraction, is_chi_critical, is_chi_critical_with, is_core, is_core_with, verify_retraction,
    CoreVerdict, Criticality,
};
pub use formulas::{closed_form_chi, ChiFormula};
pub use search::{find_homomorphism, HomSearch, SearchResult};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum HomError {
    #[error("graph is not a labelled circulant: {0}")]
    NotCirculant(String),
    #[error("no closed form covers {0}")]
    Uncovered(String),
    #[error("verification failed: {0} (defect)")]
    Defect(String),
    #[error(transparent)]
    Family(#[from] FamilyError),
}

/// Independent edge-preservation check: `map` is total on `V(g)`, lands in
/// `V(h)`, and sends every edge of `g` to an edge of `h`.
pub fn verify_homomorphism(g: &Graph, h: &Graph, map: &[usize]) -> bool {
    if map.len() != g.order() || map.iter().any(|&x| x >= h.order()) {
        return false;
    }
    g.edges().all(|(u, v)| h.has_edge(map[u], map[v]))
}

/// A vertex map between two graphs. `verified` is set only by
/// [`verify_homomorphism`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Homomorphism {
    source_order: usize,
    target_order: usize,
    map: Vec<usize>,
    verified: bool,
}

impl Homomorphism {
    /// Runs the checker; returns `None` when `map` is not a homomorphism.
    pub fn certify(g: &Graph, h: &Graph, map: Vec<usize>) -> Option<Self> {
        verify_homomorphism(g, h, &map).then(|| Homomorphism {
            source_order: g.order(),
            target_order: h.order(),
            map,
            verified: true,
        })
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn source_order(&self) -> usize {
        self.source_order
    }

    pub fn target_order(&self) -> usize {
        self.target_order
    }

    pub fn is_verified(&self) -> bool {
        self.verified
    }

    /// Sorted distinct images.
    pub fn image(&self) -> Vec<usize> {
        let mut img = self.map.clone();
        img.sort_unstable();
        img.dedup();
        img
    }
}

/// Result of a budgeted homomorphism query.
#[derive(Debug, Clone, PartialEq)]
pub enum SolveOutcome {
    Found(Homomorphism),
    NotExists,
    Exhausted(SearchStats),
}

impl SolveOutcome {
    pub fn is_found(&self) -> bool {
        matches!(self, SolveOutcome::Found(_))
    }

    pub fn is_not_exists(&self) -> bool {
        matches!(self, SolveOutcome::NotExists)
    }

    pub fn is_exhausted(&self) -> bool {
        matches!(self, SolveOutcome::Exhausted(_))
    }

    pub fn found(&self) -> Option<&Homomorphism> {
        match self {
            SolveOutcome::Found(h) => Some(h),
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::budget::SearchBudget;
    use crate::families::{cayley_dihedral, prop_iso_map, circular_graph, stable_kneser};
    use crate::dihedral::DihedralElement;
    use crate::graph::check_isomorphism;

    fn b() -> SearchBudget {
        SearchBudget::default()
    }

    #[test]
    fn verify_examples() {
        let g = Graph::cycle(5);
        assert!(verify_homomorphism(&g, &g, &[0, 1, 2, 3, 4]));
        assert!(!verify_homomorphism(&g, &g, &[0; 5]));
        assert!(!verify_homomorphism(&g, &g, &[0, 1, 2, 3]));
        assert!(!verify_homomorphism(&g, &g, &[0, 1, 2, 3, 9]));
    }

    #[test]
    fn explicit_iso_is_a_homomorphism_both_ways() {
        let map = prop_iso_map(2, 3).unwrap();
        let circ = circular_graph(7, 2).unwrap();
        let stable = stable_kneser(7, 2, 3).unwrap();
        assert!(verify_homomorphism(&circ, &stable, &map));
        let mut inv = vec![0; map.len()];
        for (u, &x) in map.iter().enumerate() {
            inv[x] = u;
        }
        assert!(verify_homomorphism(&stable, &circ, &inv));
        assert!(check_isomorphism(&circ, &stable, &map));
    }

    #[test]
    fn hom_to_complete_graphs() {
        let c5 = Graph::cycle(5);
        assert!(find_homomorphism(&c5, &Graph::complete(3), &b()).is_found());
        assert!(find_homomorphism(&c5, &Graph::complete(2), &b()).is_not_exists());
        assert!(find_homomorphism(&Graph::empty(3), &Graph::empty(1), &b()).is_found());
        assert!(find_homomorphism(&Graph::empty(3), &Graph::empty(0), &b()).is_not_exists());
        assert!(find_homomorphism(&Graph::empty(0), &Graph::empty(0), &b()).is_found());
    }

    #[test]
    fn schrijver_graph_does_not_map_to_two_hexagons() {
        let g = stable_kneser(6, 2, 2).unwrap();
        let gens = [1, 5].map(|i| DihedralElement::rotation(6, i).unwrap()).into_iter().collect();
        let cay = cayley_dihedral(6, &gens).unwrap();
        assert!(find_homomorphism(&g, &cay, &b()).is_not_exists());
    }

    #[test]
    fn kg_8_2_3_does_not_map_to_its_shift_cayley_graph() {
        let g = stable_kneser(8, 2, 3).unwrap();
        let gens = [1, 2, 6, 7].map(|i| DihedralElement::rotation(8, i).unwrap()).into_iter().collect();
        let cay = cayley_dihedral(8, &gens).unwrap();
        assert!(find_homomorphism(&g, &cay, &b()).is_not_exists());
    }

    #[test]
    fn symmetry_does_not_change_answers() {
        let c5 = circular_graph(5, 2).unwrap();
        let c7 = circular_graph(7, 3).unwrap();
        for (g, h) in [(&c7, &c5), (&c5, &c7), (&c5, &c5)] {
            let with = HomSearch::new(g, h).run().outcome.is_found();
            let without = HomSearch::new(g, h).use_symmetry(false).run().outcome.is_found();
            assert_eq!(with, without);
        }
    }

    #[test]
    fn colour_symmetry_does_not_change_answers() {
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for trial in 0..60 {
            let n = 3 + trial % 10;
            let d = 20 + next() % 70;
            let g = Graph::from_fn(n, |_, _| next() % 100 < d);
            for c in 1..=5 {
                let k = Graph::complete(c);
                let with = HomSearch::new(&g, &k).run().outcome;
                let without = HomSearch::new(&g, &k).use_symmetry(false).run().outcome;
                assert_eq!(with.is_found(), without.is_found(), "trial {trial}, c={c}");
            }
        }
    }

    #[test]
    fn exhaustion_is_distinct() {
        let g = stable_kneser(8, 2, 3).unwrap();
        let k4 = Graph::complete(4);
        let res = HomSearch::new(&g, &k4).budget(SearchBudget::nodes(3)).run();
        assert!(res.outcome.is_exhausted());
        assert!(res.stats.nodes >= 3);
    }

    #[test]
    fn search_is_deterministic() {
        let g = stable_kneser(9, 2, 3).unwrap();
        let h = Graph::complete(6);
        let a = HomSearch::new(&g, &h).run();
        let c = HomSearch::new(&g, &h).run();
        assert_eq!(a.outcome, c.outcome);
        assert_eq!(a.stats.nodes, c.stats.nodes);
    }
}
