//! Cores, retractions and vertex-criticality.
//!
//! Vertex-indexed audits only look at one vertex per orbit of the verified
//! label automorphisms: an automorphism carrying `v` to `w` also carries
//! `G - v` onto `G - w`.

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use super::coloring::chromatic_number;
use super::search::HomSearch;
use super::symmetry::orbit_representatives;
use super::{Homomorphism, SolveOutcome};
use crate::budget::{Exhausted, SearchBudget};
use crate::exec::Exec;
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq)]
pub enum CoreVerdict {
    Core,
    /// A verified endomorphism whose image misses `missed`.
    NotCore { endomorphism: Homomorphism, missed: usize },
}

impl CoreVerdict {
    pub fn is_core(&self) -> bool {
        matches!(self, CoreVerdict::Core)
    }
}

fn representatives(g: &Graph) -> Vec<usize> {
    let reps = orbit_representatives(g);
    (0..g.order()).filter(|&v| reps[v] == v).collect()
}

/// Endomorphism of `g` avoiding `v`, searched as `G -> G - v`.
fn endomorphism_avoiding(g: &Graph, v: usize, budget: &SearchBudget) -> SolveOutcome {
    let minus = g.delete_vertex(v).expect("vertex in range");
    match HomSearch::new(g, &minus).budget(*budget).run().outcome {
        SolveOutcome::Found(h) => {
            let lifted = h.map().iter().map(|&w| if w < v { w } else { w + 1 }).collect();
            let hom = Homomorphism::certify(g, g, lifted).expect("lifted endomorphism must verify");
            SolveOutcome::Found(hom)
        }
        other => other,
    }
}

pub fn is_core(g: &Graph, budget: &SearchBudget) -> Result<CoreVerdict, Exhausted> {
    is_core_with(g, budget, Exec::default())
}

/// `G` is a core iff no endomorphism misses a vertex. Orbit representatives
/// are searched independently; the first (lowest) non-core witness wins, and
/// any exhausted search makes the verdict exhausted.
pub fn is_core_with(g: &Graph, budget: &SearchBudget, exec: Exec) -> Result<CoreVerdict, Exhausted> {
    let reps = representatives(g);
    let outcomes = exec.map(&reps, |&v| endomorphism_avoiding(g, v, budget));
    for (&v, outcome) in reps.iter().zip(outcomes) {
        match outcome {
            SolveOutcome::Found(endomorphism) => {
                return Ok(CoreVerdict::NotCore { endomorphism, missed: v })
            }
            SolveOutcome::Exhausted(stats) => return Err(Exhausted(stats)),
            SolveOutcome::NotExists => {}
        }
    }
    Ok(CoreVerdict::Core)
}

/// A homomorphism `G -> G[keep]` fixing `keep` pointwise, reported as a map
/// `V(G) -> V(G)` with image inside `keep`.
pub fn find_retraction(g: &Graph, keep: &[usize], budget: &SearchBudget) -> SolveOutcome {
    let n = g.order();
    let mut allowed = FixedBitSet::with_capacity(n);
    allowed.extend(keep.iter().copied().filter(|&v| v < n));
    let mut search = HomSearch::new(g, g).budget(*budget);
    for u in 0..n {
        let dom = if allowed.contains(u) {
            let mut one = FixedBitSet::with_capacity(n);
            one.insert(u);
            one
        } else {
            allowed.clone()
        };
        search = search.restrict(u, dom);
    }
    let outcome = search.run().outcome;
    if let SolveOutcome::Found(h) = &outcome {
        assert!(verify_retraction(g, keep, h.map()), "retraction search returned a non-retraction");
    }
    outcome
}

/// Checks that `map` is an endomorphism with image inside `keep` that fixes every vertex of `keep`.
pub fn verify_retraction(g: &Graph, keep: &[usize], map: &[usize]) -> bool {
    super::verify_homomorphism(g, g, map)
        && keep.iter().all(|&v| v < map.len() && map[v] == v)
        && map.iter().all(|x| keep.contains(x))
}

/// Vertex-criticality audit.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Criticality {
    pub chi: usize,
    /// `χ(G - v)` for every vertex `v`.
    pub deleted_chi: Vec<usize>,
    pub critical: bool,
    /// Lowest vertex whose deletion keeps `χ`, when not critical.
    pub witness: Option<usize>,
}

pub fn is_chi_critical(g: &Graph, budget: &SearchBudget) -> Result<Criticality, Exhausted> {
    is_chi_critical_with(g, budget, Exec::default())
}

/// `G` is vertex-critical iff `χ(G - v) < χ(G)` for every vertex `v`.
///
/// # Panics
/// If some `χ(G - v)` falls outside `{χ(G) - 1, χ(G)}`, which would be a
/// solver defect.
pub fn is_chi_critical_with(g: &Graph, budget: &SearchBudget, exec: Exec) -> Result<Criticality, Exhausted> {
    let chi = chromatic_number(g, budget)?.chi;
    let orbit = orbit_representatives(g);
    let reps = representatives(g);
    let per_rep = exec.map(&reps, |&v| {
        chromatic_number(&g.delete_vertex(v).expect("vertex in range"), budget).map(|c| c.chi)
    });
    let mut rep_chi = vec![0; g.order()];
    for (&v, c) in reps.iter().zip(per_rep) {
        let c = c?;
        assert!(
            c == chi || c + 1 == chi,
            "deleting vertex {v} moved chi from {chi} to {c}"
        );
        rep_chi[v] = c;
    }
    let deleted_chi: Vec<usize> = (0..g.order()).map(|v| rep_chi[orbit[v]]).collect();
    let witness = deleted_chi.iter().position(|&c| c == chi);
    Ok(Criticality { chi, deleted_chi, critical: witness.is_none(), witness })
}
