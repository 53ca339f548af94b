//! Backtracking homomorphism search with arc-consistency propagation.
//!
//! Variables are source vertices, values are target vertices. After every
//! assignment each edge `u ~ v` of the source enforces
//! `D(u) ⊆ ⋃_{b ∈ D(v)} N(b)` until a fixpoint; an empty domain backtracks.
//! Branching picks the unfixed variable with the smallest domain (lowest
//! index on ties) and tries values in ascending order, so runs are
//! deterministic. Target symmetry prunes the search in two ways: at the
//! root by orbits of verified label automorphisms, and throughout for
//! complete targets, whose unused colours are interchangeable.

use fixedbitset::FixedBitSet;

use super::symmetry::orbit_representatives;
use super::{Homomorphism, SolveOutcome};
use crate::budget::{BudgetMeter, Exhausted, SearchBudget, SearchStats};
use crate::graph::Graph;

/// Outcome plus the effort it took.
#[derive(Debug, Clone)]
pub struct SearchResult {
    pub outcome: SolveOutcome,
    pub stats: SearchStats,
}

/// Configurable homomorphism search from `source` to `target`.
#[derive(Debug, Clone)]
pub struct HomSearch<'a> {
    source: &'a Graph,
    target: &'a Graph,
    budget: SearchBudget,
    restrictions: Vec<(usize, FixedBitSet)>,
    use_symmetry: bool,
}

impl<'a> HomSearch<'a> {
    pub fn new(source: &'a Graph, target: &'a Graph) -> Self {
        HomSearch {
            source,
            target,
            budget: SearchBudget::default(),
            restrictions: Vec::new(),
            use_symmetry: true,
        }
    }

    pub fn budget(mut self, budget: SearchBudget) -> Self {
        self.budget = budget;
        self
    }

    /// Only allow `allowed` as images of source vertex `u`.
    /// Restricted searches skip the root symmetry reduction.
    pub fn restrict(mut self, u: usize, allowed: FixedBitSet) -> Self {
        self.restrictions.push((u, allowed));
        self
    }

    /// Toggle the root reduction by verified target automorphisms.
    pub fn use_symmetry(mut self, on: bool) -> Self {
        self.use_symmetry = on;
        self
    }

    pub fn run(&self) -> SearchResult {
        let mut meter = self.budget.start();
        let outcome = match self.solve(&mut meter) {
            Ok(Some(map)) => match Homomorphism::certify(self.source, self.target, map) {
                Some(h) => SolveOutcome::Found(h),
                None => panic!("homomorphism search returned a map that fails verification"),
            },
            Ok(None) => SolveOutcome::NotExists,
            Err(Exhausted(stats)) => SolveOutcome::Exhausted(stats),
        };
        SearchResult { outcome, stats: meter.stats() }
    }

    fn solve(&self, meter: &mut BudgetMeter) -> Result<Option<Vec<usize>>, Exhausted> {
        let (g, h) = (self.source, self.target);
        let (n, m) = (g.order(), h.order());
        if n == 0 {
            return Ok(Some(Vec::new()));
        }
        let mut full = FixedBitSet::with_capacity(m);
        full.insert_range(..);
        let mut non_isolated = FixedBitSet::with_capacity(m);
        non_isolated.extend((0..m).filter(|&b| h.degree(b) > 0));

        let mut domains: Vec<FixedBitSet> = (0..n)
            .map(|u| if g.degree(u) > 0 { non_isolated.clone() } else { full.clone() })
            .collect();
        for (u, allowed) in &self.restrictions {
            let mut a = allowed.clone();
            a.grow(m);
            domains[*u].intersect_with(&a);
        }
        if domains.iter().any(|d| d.is_clear()) {
            return Ok(None);
        }
        let unrestricted = self.use_symmetry && self.restrictions.is_empty();
        let complete_target = unrestricted && m > 1 && h.edge_count() == m * (m - 1) / 2;
        let mut solver = Solver { g, h, meter, support: FixedBitSet::with_capacity(m), complete_target };
        if !solver.propagate(&mut domains, (0..n).collect()) {
            return Ok(None);
        }

        let root_reps = (unrestricted && !complete_target)
            .then(|| orbit_representatives(h))
            .filter(|reps| reps.iter().enumerate().any(|(i, &r)| i != r));
        solver.branch(domains, root_reps.as_deref())
    }
}

struct Solver<'s, 'm> {
    g: &'s Graph,
    h: &'s Graph,
    meter: &'m mut BudgetMeter,
    support: FixedBitSet,
    /// Target is `K_m` and no domain was restricted up front. Propagation
    /// then only removes a value next to a singleton holding it, so values
    /// held by no singleton are interchangeable and only the lowest is tried.
    complete_target: bool,
}

impl Solver<'_, '_> {
    /// AC-3 over source edges, starting from the changed vertices in `queue`.
    fn propagate(&mut self, domains: &mut [FixedBitSet], mut queue: Vec<usize>) -> bool {
        let n = domains.len();
        let mut queued = FixedBitSet::with_capacity(n);
        queued.extend(queue.iter().copied());
        while let Some(v) = queue.pop() {
            queued.set(v, false);
            self.support.clear();
            for b in domains[v].ones() {
                self.support.union_with(self.h.neighbors(b));
            }
            for u in self.g.neighbors(v).ones() {
                let before = domains[u].count_ones(..);
                domains[u].intersect_with(&self.support);
                let after = domains[u].count_ones(..);
                if after == 0 {
                    return false;
                }
                if after < before && !queued.contains(u) {
                    queued.insert(u);
                    queue.push(u);
                }
            }
        }
        true
    }

    fn branch(
        &mut self,
        domains: Vec<FixedBitSet>,
        root_reps: Option<&[usize]>,
    ) -> Result<Option<Vec<usize>>, Exhausted> {
        let var = (0..domains.len())
            .map(|u| (domains[u].count_ones(..), u))
            .filter(|&(size, _)| size > 1)
            .min();
        let Some((_, u)) = var else {
            return Ok(Some(domains.iter().map(|d| d.minimum().unwrap()).collect()));
        };
        let mut values: Vec<usize> = domains[u].ones().collect();
        if self.complete_target {
            let mut used = FixedBitSet::with_capacity(self.h.order());
            for d in &domains {
                if d.count_ones(..) == 1 {
                    used.insert(d.minimum().expect("non-empty"));
                }
            }
            let mut fresh_seen = false;
            values.retain(|&a| used.contains(a) || !std::mem::replace(&mut fresh_seen, true));
        }
        for a in values {
            if let Some(reps) = root_reps {
                if reps[a] != a {
                    continue;
                }
            }
            self.meter.tick()?;
            let mut next = domains.clone();
            next[u].clear();
            next[u].insert(a);
            if self.propagate(&mut next, vec![u]) {
                if let Some(map) = self.branch(next, None)? {
                    return Ok(Some(map));
                }
            }
        }
        Ok(None)
    }
}

/// Decides `G -> H` under `budget`.
pub fn find_homomorphism(g: &Graph, h: &Graph, budget: &SearchBudget) -> SolveOutcome {
    HomSearch::new(g, h).budget(*budget).run().outcome
}
