//! Branch-and-bound maximum clique with greedy colouring bounds.

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use super::Graph;
use crate::budget::{BudgetMeter, Exhausted, SearchBudget, SearchStats};

/// An optimum together with one set attaining it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CliqueWitness {
    pub size: usize,
    pub vertices: Vec<usize>,
    pub stats: SearchStats,
}

pub fn clique_number(g: &Graph, budget: &SearchBudget) -> Result<CliqueWitness, Exhausted> {
    let mut all = FixedBitSet::with_capacity(g.order());
    all.insert_range(..);
    max_clique_in(g, &all, budget)
}

/// α(G), computed as ω of the complement.
pub fn independence_number(g: &Graph, budget: &SearchBudget) -> Result<CliqueWitness, Exhausted> {
    clique_number(&g.complement(), budget)
}

/// Largest clique using only vertices of `within`.
pub fn max_clique_in(
    g: &Graph,
    within: &FixedBitSet,
    budget: &SearchBudget,
) -> Result<CliqueWitness, Exhausted> {
    let mut search = CliqueSearch {
        g,
        meter: budget.start(),
        best: Vec::new(),
        current: Vec::new(),
    };
    search.expand(within.clone())?;
    let mut vertices = search.best;
    vertices.sort_unstable();
    Ok(CliqueWitness {
        size: vertices.len(),
        vertices,
        stats: search.meter.stats(),
    })
}

struct CliqueSearch<'a> {
    g: &'a Graph,
    meter: BudgetMeter,
    best: Vec<usize>,
    current: Vec<usize>,
}

impl CliqueSearch<'_> {
    fn expand(&mut self, mut cand: FixedBitSet) -> Result<(), Exhausted> {
        self.meter.tick()?;
        let (order, bounds) = self.colour_sort(&cand);
        for idx in (0..order.len()).rev() {
            if self.current.len() + bounds[idx] <= self.best.len() {
                return Ok(());
            }
            let v = order[idx];
            self.current.push(v);
            let mut next = cand.clone();
            next.intersect_with(self.g.neighbors(v));
            if next.is_clear() {
                if self.current.len() > self.best.len() {
                    self.best = self.current.clone();
                }
            } else {
                self.expand(next)?;
            }
            self.current.pop();
            cand.set(v, false);
        }
        Ok(())
    }

    /// Greedy colouring of `cand`; returns vertices by non-decreasing colour
    /// and, for each position, the number of colours used so far.
    fn colour_sort(&self, cand: &FixedBitSet) -> (Vec<usize>, Vec<usize>) {
        let mut uncoloured = cand.clone();
        let mut order = Vec::with_capacity(cand.count_ones(..));
        let mut bounds = Vec::with_capacity(order.capacity());
        let mut colour = 0;
        while !uncoloured.is_clear() {
            colour += 1;
            let mut available = uncoloured.clone();
            while let Some(v) = available.minimum() {
                available.set(v, false);
                available.difference_with(self.g.neighbors(v));
                uncoloured.set(v, false);
                order.push(v);
                bounds.push(colour);
            }
        }
        (order, bounds)
    }
}
