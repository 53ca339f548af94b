//! Exact chromatic number: DSATUR branch and bound seeded with a maximum
//! clique (lower bound, pre-coloured) and a greedy DSATUR colouring (upper
//! bound).

use serde::{Deserialize, Serialize};

use crate::budget::{BudgetMeter, Exhausted, SearchBudget, SearchStats};
use crate::graph::{clique_number, Graph};

/// χ(G) with an optimal proper colouring and a clique witnessing the lower bound.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Coloring {
    pub chi: usize,
    pub coloring: Vec<usize>,
    pub clique: Vec<usize>,
    pub stats: SearchStats,
}

fn is_proper(g: &Graph, colours: &[usize]) -> bool {
    g.edges().all(|(u, v)| colours[u] != colours[v])
}

pub fn chromatic_number(g: &Graph, budget: &SearchBudget) -> Result<Coloring, Exhausted> {
    let n = g.order();
    let clique = clique_number(g, budget)?;
    if n == 0 {
        return Ok(Coloring { chi: 0, coloring: vec![], clique: vec![], stats: clique.stats });
    }
    let mut bb = Dsatur::new(g, budget.start());
    let greedy = bb.greedy();
    let mut best = greedy.iter().max().unwrap() + 1;
    let mut best_colouring = greedy;

    if best > clique.size {
        for (c, &v) in clique.vertices.iter().enumerate() {
            bb.assign(v, c);
        }
        bb.used = clique.size;
        bb.best = best;
        if let Some(found) = bb.search(clique.size)? {
            best = found.iter().max().unwrap() + 1;
            best_colouring = found;
        }
    }
    assert!(is_proper(g, &best_colouring), "colouring solver produced an improper colouring");
    let stats = bb.meter.stats().merge(clique.stats);
    Ok(Coloring { chi: best, coloring: best_colouring, clique: clique.vertices, stats })
}

const NONE: usize = usize::MAX;

struct Dsatur<'a> {
    g: &'a Graph,
    meter: BudgetMeter,
    colour: Vec<usize>,
    /// `counts[v][c]`: coloured neighbours of `v` with colour `c`
    counts: Vec<Vec<u32>>,
    saturation: Vec<usize>,
    used: usize,
    best: usize,
}

impl<'a> Dsatur<'a> {
    fn new(g: &'a Graph, meter: BudgetMeter) -> Self {
        let n = g.order();
        Dsatur {
            g,
            meter,
            colour: vec![NONE; n],
            counts: vec![vec![0; n + 1]; n],
            saturation: vec![0; n],
            used: 0,
            best: n + 1,
        }
    }

    fn assign(&mut self, v: usize, c: usize) {
        self.colour[v] = c;
        for u in self.g.neighbors(v).ones() {
            if self.counts[u][c] == 0 {
                self.saturation[u] += 1;
            }
            self.counts[u][c] += 1;
        }
    }

    fn unassign(&mut self, v: usize) {
        let c = std::mem::replace(&mut self.colour[v], NONE);
        for u in self.g.neighbors(v).ones() {
            self.counts[u][c] -= 1;
            if self.counts[u][c] == 0 {
                self.saturation[u] -= 1;
            }
        }
    }

    /// Uncoloured vertex with maximum saturation, then uncoloured degree, then lowest index.
    fn pick(&self) -> Option<usize> {
        (0..self.g.order())
            .filter(|&v| self.colour[v] == NONE)
            .max_by_key(|&v| {
                let free_deg = self.g.neighbors(v).ones().filter(|&u| self.colour[u] == NONE).count();
                (self.saturation[v], free_deg, std::cmp::Reverse(v))
            })
    }

    fn greedy(&mut self) -> Vec<usize> {
        while let Some(v) = self.pick() {
            let c = (0..).find(|&c| self.counts[v][c] == 0).unwrap();
            self.assign(v, c);
        }
        let out = self.colour.clone();
        for v in 0..self.g.order() {
            self.unassign(v);
        }
        out
    }

    fn search(&mut self, lower: usize) -> Result<Option<Vec<usize>>, Exhausted> {
        let mut found = None;
        self.recurse(lower, &mut found)?;
        Ok(found)
    }

    fn recurse(&mut self, lower: usize, found: &mut Option<Vec<usize>>) -> Result<(), Exhausted> {
        let Some(v) = self.pick() else {
            self.best = self.used;
            *found = Some(self.colour.clone());
            return Ok(());
        };
        if self.saturation[v] >= self.best - 1 {
            return Ok(());
        }
        let limit = (self.used + 1).min(self.best - 1);
        for c in 0..limit {
            if self.counts[v][c] != 0 {
                continue;
            }
            self.meter.tick()?;
            let opened = c == self.used;
            if opened {
                self.used += 1;
            }
            self.assign(v, c);
            self.recurse(lower, found)?;
            self.unassign(v);
            if opened {
                self.used -= 1;
            }
            if self.best <= lower {
                return Ok(());
            }
        }
        Ok(())
    }
}
