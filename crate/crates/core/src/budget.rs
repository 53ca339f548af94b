//! Search budgets shared by every exact solver.

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

/// Default node limit per query.
pub const DEFAULT_NODE_LIMIT: u64 = 100_000_000;
/// Default wall-clock limit per query, in seconds.
pub const DEFAULT_TIME_LIMIT: f64 = 300.0;
/// Environment variable overriding the default budget, as `"<nodes>,<seconds>"`.
pub const BUDGET_ENV: &str = "KNESER_LAB_BUDGET";

/// Limits on a single search. `None` means unlimited.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SearchBudget {
    pub node_limit: Option<u64>,
    pub time_limit: Option<f64>,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            node_limit: Some(DEFAULT_NODE_LIMIT),
            time_limit: Some(DEFAULT_TIME_LIMIT),
        }
    }
}

impl SearchBudget {
    pub fn unlimited() -> Self {
        SearchBudget {
            node_limit: None,
            time_limit: None,
        }
    }

    pub fn nodes(limit: u64) -> Self {
        SearchBudget {
            node_limit: Some(limit),
            time_limit: None,
        }
    }

    /// Parses `"<nodes>,<seconds>"`. Either side may be `-` or empty for "no limit".
    pub fn parse(text: &str) -> Option<Self> {
        let (nodes, secs) = text.trim().split_once(',')?;
        let nodes = match nodes.trim() {
            "" | "-" => None,
            t => Some(t.parse::<u64>().ok()?),
        };
        let secs = match secs.trim() {
            "" | "-" => None,
            t => {
                let v = t.parse::<f64>().ok()?;
                if !(v.is_finite() && v > 0.0) {
                    return None;
                }
                Some(v)
            }
        };
        Some(SearchBudget {
            node_limit: nodes,
            time_limit: secs,
        })
    }

    /// The default budget, overridden by `KNESER_LAB_BUDGET` when it parses.
    pub fn from_env() -> Self {
        std::env::var(BUDGET_ENV)
            .ok()
            .and_then(|v| Self::parse(&v))
            .unwrap_or_default()
    }

    pub fn start(&self) -> BudgetMeter {
        BudgetMeter {
            node_limit: self.node_limit,
            deadline: self
                .time_limit
                .map(|s| Instant::now() + Duration::from_secs_f64(s)),
            started: Instant::now(),
            nodes: 0,
        }
    }
}

/// Effort spent by one search.
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
pub struct SearchStats {
    pub nodes: u64,
    pub seconds: f64,
}

impl SearchStats {
    pub fn merge(self, other: SearchStats) -> SearchStats {
        SearchStats {
            nodes: self.nodes + other.nodes,
            seconds: self.seconds + other.seconds,
        }
    }
}

/// The budget ran out before the search could decide.
#[derive(Debug, Clone, Copy, PartialEq, thiserror::Error)]
#[error("search budget exhausted after {} nodes ({:.3}s)", .0.nodes, .0.seconds)]
pub struct Exhausted(pub SearchStats);

/// Running node/time counter for one search.
#[derive(Debug)]
pub struct BudgetMeter {
    node_limit: Option<u64>,
    deadline: Option<Instant>,
    started: Instant,
    nodes: u64,
}

impl BudgetMeter {
    /// Counts one search node; errors once a limit is crossed.
    #[inline]
    pub fn tick(&mut self) -> Result<(), Exhausted> {
        self.nodes += 1;
        if let Some(limit) = self.node_limit {
            if self.nodes > limit {
                return Err(Exhausted(self.stats()));
            }
        }
        if self.nodes & 0x3ff == 0 {
            if let Some(deadline) = self.deadline {
                if Instant::now() >= deadline {
                    return Err(Exhausted(self.stats()));
                }
            }
        }
        Ok(())
    }

    pub fn stats(&self) -> SearchStats {
        SearchStats {
            nodes: self.nodes,
            seconds: self.started.elapsed().as_secs_f64(),
        }
    }
}
