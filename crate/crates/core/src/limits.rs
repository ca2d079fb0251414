//! Search budgets.
//!
//! Budgets count search nodes rather than wall-clock time so that a result
//! (or a cap failure) is the same on every machine.

use crate::error::{Error, Result};

/// Environment variable overriding the default node budget.
pub const NODE_BUDGET_ENV: &str = "TDLAB_NODE_BUDGET";

pub const DEFAULT_NODE_BUDGET: u64 = 1_000_000;
pub const DEFAULT_MAX_COLUMNS: usize = 100_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Partial-assignment nodes one top-level search may expand.
    pub node_budget: u64,
    /// Minimal transversals one enumeration may emit.
    pub max_columns: usize,
}

impl Default for Limits {
    fn default() -> Self {
        let node_budget = std::env::var(NODE_BUDGET_ENV)
            .ok()
            .and_then(|s| s.trim().parse().ok())
            .unwrap_or(DEFAULT_NODE_BUDGET);
        Limits {
            node_budget,
            max_columns: DEFAULT_MAX_COLUMNS,
        }
    }
}

impl Limits {
    pub fn with_node_budget(mut self, nodes: u64) -> Self {
        self.node_budget = nodes;
        self
    }

    pub fn with_max_columns(mut self, columns: usize) -> Self {
        self.max_columns = columns;
        self
    }

    pub(crate) fn budget(&self, what: &'static str) -> Budget {
        Budget {
            remaining: self.node_budget,
            cap: self.node_budget,
            what,
        }
    }
}

#[derive(Debug)]
pub(crate) struct Budget {
    remaining: u64,
    cap: u64,
    what: &'static str,
}

impl Budget {
    #[inline]
    pub(crate) fn tick(&mut self) -> Result<()> {
        if self.remaining == 0 {
            return Err(Error::CapExceeded {
                what: self.what,
                cap: self.cap,
                lower_bound: None,
            });
        }
        self.remaining -= 1;
        Ok(())
    }
}
