use std::time::{Duration, Instant};

use crate::error::{Error, Result};

/// Guard configuration shared by the expensive searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest group order the all-subgroups oracle accepts.
    pub order_bound: usize,
    /// Largest number of subgroups the oracle may enumerate.
    pub count_bound: usize,
    /// Largest centralizer-closed family.
    pub family_bound: usize,
    /// Largest group order for automorphism search.
    pub automorphism_bound: usize,
    /// Largest order validated exhaustively for associativity.
    pub associativity_bound: usize,
    pub deadline: Option<Instant>,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            order_bound: 256,
            count_bound: 100_000,
            family_bound: 200_000,
            automorphism_bound: 512,
            associativity_bound: 512,
            deadline: None,
        }
    }
}

impl Limits {
    pub fn with_order_bound(mut self, bound: usize) -> Self {
        self.order_bound = bound;
        self
    }

    pub fn with_time_budget(mut self, budget: Duration) -> Self {
        self.deadline = Some(Instant::now() + budget);
        self
    }

    pub fn check_deadline(&self) -> Result<()> {
        match self.deadline {
            Some(d) if Instant::now() > d => Err(Error::TimeBudget),
            _ => Ok(()),
        }
    }

    pub(crate) fn guard(what: &'static str, actual: usize, limit: usize) -> Result<()> {
        if actual > limit {
            Err(Error::SizeGuard {
                what,
                limit,
                actual,
            })
        } else {
            Ok(())
        }
    }
}
