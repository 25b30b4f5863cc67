//! Cooperative resource limits for table-sized computations.

use std::time::{Duration, Instant};

use num_traits::ToPrimitive;

use crate::counting;
use crate::error::{Error, Result};

/// Limits checked before and during large scans. `max_partitions` bounds
/// `π(n)` for any table or exhaustive scan over `P_n`.
#[derive(Clone, Debug)]
pub struct Budget {
    pub max_partitions: usize,
    pub deadline: Option<Instant>,
}

/// `π(27)`: the largest full scan allowed without raising the budget.
pub const DEFAULT_MAX_PARTITIONS: usize = 3010;

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_partitions: DEFAULT_MAX_PARTITIONS,
            deadline: None,
        }
    }
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget {
            max_partitions: usize::MAX,
            deadline: None,
        }
    }

    pub fn with_time_limit(mut self, limit: Duration) -> Self {
        self.deadline = Some(Instant::now() + limit);
        self
    }

    /// Fails when a scan over `P_n` would exceed the partition budget.
    pub fn check_scan(&self, what: &str, n: usize) -> Result<()> {
        let count = counting::pi(n).values()[n].to_usize().unwrap_or(usize::MAX);
        if count > self.max_partitions {
            return Err(Error::BudgetExceeded(format!(
                "{what} at n = {n} scans {count} partitions; the budget allows {}",
                self.max_partitions
            )));
        }
        self.check_time(what)
    }

    pub fn check_time(&self, what: &str) -> Result<()> {
        match self.deadline {
            Some(d) if Instant::now() > d => Err(Error::BudgetExceeded(format!(
                "{what} ran past the time limit"
            ))),
            _ => Ok(()),
        }
    }
}
