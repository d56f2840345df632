use std::sync::atomic::{AtomicU64, Ordering};

use crate::error::{Error, Result};

/// Default cap on recursion nodes for multi-index counting.
pub const DEFAULT_NODE_BUDGET: u64 = 1_000_000_000;

/// Work counter shared by a computation; exceeding the limit is an error,
/// never a silent truncation.
#[derive(Debug)]
pub struct Budget {
    limit: u64,
    used: AtomicU64,
}

impl Budget {
    pub fn new(limit: u64) -> Self {
        Self { limit, used: AtomicU64::new(0) }
    }

    pub fn unlimited() -> Self {
        Self::new(u64::MAX)
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn used(&self) -> u64 {
        self.used.load(Ordering::Relaxed)
    }

    pub fn charge(&self, units: u64, what: &str) -> Result<()> {
        let before = self.used.fetch_add(units, Ordering::Relaxed);
        if before.saturating_add(units) > self.limit {
            Err(Error::BudgetExceeded { what: what.to_string(), limit: self.limit })
        } else {
            Ok(())
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Self::new(DEFAULT_NODE_BUDGET)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn charges_until_limit() {
        let b = Budget::new(3);
        assert!(b.charge(2, "x").is_ok());
        assert!(b.charge(1, "x").is_ok());
        assert!(matches!(b.charge(1, "x"), Err(Error::BudgetExceeded { limit: 3, .. })));
    }

    #[test]
    fn zero_budget_rejects_any_work() {
        assert!(Budget::new(0).charge(1, "x").is_err());
    }
}
