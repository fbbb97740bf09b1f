use std::cell::Cell;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("work budget exceeded ({used} of {limit} steps)")]
    BudgetExceeded { used: u64, limit: u64 },

    #[error("internal invariant violated: {0}")]
    InternalInvariantViolation(String),

    #[error("depth search of {requested} levels exceeds the cap of {cap}")]
    DepthTooLarge { requested: usize, cap: usize },

    #[error("table has {len} entries but index {index} was read")]
    TableTooShort { index: usize, len: usize },

    #[error("search cap {cap} is insufficient: {reason}")]
    CapInsufficient { cap: usize, reason: String },

    #[error("{0}")]
    Parse(String),

    #[error("{0}")]
    Io(String),
}

impl Error {
    pub fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }
}

/// Counter of elementary recursion steps shared by one computation.
///
/// Every unbounded product node, tree-depth evaluation and witness scan
/// charges one step. Once `used` passes `limit`, every further charge fails
/// with [`Error::BudgetExceeded`].
#[derive(Debug)]
pub struct Budget {
    limit: u64,
    used: Cell<u64>,
    product_nodes: Cell<u64>,
}

impl Budget {
    pub const DEFAULT_LIMIT: u64 = 100_000_000;

    pub fn new(limit: u64) -> Self {
        Budget {
            limit,
            used: Cell::new(0),
            product_nodes: Cell::new(0),
        }
    }

    pub fn unlimited() -> Self {
        Budget::new(u64::MAX)
    }

    pub fn charge(&self, steps: u64) -> Result<()> {
        let used = self.used.get().saturating_add(steps);
        self.used.set(used);
        if used > self.limit {
            return Err(Error::BudgetExceeded {
                used,
                limit: self.limit,
            });
        }
        Ok(())
    }

    /// Charges one step for a node of an unbounded product.
    pub fn charge_node(&self) -> Result<()> {
        self.product_nodes.set(self.product_nodes.get() + 1);
        self.charge(1)
    }

    pub fn product_nodes(&self) -> u64 {
        self.product_nodes.get()
    }

    pub fn used(&self) -> u64 {
        self.used.get()
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::new(Budget::DEFAULT_LIMIT)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn budget_trips_after_limit() {
        let b = Budget::new(3);
        assert!(b.charge(2).is_ok());
        assert!(b.charge(1).is_ok());
        assert_eq!(
            b.charge(1),
            Err(Error::BudgetExceeded { used: 4, limit: 3 })
        );
    }
}
