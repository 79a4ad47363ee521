//! Budget guard for exhaustive enumerations.
//!
//! Every enumeration entry point takes a [`Budget`] and refuses up front when
//! the candidate space is too large, rather than silently truncating. Pruned
//! searches, whose effective size is data-dependent, count visited nodes at
//! runtime through a [`BudgetCounter`].

use crate::error::{Error, Result};

/// Maximum number of candidates an enumeration may visit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    max: u64,
}

impl Budget {
    /// Default candidate bound (2^24).
    pub const DEFAULT_MAX: u64 = 1 << 24;

    pub fn new(max: u64) -> Self {
        Budget { max }
    }

    pub fn max(&self) -> u64 {
        self.max
    }

    /// Admit an enumeration of exactly `candidates` items.
    pub fn admit(&self, candidates: u128) -> Result<()> {
        if candidates > self.max as u128 {
            Err(Error::BudgetExceeded { candidates, budget: self.max })
        } else {
            Ok(())
        }
    }

    /// Admit an enumeration of `base^exp` items (overflow counts as exceeded).
    pub fn admit_power(&self, base: u64, exp: u32) -> Result<()> {
        match (base as u128).checked_pow(exp) {
            Some(count) => self.admit(count),
            None => Err(Error::BudgetExceeded { candidates: u128::MAX, budget: self.max }),
        }
    }

    /// Runtime counter for searches whose visited-node count is data-dependent.
    pub fn counter(&self) -> BudgetCounter {
        BudgetCounter { max: self.max, used: 0 }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max: Self::DEFAULT_MAX }
    }
}

/// Mutable node counter handed to pruned searches.
#[derive(Debug)]
pub struct BudgetCounter {
    max: u64,
    used: u64,
}

impl BudgetCounter {
    /// Record one visited node; errors once the budget is exhausted.
    pub fn tick(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.max {
            Err(Error::BudgetExceeded { candidates: self.used as u128, budget: self.max })
        } else {
            Ok(())
        }
    }

    pub fn used(&self) -> u64 {
        self.used
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn admits_within_bound() {
        let b = Budget::new(100);
        assert!(b.admit(100).is_ok());
        assert!(b.admit(101).is_err());
    }

    #[test]
    fn admit_power_handles_overflow() {
        let b = Budget::new(u64::MAX);
        // 251^60 overflows u128 and must be refused, not wrapped.
        assert!(b.admit_power(251, 60).is_err());
        assert!(b.admit_power(2, 24).is_ok());
    }

    #[test]
    fn counter_trips_at_max() {
        let b = Budget::new(3);
        let mut c = b.counter();
        assert!(c.tick().is_ok());
        assert!(c.tick().is_ok());
        assert!(c.tick().is_ok());
        assert!(c.tick().is_err());
    }

    #[test]
    fn default_is_2_pow_24() {
        assert_eq!(Budget::default().max(), 1 << 24);
    }
}
