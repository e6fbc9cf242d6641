//! Wall-clock budgets for the exact searches.
//!
//! Exceeding a budget is always an explicit error, never a degraded answer.

use crate::error::{Error, Result};
use std::time::{Duration, Instant};

/// Deadline carried through every potentially expensive search.
#[derive(Clone, Copy, Debug)]
pub struct Budget {
    deadline: Option<Instant>,
}

impl Budget {
    /// Default per-call budget: 60 seconds.
    pub const DEFAULT_SECS: u64 = 60;

    pub fn seconds(secs: u64) -> Self {
        Budget {
            deadline: Some(Instant::now() + Duration::from_secs(secs)),
        }
    }

    pub fn millis(ms: u64) -> Self {
        Budget {
            deadline: Some(Instant::now() + Duration::from_millis(ms)),
        }
    }

    pub fn unlimited() -> Self {
        Budget { deadline: None }
    }

    pub fn check(&self, stage: &str) -> Result<()> {
        match self.deadline {
            Some(d) if Instant::now() > d => Err(Error::Budget {
                stage: stage.to_string(),
            }),
            _ => Ok(()),
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::seconds(Self::DEFAULT_SECS)
    }
}

/// Amortises `Instant::now` calls: checks the clock every 4096 ticks.
pub struct Ticker<'a> {
    budget: &'a Budget,
    stage: &'a str,
    count: u32,
}

impl<'a> Ticker<'a> {
    pub fn new(budget: &'a Budget, stage: &'a str) -> Self {
        Ticker {
            budget,
            stage,
            count: 0,
        }
    }

    #[inline]
    pub fn tick(&mut self) -> Result<()> {
        self.count = self.count.wrapping_add(1);
        if self.count & 0xfff == 0 {
            self.budget.check(self.stage)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unlimited_never_trips() {
        let b = Budget::unlimited();
        for _ in 0..10 {
            assert!(b.check("x").is_ok());
        }
    }

    #[test]
    fn expired_budget_errors_with_stage() {
        let b = Budget::millis(0);
        std::thread::sleep(Duration::from_millis(5));
        let err = b.check("girth").unwrap_err();
        assert!(err.to_string().contains("girth"));
    }
}
