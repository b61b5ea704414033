use thiserror::Error;

/// Errors shared across the workbench.
#[derive(Debug, Error)]
pub enum Error {
    #[error("atom `{0}` outside universe")]
    AtomOutsideUniverse(String),

    #[error("universe mismatch: {0}")]
    UniverseMismatch(String),

    #[error("budget exceeded after {explored} explored nodes (budget {budget})")]
    BoundExceeded { explored: u64, budget: u64 },

    #[error("illegal strategy entry at round {round}: {detail}")]
    IllegalStrategy { round: usize, detail: String },

    #[error("strategy has the wrong class for this operation: expected {expected}, got {got}")]
    WrongStrategyClass {
        expected: &'static str,
        got: &'static str,
    },

    #[error("reflection hypothesis violated ({condition}): {detail}")]
    ReflectionViolation { condition: &'static str, detail: String },

    #[error("invalid instance: {0}")]
    InvalidInstance(String),

    #[error("invalid space: {0}")]
    InvalidSpace(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Node/enumeration budget threaded through the exhaustive searches.
#[derive(Debug, Clone)]
pub struct Budget {
    pub limit: u64,
    pub used: u64,
}

pub const DEFAULT_BUDGET: u64 = 1_000_000;

impl Budget {
    pub fn new(limit: u64) -> Self {
        Budget { limit, used: 0 }
    }

    pub fn tick(&mut self) -> Result<()> {
        self.tick_by(1)
    }

    pub fn tick_by(&mut self, n: u64) -> Result<()> {
        self.used = self.used.saturating_add(n);
        if self.used > self.limit {
            Err(Error::BoundExceeded {
                explored: self.used,
                budget: self.limit,
            })
        } else {
            Ok(())
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::new(DEFAULT_BUDGET)
    }
}
