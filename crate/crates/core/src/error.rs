use alloc::string::String;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("cyclotomic order mismatch: {0} vs {1}")]
    OrderMismatch(u32, u32),

    #[error("cannot embed order {from} into order {to}: {from} does not divide {to}")]
    NotDivisible { from: u32, to: u32 },

    #[error("element cap of {cap} exceeded")]
    CapExceeded { cap: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("not a subgroup: {0}")]
    NotSubgroup(String),

    #[error("l must be an odd prime, got {0}")]
    InvalidPrime(u32),

    #[error("generating set budget of {budget} is insufficient")]
    BudgetInsufficient { budget: usize },

    #[error("class functions live on different groups")]
    GroupMismatch,

    #[error("unknown catalog instance {0:?}")]
    UnknownInstance(String),

    #[error("{0}")]
    Usage(String),

    /// The input does not satisfy the hypotheses of the statement being checked.
    #[error("hypothesis not met: {0}")]
    Hypothesis(String),

    /// Two independent computations of the same quantity disagreed.
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
}

impl Error {
    /// Resource errors are the ones caused by size caps rather than bad input.
    pub fn is_resource(&self) -> bool {
        matches!(self, Error::CapExceeded { .. })
    }
}
