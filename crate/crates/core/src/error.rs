use thiserror::Error;

/// Failures shared by the exact and Monte Carlo engines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum EngineError {
    #[error("no awakenings: credence is undefined")]
    NoAwakenings,
    #[error("quantum coin with unequal branch weights: use the branch engine (or pass its weights as pH)")]
    UseBranchEngine,
    #[error("operation requires a sequential protocol")]
    NotSequential,
    #[error("weeks = {weeks} exceeds the exact enumeration cap of {max}; use Monte Carlo")]
    TooManyWeeks { weeks: u32, max: u32 },
    #[error("sequence has {got} tosses but the protocol has {expected} weeks")]
    SequenceLength { expected: usize, got: usize },
    #[error("trials must be at least 1")]
    NoTrials,
    #[error("{name} must be positive and finite, got {value}")]
    NonPositive { name: &'static str, value: f64 },
}
