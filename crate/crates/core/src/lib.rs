//! Per-awakening credences for Sleeping Beauty style protocols.
//!
//! * [`protocol`] describes experiments and the awakenings they produce.
//! * [`exact`] computes credences exactly, in rationals, under the
//!   equal-sequence-prior and awakening-weighted rules.
//! * [`montecarlo`] checks those numbers by seeded simulation and by settling
//!   per-awakening bets.
//! * [`branch`] models a quantum coin as branching worlds weighted by their
//!   measure of existence.

pub mod branch;
pub mod error;
pub mod exact;
pub mod montecarlo;
pub mod protocol;
pub mod rational;

pub use branch::{
    centered_credences, inner_product, opus_identity_check, roulette_measures, superpose,
    BranchError, CenteredCredences, CenteredProposition, Complex, StateVector, WorldNode, WorldTree,
};
pub use error::EngineError;
pub use exact::{
    conditional_credence, credence, fixed_composition_credence, prior, sequence_weight,
    CredenceReport, CredenceRule,
};
pub use montecarlo::{
    bet_evaluate, break_even_search, compare_sequential_vs_fixed, simulate,
    simulate_fixed_composition, BetLedger, Seed, SimulationStats,
};
pub use protocol::{
    awakenings_for, parse_protocol, total_awakenings, Awakening, AwakeningRule, CoinModel,
    OutcomeSequence, ProtocolError, ProtocolMode, ProtocolSpec, TossOutcome,
};
pub use rational::Rational;
