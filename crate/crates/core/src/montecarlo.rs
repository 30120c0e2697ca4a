//! Seeded Monte Carlo verification of per-awakening credences.
//!
//! Random numbers come from ChaCha8 keyed by `seed_from_u64(seed)`. Trial `t`
//! reads its own stream (`set_stream(t)`), drawing one 64-bit word per week,
//! so any partition of trials across threads yields bit-identical results.
//! Trials are processed in fixed chunks of [`CHUNK_TRIALS`] and reduced in
//! chunk order.
//!
//! Awakenings inside one trial share a coin sequence and are correlated, so
//! uncertainty is always estimated across trials: the pooled frequency
//! `sum h_i / sum a_i` is a ratio estimator and its standard error is the
//! delta-method value `sqrt(sum (h_i - f a_i)^2 / (n (n - 1))) / mean(a)`.

use rand::seq::SliceRandom;
use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::EngineError;
use crate::exact::{self, classical_heads_probability, CredenceRule};
use crate::protocol::{AwakeningRule, ProtocolSpec, TossOutcome};
use crate::rational::Rational;

/// Trials per parallel work unit.
pub const CHUNK_TRIALS: u64 = 4096;

/// Pass/fail threshold in standard errors.
pub const SE_THRESHOLD: f64 = 4.0;

/// Bootstrap replicates used when a single long trial has to supply its own
/// error estimate.
pub const BOOTSTRAP_REPLICATES: usize = 1000;

/// Stream reserved for bootstrap resampling; never used by a trial in practice.
const BOOTSTRAP_STREAM: u64 = u64::MAX;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Seed(pub u64);

impl Seed {
    fn trial_rng(self, trial: u64) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.0);
        rng.set_stream(trial);
        rng
    }
}

impl From<u64> for Seed {
    fn from(v: u64) -> Self {
        Seed(v)
    }
}

/// Coin drawn by comparing a uniform 64-bit word with `floor(pH * 2^64)`.
#[derive(Debug, Clone, Copy)]
struct CoinSampler {
    threshold: u128,
}

impl CoinSampler {
    fn new(p_h: &Rational) -> Self {
        let scaled = p_h.clone() * Rational::from_integer(num_bigint::BigInt::from(1u128 << 64));
        let threshold = (scaled.numer() / scaled.denom())
            .try_into()
            .expect("pH in [0, 1] scales into 65 bits");
        CoinSampler { threshold }
    }

    fn toss(&self, rng: &mut ChaCha8Rng) -> TossOutcome {
        if (rng.next_u64() as u128) < self.threshold {
            TossOutcome::H
        } else {
            TossOutcome::T
        }
    }
}

/// Additive sufficient statistics over trials.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
struct Tally {
    trials: u64,
    total: u64,
    heads: u64,
    sum_hh: u128,
    sum_aa: u128,
    sum_ha: u128,
    /// Trials with at least one awakening, and sums of their own frequencies.
    rated_trials: u64,
    rate_sum: f64,
    rate_sum_sq: f64,
}

impl Tally {
    fn push(&mut self, heads: u64, total: u64) {
        self.trials += 1;
        self.total += total;
        self.heads += heads;
        self.sum_hh += heads as u128 * heads as u128;
        self.sum_aa += total as u128 * total as u128;
        self.sum_ha += heads as u128 * total as u128;
        if total > 0 {
            let r = heads as f64 / total as f64;
            self.rated_trials += 1;
            self.rate_sum += r;
            self.rate_sum_sq += r * r;
        }
    }

    fn merge(mut self, other: &Tally) -> Tally {
        self.trials += other.trials;
        self.total += other.total;
        self.heads += other.heads;
        self.sum_hh += other.sum_hh;
        self.sum_aa += other.sum_aa;
        self.sum_ha += other.sum_ha;
        self.rated_trials += other.rated_trials;
        self.rate_sum += other.rate_sum;
        self.rate_sum_sq += other.rate_sum_sq;
        self
    }

    /// Delta-method standard error of the pooled ratio `heads / total`.
    fn ratio_se(&self) -> Option<f64> {
        if self.trials < 2 || self.total == 0 {
            return None;
        }
        let n = self.trials as f64;
        let f = self.heads as f64 / self.total as f64;
        let ss = self.sum_hh as f64 - 2.0 * f * self.sum_ha as f64 + f * f * self.sum_aa as f64;
        let var = ss.max(0.0) / (n - 1.0);
        let mean_a = self.total as f64 / n;
        Some((var / n).sqrt() / mean_a)
    }
}

/// Mean, sample standard deviation, and standard error of the per-trial
/// H-frequencies (trials without awakenings are skipped).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FrequencySummary {
    pub trials: u64,
    pub mean: f64,
    pub std_dev: Option<f64>,
    pub std_error: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SimulationStats {
    pub trials: u64,
    pub total_awakenings: u64,
    pub h_awakenings: u64,
    /// Pooled per-awakening H frequency.
    pub frequency: f64,
    /// Across-trial standard error of `frequency`; `None` with fewer than two trials.
    pub se: Option<f64>,
    pub per_trial: FrequencySummary,
    #[serde(skip)]
    tally: Tally,
}

impl SimulationStats {
    fn from_tally(tally: Tally) -> Result<Self, EngineError> {
        if tally.total == 0 {
            return Err(EngineError::NoAwakenings);
        }
        let m = tally.rated_trials as f64;
        let mean = tally.rate_sum / m;
        let std_dev = (tally.rated_trials >= 2).then(|| {
            ((tally.rate_sum_sq - m * mean * mean).max(0.0) / (m - 1.0)).sqrt()
        });
        Ok(SimulationStats {
            trials: tally.trials,
            total_awakenings: tally.total,
            h_awakenings: tally.heads,
            frequency: tally.heads as f64 / tally.total as f64,
            se: tally.ratio_se(),
            per_trial: FrequencySummary {
                trials: tally.rated_trials,
                mean,
                std_dev,
                std_error: std_dev.map(|s| s / m.sqrt()),
            },
            tally,
        })
    }

    /// Combines runs over disjoint trial sets.
    pub fn merge(&self, other: &SimulationStats) -> SimulationStats {
        SimulationStats::from_tally(self.tally.merge(&other.tally))
            .expect("merged stats have awakenings")
    }
}

fn sequential_setup(protocol: &ProtocolSpec, trials: u64) -> Result<CoinSampler, EngineError> {
    if !protocol.is_sequential() {
        return Err(EngineError::NotSequential);
    }
    if trials == 0 {
        return Err(EngineError::NoTrials);
    }
    Ok(CoinSampler::new(&classical_heads_probability(protocol.coin())?))
}

fn run_trial(sampler: CoinSampler, rule: AwakeningRule, weeks: u32, seed: Seed, trial: u64) -> (u64, u64) {
    let mut rng = seed.trial_rng(trial);
    let (mut heads, mut total) = (0u64, 0u64);
    for _ in 0..weeks {
        let toss = sampler.toss(&mut rng);
        let n = rule.count(toss) as u64;
        total += n;
        if toss == TossOutcome::H {
            heads += n;
        }
    }
    (heads, total)
}

/// Runs trials `[start, end)`.
fn run_range(protocol: &ProtocolSpec, sampler: CoinSampler, seed: Seed, start: u64, end: u64) -> Tally {
    let mut tally = Tally::default();
    for t in start..end {
        let (h, a) = run_trial(sampler, protocol.rule(), protocol.weeks(), seed, t);
        tally.push(h, a);
    }
    tally
}

/// Simulates `trials` independent runs of a sequential protocol.
pub fn simulate(protocol: &ProtocolSpec, trials: u64, seed: Seed) -> Result<SimulationStats, EngineError> {
    simulate_range(protocol, 0, trials, seed)
}

/// Simulates trials `[first, first + trials)` of the stream keyed by `seed`.
/// Disjoint ranges merge into the same statistics as one run over their union.
pub fn simulate_range(
    protocol: &ProtocolSpec,
    first: u64,
    trials: u64,
    seed: Seed,
) -> Result<SimulationStats, EngineError> {
    let sampler = sequential_setup(protocol, trials)?;
    let end = first.checked_add(trials).ok_or(EngineError::NoTrials)?;
    let chunks = trials.div_ceil(CHUNK_TRIALS);
    let tallies: Vec<Tally> = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let start = first + c * CHUNK_TRIALS;
            run_range(protocol, sampler, seed, start, (start + CHUNK_TRIALS).min(end))
        })
        .collect();
    let tally = tallies.iter().fold(Tally::default(), |acc, t| acc.merge(t));
    SimulationStats::from_tally(tally)
}

/// A shuffled schedule of `n_h` H-placements and `n_t` T-placements.
pub fn shuffled_schedule(n_h: u64, n_t: u64, seed: Seed) -> Result<Vec<TossOutcome>, EngineError> {
    if n_h == 0 && n_t == 0 {
        return Err(EngineError::NoAwakenings);
    }
    let mut schedule: Vec<TossOutcome> = std::iter::repeat_n(TossOutcome::H, n_h as usize)
        .chain(std::iter::repeat_n(TossOutcome::T, n_t as usize))
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed.0);
    schedule.shuffle(&mut rng);
    Ok(schedule)
}

/// Walks a shuffled fixed-composition schedule and counts H awakenings.
/// The frequency is `n_h / (n_h + n_t)` for every seed.
pub fn simulate_fixed_composition(n_h: u64, n_t: u64, seed: Seed) -> Result<SimulationStats, EngineError> {
    let schedule = shuffled_schedule(n_h, n_t, seed)?;
    let heads = schedule.iter().filter(|&&t| t == TossOutcome::H).count() as u64;
    let mut tally = Tally::default();
    tally.push(heads, schedule.len() as u64);
    SimulationStats::from_tally(tally)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BetLedger {
    pub stake_per_awakening: f64,
    /// Units returned per unit staked when the awakening's coin is H.
    pub odds_payout_on_h: f64,
    pub net_payoff: f64,
    pub awakenings_bet: u64,
    pub mean_payoff_per_awakening: f64,
    /// Across-trial standard error of the mean payoff per awakening.
    pub se: Option<f64>,
}

/// Beauty stakes `stake` on H at every awakening and is paid `odds * stake`
/// whenever the coin of that week is H.
pub fn bet_evaluate(
    protocol: &ProtocolSpec,
    odds: f64,
    stake: f64,
    trials: u64,
    seed: Seed,
) -> Result<BetLedger, EngineError> {
    for (name, value) in [("odds", odds), ("stake", stake)] {
        if !(value.is_finite() && value > 0.0) {
            return Err(EngineError::NonPositive { name, value });
        }
    }
    let stats = simulate(protocol, trials, seed)?;
    Ok(ledger_from_stats(&stats, odds, stake))
}

/// Settles the per-awakening bets implied by a finished simulation.
pub fn ledger_from_stats(stats: &SimulationStats, odds: f64, stake: f64) -> BetLedger {
    let net_payoff = stake * (odds * stats.h_awakenings as f64 - stats.total_awakenings as f64);
    BetLedger {
        stake_per_awakening: stake,
        odds_payout_on_h: odds,
        net_payoff,
        awakenings_bet: stats.total_awakenings,
        mean_payoff_per_awakening: net_payoff / stats.total_awakenings as f64,
        // payoff per trial is stake * (odds h_i - a_i); its ratio residual is
        // stake * odds * (h_i - f a_i)
        se: stats.se.map(|se| stake * odds * se),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BreakEven {
    /// `1 / odds*`, which is the pooled per-awakening H frequency.
    pub implied_credence: f64,
    pub break_even_odds: f64,
    pub se: Option<f64>,
}

/// Odds at which the mean payoff per awakening is zero. Solving
/// `odds * f - 1 = 0` gives `odds* = 1 / f` directly, so no search is run.
pub fn break_even_search(protocol: &ProtocolSpec, trials: u64, seed: Seed) -> Result<BreakEven, EngineError> {
    let stats = simulate(protocol, trials, seed)?;
    if stats.h_awakenings == 0 {
        return Ok(BreakEven {
            implied_credence: 0.0,
            break_even_odds: f64::INFINITY,
            se: stats.se,
        });
    }
    Ok(BreakEven {
        implied_credence: stats.frequency,
        break_even_odds: 1.0 / stats.frequency,
        se: stats.se,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SeMethod {
    AcrossTrials,
    WeekBootstrap,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FixedCounterpart {
    pub n_h: u64,
    pub n_t: u64,
    pub credence: Rational,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClosenessReport {
    pub weeks: u32,
    pub trials: u64,
    pub sequential_frequency: f64,
    /// Exact awakening-weighted credence, identical for every number of weeks.
    pub target: Rational,
    /// Fixed-composition experiment with the expected number of H weeks.
    pub fixed: FixedCounterpart,
    pub gap: f64,
    pub se: f64,
    pub se_method: SeMethod,
    pub pass: bool,
}

/// Compares the sequential many-week experiment with its fixed-composition
/// counterpart. Passes when `|frequency - target| < 4 SE`. With one trial the
/// SE comes from a bootstrap over weeks (weeks are i.i.d., so each week is a
/// block).
pub fn compare_sequential_vs_fixed(
    protocol: &ProtocolSpec,
    trials: u64,
    seed: Seed,
) -> Result<ClosenessReport, EngineError> {
    let sampler = sequential_setup(protocol, trials)?;
    let rule = protocol.rule();
    let one_week = ProtocolSpec::sequential(1, rule, protocol.coin().clone())
        .map_err(|_| EngineError::NotSequential)?;
    let target = exact::credence(&one_week, CredenceRule::AwakeningWeighted)?.total;

    let p_h = classical_heads_probability(protocol.coin())?;
    let weeks = protocol.weeks();
    let expected_h_weeks = round_half_up(&(p_h * Rational::from(weeks as u64)));
    let fixed_n_h = expected_h_weeks * rule.count(TossOutcome::H) as u64;
    let fixed_n_t = (weeks as u64 - expected_h_weeks) * rule.count(TossOutcome::T) as u64;
    let fixed = FixedCounterpart {
        n_h: fixed_n_h,
        n_t: fixed_n_t,
        credence: exact::fixed_composition_credence(fixed_n_h, fixed_n_t)?,
    };

    let (frequency, se, se_method) = if trials >= 2 {
        let stats = simulate(protocol, trials, seed)?;
        (stats.frequency, stats.se.unwrap_or(0.0), SeMethod::AcrossTrials)
    } else {
        let per_week = single_trial_weeks(sampler, rule, weeks, seed);
        let (h, a) = per_week
            .iter()
            .fold((0u64, 0u64), |(h, a), w| (h + w.0, a + w.1));
        if a == 0 {
            return Err(EngineError::NoAwakenings);
        }
        let se = week_bootstrap_se(&per_week, seed);
        (h as f64 / a as f64, se, SeMethod::WeekBootstrap)
    };
    let gap = (frequency - target.to_f64()).abs();
    Ok(ClosenessReport {
        weeks,
        trials,
        sequential_frequency: frequency,
        target,
        fixed,
        gap,
        se,
        se_method,
        // a zero SE only arises for deterministic coins, where the gap is exactly zero
        pass: gap < SE_THRESHOLD * se || gap == 0.0,
    })
}

fn round_half_up(x: &Rational) -> u64 {
    let twice = x.clone() * Rational::from_integer(2) + Rational::one();
    let floor: num_bigint::BigInt = twice.numer() / (twice.denom() * 2);
    floor.try_into().expect("week count fits in u64")
}

/// `(h, a)` per week of trial 0, drawing exactly what [`simulate`] draws.
fn single_trial_weeks(sampler: CoinSampler, rule: AwakeningRule, weeks: u32, seed: Seed) -> Vec<(u64, u64)> {
    let mut rng = seed.trial_rng(0);
    (0..weeks)
        .map(|_| {
            let toss = sampler.toss(&mut rng);
            let n = rule.count(toss) as u64;
            if toss == TossOutcome::H { (n, n) } else { (0, n) }
        })
        .collect()
}

fn week_bootstrap_se(per_week: &[(u64, u64)], seed: Seed) -> f64 {
    let mut rng = seed.trial_rng(BOOTSTRAP_STREAM);
    let n = per_week.len();
    let mut replicates = Vec::with_capacity(BOOTSTRAP_REPLICATES);
    while replicates.len() < BOOTSTRAP_REPLICATES {
        let (mut h, mut a) = (0u64, 0u64);
        for _ in 0..n {
            let w = per_week[rng.random_range(0..n)];
            h += w.0;
            a += w.1;
        }
        if a > 0 {
            replicates.push(h as f64 / a as f64);
        }
    }
    let m = replicates.len() as f64;
    let mean = replicates.iter().sum::<f64>() / m;
    (replicates.iter().map(|r| (r - mean).powi(2)).sum::<f64>() / (m - 1.0)).sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::protocol::CoinModel;

    fn certain_heads(weeks: u32) -> ProtocolSpec {
        ProtocolSpec::sequential(
            weeks,
            AwakeningRule::monday_tuesday(),
            CoinModel::classical(Rational::one()).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn certain_coin_gives_exact_frequency() {
        for seed in [0, 1, 99] {
            let stats = simulate(&certain_heads(3), 50, Seed(seed)).unwrap();
            assert_eq!(stats.frequency, 1.0);
            assert_eq!(stats.h_awakenings, 150);
            assert_eq!(stats.se, Some(0.0));
        }
        let never = ProtocolSpec::sequential(
            1,
            AwakeningRule::monday_tuesday(),
            CoinModel::classical(Rational::zero()).unwrap(),
        )
        .unwrap();
        assert_eq!(simulate(&never, 10, Seed(3)).unwrap().h_awakenings, 0);
    }

    #[test]
    fn same_seed_same_stats() {
        let p = ProtocolSpec::fair(2).unwrap();
        assert_eq!(simulate(&p, 10_000, Seed(7)).unwrap(), simulate(&p, 10_000, Seed(7)).unwrap());
        assert_ne!(simulate(&p, 10_000, Seed(7)).unwrap(), simulate(&p, 10_000, Seed(8)).unwrap());
    }

    #[test]
    fn split_runs_merge_to_the_whole() {
        let p = ProtocolSpec::fair(3).unwrap();
        let whole = simulate(&p, 10_000, Seed(5)).unwrap();
        let a = simulate_range(&p, 0, 3_333, Seed(5)).unwrap();
        let b = simulate_range(&p, 3_333, 6_667, Seed(5)).unwrap();
        let merged = a.merge(&b);
        assert_eq!(merged.trials, whole.trials);
        assert_eq!(merged.total_awakenings, whole.total_awakenings);
        assert_eq!(merged.h_awakenings, whole.h_awakenings);
        assert_eq!(merged.frequency, whole.frequency);
    }

    #[test]
    fn per_trial_mean_is_the_halfer_number() {
        // one-week trials have frequency 1 (H) or 0 (T): the per-trial mean
        // tracks 1/2 while the pooled per-awakening frequency tracks 1/3
        let stats = simulate(&ProtocolSpec::fair(1).unwrap(), 100_000, Seed(11)).unwrap();
        let pt = stats.per_trial;
        assert!((pt.mean - 0.5).abs() < 4.0 * pt.std_error.unwrap());
        assert!((stats.frequency - 1.0 / 3.0).abs() < 4.0 * stats.se.unwrap());
    }

    #[test]
    fn rejects_bad_inputs() {
        let p = ProtocolSpec::fair(1).unwrap();
        assert_eq!(simulate(&p, 0, Seed(1)), Err(EngineError::NoTrials));
        assert!(matches!(
            bet_evaluate(&p, 0.0, 1.0, 10, Seed(1)),
            Err(EngineError::NonPositive { name: "odds", .. })
        ));
        assert!(matches!(
            bet_evaluate(&p, 2.0, -1.0, 10, Seed(1)),
            Err(EngineError::NonPositive { name: "stake", .. })
        ));
        let skew = ProtocolSpec::sequential(
            1,
            AwakeningRule::monday_tuesday(),
            CoinModel::quantum(
                num_complex::Complex64::new(0.6, 0.0),
                num_complex::Complex64::new(0.8, 0.0),
            )
            .unwrap(),
        )
        .unwrap();
        assert_eq!(simulate(&skew, 10, Seed(1)), Err(EngineError::UseBranchEngine));
    }

    #[test]
    fn fixed_composition_is_seed_invariant() {
        let a = simulate_fixed_composition(2609, 5218, Seed(1)).unwrap();
        let b = simulate_fixed_composition(2609, 5218, Seed(2)).unwrap();
        assert_eq!(a.h_awakenings, 2609);
        assert_eq!(a.total_awakenings, 7827);
        assert_eq!(a.frequency, b.frequency);
        assert_eq!(a.frequency, 2609.0 / 7827.0);
        assert_eq!(simulate_fixed_composition(0, 5, Seed(4)).unwrap().frequency, 0.0);
        assert_eq!(simulate_fixed_composition(0, 0, Seed(4)), Err(EngineError::NoAwakenings));
    }

    #[test]
    fn shuffles_differ_by_seed_but_keep_counts() {
        let schedules: Vec<_> = (0..16).map(|s| shuffled_schedule(1, 2, Seed(s)).unwrap()).collect();
        assert!(schedules.iter().all(|s| s.iter().filter(|&&t| t == TossOutcome::H).count() == 1));
        assert!(schedules.iter().any(|s| s != &schedules[0]));
    }

    #[test]
    fn certain_heads_unit_odds_break_even_exactly() {
        let ledger = bet_evaluate(&certain_heads(1), 1.0, 1.0, 100, Seed(2)).unwrap();
        assert_eq!(ledger.net_payoff, 0.0);
        let be = break_even_search(&certain_heads(1), 100, Seed(2)).unwrap();
        assert_eq!(be.implied_credence, 1.0);
        assert_eq!(be.break_even_odds, 1.0);
    }

    #[test]
    fn payoff_identity_on_the_same_tally() {
        let p = ProtocolSpec::fair(2).unwrap();
        let stats = simulate(&p, 5_000, Seed(21)).unwrap();
        for (odds, stake) in [(3.0, 1.0), (2.0, 2.5), (1.7, 0.1)] {
            let ledger = ledger_from_stats(&stats, odds, stake);
            let expected = (odds * stats.frequency - 1.0) * stake;
            assert!((ledger.mean_payoff_per_awakening - expected).abs() <= 1e-12 * expected.abs().max(1.0));
        }
    }

    #[test]
    fn compare_symmetric_protocol_targets_one_half() {
        let p = ProtocolSpec::sequential(4, AwakeningRule::new(1, 1).unwrap(), CoinModel::ClassicalFair)
            .unwrap();
        let report = compare_sequential_vs_fixed(&p, 20_000, Seed(3)).unwrap();
        assert_eq!(report.target, Rational::half());
        assert_eq!(report.fixed.credence, Rational::half());
        assert!(report.pass);
    }

    #[test]
    fn compare_long_single_trial_uses_bootstrap() {
        let report = compare_sequential_vs_fixed(&ProtocolSpec::fair(5218).unwrap(), 1, Seed(17)).unwrap();
        assert_eq!(report.se_method, SeMethod::WeekBootstrap);
        assert_eq!((report.fixed.n_h, report.fixed.n_t), (2609, 5218));
        assert_eq!(report.fixed.credence, Rational::new(1, 3));
        let single = simulate(&ProtocolSpec::fair(5218).unwrap(), 1, Seed(17)).unwrap();
        assert_eq!(report.sequential_frequency, single.frequency);
        assert!(report.pass, "{report:?}");
    }

    #[test]
    fn round_half_up_rounds() {
        assert_eq!(round_half_up(&Rational::new(5, 2)), 3);
        assert_eq!(round_half_up(&Rational::new(7, 3)), 2);
        assert_eq!(round_half_up(&Rational::from_integer(4)), 4);
    }
}
