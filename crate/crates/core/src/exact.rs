//! Exact per-awakening credences by enumerating every toss sequence.
//!
//! The credence in H on awakening is decomposed over toss sequences `s` as
//! `p(H) = sum_s p(H | s) p(s)`. The two rules differ only in the prior `p(s)`:
//!
//! * [`CredenceRule::EqualSequencePrior`] keeps the coin's own sequence weight
//!   `w(s)` (renormalized over sequences that produce at least one awakening).
//! * [`CredenceRule::AwakeningWeighted`] weights each sequence by its awakening
//!   count: `w(s) a(s) / sum_s' w(s') a(s')`.
//!
//! The conditional `p(H | s)` is the fraction of the awakenings of `s` that
//! happen in an H week. No floating point is used here.

use std::fmt;
use std::str::FromStr;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::EngineError;
use crate::protocol::{
    total_awakenings, AwakeningRule, CoinModel, OutcomeSequence, ProtocolSpec,
    TossOutcome, AMPLITUDE_TOLERANCE,
};
use crate::rational::Rational;

/// Largest number of weeks enumerated exactly (`2^24` sequences).
pub const MAX_EXACT_WEEKS: u32 = 24;

/// Decimal places used when rendering rationals.
pub const DECIMAL_PLACES: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CredenceRule {
    /// Every toss sequence keeps its coin weight ("halfer").
    EqualSequencePrior,
    /// Sequences weighted by how many awakenings they produce ("thirder").
    AwakeningWeighted,
}

impl CredenceRule {
    pub fn name(self) -> &'static str {
        match self {
            CredenceRule::EqualSequencePrior => "lewis",
            CredenceRule::AwakeningWeighted => "elga",
        }
    }
}

impl fmt::Display for CredenceRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CredenceRule {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "lewis" | "halfer" | "equal-sequence-prior" => Ok(CredenceRule::EqualSequencePrior),
            "elga" | "thirder" | "awakening-weighted" => Ok(CredenceRule::AwakeningWeighted),
            other => Err(format!("unknown credence rule `{other}` (expected lewis or elga)")),
        }
    }
}

impl Serialize for CredenceRule {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceCredence {
    pub sequence: OutcomeSequence,
    pub prior: Rational,
    /// `None` when the sequence produces no awakenings.
    pub conditional: Option<Rational>,
}

impl Serialize for SequenceCredence {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("SequenceCredence", 3)?;
        st.serialize_field("sequence", &self.sequence.to_string())?;
        st.serialize_field("prior", &self.prior)?;
        st.serialize_field("conditional", &self.conditional)?;
        st.end()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CredenceReport {
    pub rule: CredenceRule,
    pub per_sequence: Vec<SequenceCredence>,
    pub total: Rational,
}

impl CredenceReport {
    pub fn prior_sum(&self) -> Rational {
        self.per_sequence.iter().map(|s| &s.prior).sum()
    }

    pub fn get(&self, sequence: &str) -> Option<&SequenceCredence> {
        self.per_sequence
            .iter()
            .find(|s| s.sequence.to_string() == sequence)
    }
}

impl Serialize for CredenceReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("CredenceReport", 4)?;
        st.serialize_field("rule", &self.rule)?;
        st.serialize_field("per_sequence", &self.per_sequence)?;
        st.serialize_field("total", &self.total)?;
        st.serialize_field("total_decimal", &self.total.to_decimal(DECIMAL_PLACES))?;
        st.end()
    }
}

/// Heads probability of a coin usable by the classical engines. A quantum coin
/// is accepted only when its branch weights are equal, mapping to `1/2`.
pub fn classical_heads_probability(coin: &CoinModel) -> Result<Rational, EngineError> {
    match coin.classical_p_h() {
        Some(p) => Ok(p),
        None => {
            let (wh, wt) = coin.weights();
            if (wh - wt).abs() <= AMPLITUDE_TOLERANCE {
                Ok(Rational::half())
            } else {
                Err(EngineError::UseBranchEngine)
            }
        }
    }
}

/// Product over weeks of `pH` or `1 - pH`.
pub fn sequence_weight(seq: &OutcomeSequence, coin: &CoinModel) -> Result<Rational, EngineError> {
    let p_h = classical_heads_probability(coin)?;
    let p_t = Rational::one() - &p_h;
    Ok(seq
        .tosses()
        .iter()
        .map(|t| match t {
            TossOutcome::H => p_h.clone(),
            TossOutcome::T => p_t.clone(),
        })
        .product())
}

/// Fraction of the awakenings of `seq` whose week's coin shows `proposition`.
pub fn conditional_credence(
    seq: &OutcomeSequence,
    rule: AwakeningRule,
    proposition: TossOutcome,
) -> Result<Rational, EngineError> {
    let total = total_awakenings(seq, rule);
    if total == 0 {
        return Err(EngineError::NoAwakenings);
    }
    let matching = seq.tosses().iter().filter(|&&t| t == proposition).count() as u64
        * rule.count(proposition) as u64;
    Ok(Rational::new(matching, total))
}

fn check_enumerable(protocol: &ProtocolSpec) -> Result<(), EngineError> {
    if !protocol.is_sequential() {
        return Err(EngineError::NotSequential);
    }
    if protocol.weeks() > MAX_EXACT_WEEKS {
        return Err(EngineError::TooManyWeeks {
            weeks: protocol.weeks(),
            max: MAX_EXACT_WEEKS,
        });
    }
    Ok(())
}

/// Weight of each head count `k`: `pH^k (1-pH)^(weeks-k)`.
struct HeadCountWeights {
    per_sequence: Vec<Rational>,
    rule: AwakeningRule,
    weeks: u32,
}

impl HeadCountWeights {
    fn new(protocol: &ProtocolSpec) -> Result<Self, EngineError> {
        let p_h = classical_heads_probability(protocol.coin())?;
        let p_t = Rational::one() - &p_h;
        let n = protocol.weeks();
        let per_sequence = (0..=n).map(|k| p_h.pow(k) * p_t.pow(n - k)).collect();
        Ok(HeadCountWeights {
            per_sequence,
            rule: protocol.rule(),
            weeks: n,
        })
    }

    fn awakenings(&self, heads: u32) -> u64 {
        heads as u64 * self.rule.count(TossOutcome::H) as u64
            + (self.weeks - heads) as u64 * self.rule.count(TossOutcome::T) as u64
    }

    /// `sum_s w(s) f(k(s))`, grouped by head count with binomial multiplicities.
    fn mass(&self, f: impl Fn(u32) -> Rational) -> Rational {
        let mut binom = Rational::one();
        let mut acc = Rational::zero();
        for k in 0..=self.weeks {
            acc = acc + &binom * &self.per_sequence[k as usize] * f(k);
            binom = binom * Rational::new(self.weeks - k, k + 1);
        }
        acc
    }

    /// Normalizer of the prior under `rule`.
    fn normalizer(&self, rule: CredenceRule) -> Result<Rational, EngineError> {
        let mass = match rule {
            CredenceRule::AwakeningWeighted => self.mass(|k| Rational::from(self.awakenings(k))),
            CredenceRule::EqualSequencePrior => self.mass(|k| {
                if self.awakenings(k) > 0 {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            }),
        };
        if mass.is_zero() {
            Err(EngineError::NoAwakenings)
        } else {
            Ok(mass)
        }
    }

    fn prior(&self, heads: u32, rule: CredenceRule, normalizer: &Rational) -> Rational {
        let a = self.awakenings(heads);
        if a == 0 {
            return Rational::zero();
        }
        let w = &self.per_sequence[heads as usize];
        match rule {
            CredenceRule::AwakeningWeighted => w * &Rational::from(a) / normalizer,
            CredenceRule::EqualSequencePrior => w / normalizer,
        }
    }
}

/// Prior `p(seq)` on awakening. Sequences without awakenings get prior 0 under
/// both rules; under the equal-sequence rule the remaining weights are
/// renormalized, which reduces to `w(seq)` whenever every sequence wakes Beauty.
pub fn prior(
    seq: &OutcomeSequence,
    protocol: &ProtocolSpec,
    rule: CredenceRule,
) -> Result<Rational, EngineError> {
    check_enumerable(protocol)?;
    if !protocol.accepts(seq) {
        return Err(EngineError::SequenceLength {
            expected: protocol.weeks() as usize,
            got: seq.len(),
        });
    }
    let weights = HeadCountWeights::new(protocol)?;
    let normalizer = weights.normalizer(rule)?;
    Ok(weights.prior(seq.heads() as u32, rule, &normalizer))
}

/// Full per-sequence decomposition and total H-credence under `rule`.
pub fn credence(protocol: &ProtocolSpec, rule: CredenceRule) -> Result<CredenceReport, EngineError> {
    check_enumerable(protocol)?;
    let weights = HeadCountWeights::new(protocol)?;
    let normalizer = weights.normalizer(rule)?;
    let protocol_rule = protocol.rule();

    // Priors and conditionals depend only on the head count.
    let by_heads: Vec<(Rational, Option<Rational>)> = (0..=protocol.weeks())
        .map(|k| {
            let a = weights.awakenings(k);
            let conditional = (a > 0).then(|| {
                Rational::new(k as u64 * protocol_rule.count(TossOutcome::H) as u64, a)
            });
            (weights.prior(k, rule, &normalizer), conditional)
        })
        .collect();

    let per_sequence: Vec<SequenceCredence> = OutcomeSequence::enumerate(protocol.weeks())
        .map(|sequence| {
            let (prior, conditional) = by_heads[sequence.heads()].clone();
            SequenceCredence {
                sequence,
                prior,
                conditional,
            }
        })
        .collect();
    let total = per_sequence
        .iter()
        .filter_map(|s| s.conditional.as_ref().map(|c| &s.prior * c))
        .sum();

    Ok(CredenceReport {
        rule,
        per_sequence,
        total,
    })
}

/// Credence in H when exactly `n_h` of `n_h + n_t` awakenings have the coin
/// placed H.
pub fn fixed_composition_credence(n_h: u64, n_t: u64) -> Result<Rational, EngineError> {
    let total = n_h as u128 + n_t as u128;
    if total == 0 {
        return Err(EngineError::NoAwakenings);
    }
    Ok(Rational::new(n_h, total))
}
