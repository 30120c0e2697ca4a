//! Awakening protocols: coin models, awakening rules, and the awakenings a
//! sequence of tosses produces.
//!
//! A protocol file is a JSON object:
//!
//! ```json
//! {
//!   "weeks": 2,
//!   "awakenings": {"H": 1, "T": 2},
//!   "coin": {"type": "classical", "pH": "1/2"},
//!   "mode": {"type": "sequential"}
//! }
//! ```
//!
//! `coin` may instead be `{"type": "quantum", "ampH": [re, im], "ampT": [re, im]}`
//! and `mode` may be `{"type": "fixed", "nH": 2609, "nT": 5218}`.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::rational::Rational;

/// Normalization tolerance for quantum coin amplitudes.
pub const AMPLITUDE_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Error)]
pub enum ProtocolError {
    #[error("malformed protocol at `{path}`: {message}")]
    Syntax { path: String, message: String },
    #[error("invalid protocol field `{path}`: {message}")]
    Invalid { path: String, message: String },
}

impl ProtocolError {
    fn invalid(path: &str, message: impl Into<String>) -> Self {
        ProtocolError::Invalid {
            path: path.to_string(),
            message: message.into(),
        }
    }

    /// Dotted path of the offending field.
    pub fn path(&self) -> &str {
        match self {
            ProtocolError::Syntax { path, .. } | ProtocolError::Invalid { path, .. } => path,
        }
    }
}

/// Result of a single coin toss. `H < T` fixes enumeration order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum TossOutcome {
    H,
    T,
}

impl TossOutcome {
    pub const ALL: [TossOutcome; 2] = [TossOutcome::H, TossOutcome::T];

    pub fn as_char(self) -> char {
        match self {
            TossOutcome::H => 'H',
            TossOutcome::T => 'T',
        }
    }
}

impl fmt::Display for TossOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum CoinModel {
    ClassicalFair,
    /// Probability of heads; always in `[0, 1]` and never exactly `1/2`
    /// when built through [`CoinModel::classical`].
    ClassicalBiased(Rational),
    Quantum { amp_h: Complex64, amp_t: Complex64 },
}

impl CoinModel {
    /// Classical coin with heads probability `p_h`. `1/2` maps to
    /// [`CoinModel::ClassicalFair`].
    pub fn classical(p_h: Rational) -> Result<Self, ProtocolError> {
        if !p_h.is_probability() {
            return Err(ProtocolError::invalid(
                "coin.pH",
                format!("probability out of range [0, 1]: {p_h}"),
            ));
        }
        if p_h == Rational::half() {
            Ok(CoinModel::ClassicalFair)
        } else {
            Ok(CoinModel::ClassicalBiased(p_h))
        }
    }

    pub fn quantum(amp_h: Complex64, amp_t: Complex64) -> Result<Self, ProtocolError> {
        for (name, a) in [("coin.ampH", amp_h), ("coin.ampT", amp_t)] {
            if !a.re.is_finite() || !a.im.is_finite() {
                return Err(ProtocolError::invalid(name, "amplitude must be finite"));
            }
        }
        let norm = amp_h.norm_sqr() + amp_t.norm_sqr();
        if (norm - 1.0).abs() > AMPLITUDE_TOLERANCE {
            return Err(ProtocolError::invalid(
                "coin",
                format!("quantum amplitudes not normalized: |ampH|^2 + |ampT|^2 = {norm}"),
            ));
        }
        Ok(CoinModel::Quantum { amp_h, amp_t })
    }

    /// Heads probability for classical coins, `None` for quantum ones.
    pub fn classical_p_h(&self) -> Option<Rational> {
        match self {
            CoinModel::ClassicalFair => Some(Rational::half()),
            CoinModel::ClassicalBiased(p) => Some(p.clone()),
            CoinModel::Quantum { .. } => None,
        }
    }

    /// Branch weights `(|ampH|^2, |ampT|^2)` or `(pH, 1 - pH)`.
    pub fn weights(&self) -> (f64, f64) {
        match self {
            CoinModel::Quantum { amp_h, amp_t } => (amp_h.norm_sqr(), amp_t.norm_sqr()),
            _ => {
                let p = self.classical_p_h().map(|p| p.to_f64()).unwrap_or(0.5);
                (p, 1.0 - p)
            }
        }
    }
}

/// Number of awakenings each toss outcome produces within its week.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AwakeningRule {
    heads: u32,
    tails: u32,
}

impl AwakeningRule {
    pub fn new(heads: u32, tails: u32) -> Result<Self, ProtocolError> {
        if heads == 0 && tails == 0 {
            return Err(ProtocolError::invalid(
                "awakenings",
                "at least one outcome must produce an awakening",
            ));
        }
        Ok(AwakeningRule { heads, tails })
    }

    /// The `{H: 1, T: 2}` rule: Monday only on heads, Monday and Tuesday on tails.
    pub fn monday_tuesday() -> Self {
        AwakeningRule { heads: 1, tails: 2 }
    }

    pub fn count(&self, outcome: TossOutcome) -> u32 {
        match outcome {
            TossOutcome::H => self.heads,
            TossOutcome::T => self.tails,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ProtocolMode {
    /// One toss per week; `weeks` tosses in total.
    Sequential,
    /// A pre-committed multiset of awakenings with the coin placed H or T.
    FixedComposition { n_h: u64, n_t: u64 },
}

#[derive(Debug, Clone, PartialEq)]
pub struct ProtocolSpec {
    weeks: u32,
    rule: AwakeningRule,
    coin: CoinModel,
    mode: ProtocolMode,
}

impl ProtocolSpec {
    pub fn new(
        weeks: u32,
        rule: AwakeningRule,
        coin: CoinModel,
        mode: ProtocolMode,
    ) -> Result<Self, ProtocolError> {
        if weeks == 0 {
            return Err(ProtocolError::invalid("weeks", "must be positive"));
        }
        if let ProtocolMode::FixedComposition { n_h, n_t } = mode {
            if n_h.checked_add(n_t).is_none_or(|n| n == 0) {
                return Err(ProtocolError::invalid(
                    "mode",
                    "nH + nT must be at least 1 and fit in 64 bits",
                ));
            }
        }
        Ok(ProtocolSpec {
            weeks,
            rule,
            coin,
            mode,
        })
    }

    pub fn sequential(weeks: u32, rule: AwakeningRule, coin: CoinModel) -> Result<Self, ProtocolError> {
        ProtocolSpec::new(weeks, rule, coin, ProtocolMode::Sequential)
    }

    /// Fair classical coin, `{H: 1, T: 2}`, sequential over `weeks`.
    pub fn fair(weeks: u32) -> Result<Self, ProtocolError> {
        ProtocolSpec::sequential(weeks, AwakeningRule::monday_tuesday(), CoinModel::ClassicalFair)
    }

    pub fn weeks(&self) -> u32 {
        self.weeks
    }

    pub fn rule(&self) -> AwakeningRule {
        self.rule
    }

    pub fn coin(&self) -> &CoinModel {
        &self.coin
    }

    pub fn mode(&self) -> ProtocolMode {
        self.mode
    }

    pub fn is_sequential(&self) -> bool {
        self.mode == ProtocolMode::Sequential
    }

    pub fn accepts(&self, seq: &OutcomeSequence) -> bool {
        seq.len() == self.weeks as usize
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&RawProtocol::from(self)).expect("protocol serialization is infallible")
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(&RawProtocol::from(self))
            .expect("protocol serialization is infallible")
    }

    /// First 16 hex digits of the SHA-256 of the canonical JSON encoding.
    pub fn hash_hex(&self) -> String {
        let digest = Sha256::digest(self.to_json().as_bytes());
        digest[..8].iter().map(|b| format!("{b:02x}")).collect()
    }
}

/// Ordered coin tosses, one per week.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OutcomeSequence(Vec<TossOutcome>);

impl OutcomeSequence {
    pub fn new(tosses: Vec<TossOutcome>) -> Self {
        OutcomeSequence(tosses)
    }

    pub fn tosses(&self) -> &[TossOutcome] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn heads(&self) -> usize {
        self.0.iter().filter(|&&t| t == TossOutcome::H).count()
    }

    /// All `2^weeks` sequences in lexicographic order with `H < T`.
    pub fn enumerate(weeks: u32) -> impl Iterator<Item = OutcomeSequence> {
        let n = weeks as usize;
        (0u64..1u64 << weeks).map(move |bits| {
            OutcomeSequence(
                (0..n)
                    .map(|i| {
                        if bits >> (n - 1 - i) & 1 == 0 {
                            TossOutcome::H
                        } else {
                            TossOutcome::T
                        }
                    })
                    .collect(),
            )
        })
    }
}

impl fmt::Display for OutcomeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|t| write!(f, "{t}"))
    }
}

impl FromStr for OutcomeSequence {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.chars()
            .map(|c| match c {
                'H' => Ok(TossOutcome::H),
                'T' => Ok(TossOutcome::T),
                other => Err(format!("invalid toss `{other}`")),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(OutcomeSequence)
    }
}

impl From<Vec<TossOutcome>> for OutcomeSequence {
    fn from(v: Vec<TossOutcome>) -> Self {
        OutcomeSequence(v)
    }
}

/// One wake-interrogate-erase episode.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Awakening {
    pub week: u32,
    pub day: u32,
    pub coin_state: TossOutcome,
}

/// Awakenings of `seq`, week-major then day-minor.
pub fn awakenings_for(seq: &OutcomeSequence, rule: AwakeningRule) -> Vec<Awakening> {
    seq.tosses()
        .iter()
        .enumerate()
        .flat_map(|(week, &coin_state)| {
            (0..rule.count(coin_state)).map(move |day| Awakening {
                week: week as u32,
                day,
                coin_state,
            })
        })
        .collect()
}

pub fn total_awakenings(seq: &OutcomeSequence, rule: AwakeningRule) -> u64 {
    seq.tosses().iter().map(|&t| rule.count(t) as u64).sum()
}

pub fn heads_awakenings(seq: &OutcomeSequence, rule: AwakeningRule) -> u64 {
    seq.heads() as u64 * rule.count(TossOutcome::H) as u64
}

pub fn parse_protocol(text: &str) -> Result<ProtocolSpec, ProtocolError> {
    let de = &mut serde_json::Deserializer::from_str(text);
    let raw: RawProtocol = serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        ProtocolError::Syntax {
            path,
            message: e.into_inner().to_string(),
        }
    })?;
    raw.validate()
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawProtocol {
    weeks: u32,
    awakenings: RawCounts,
    coin: RawCoin,
    mode: RawMode,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCounts {
    #[serde(rename = "H")]
    h: u32,
    #[serde(rename = "T")]
    t: u32,
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
enum RawCoin {
    Classical {
        #[serde(rename = "pH")]
        p_h: String,
    },
    Quantum {
        #[serde(rename = "ampH")]
        amp_h: [f64; 2],
        #[serde(rename = "ampT")]
        amp_t: [f64; 2],
    },
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
enum RawMode {
    Sequential,
    Fixed {
        #[serde(rename = "nH")]
        n_h: u64,
        #[serde(rename = "nT")]
        n_t: u64,
    },
}

impl RawProtocol {
    fn validate(self) -> Result<ProtocolSpec, ProtocolError> {
        let rule = AwakeningRule::new(self.awakenings.h, self.awakenings.t)?;
        let coin = match self.coin {
            RawCoin::Classical { p_h } => {
                let p: Rational = p_h
                    .parse()
                    .map_err(|e| ProtocolError::invalid("coin.pH", format!("{e}")))?;
                CoinModel::classical(p)?
            }
            RawCoin::Quantum { amp_h, amp_t } => CoinModel::quantum(
                Complex64::new(amp_h[0], amp_h[1]),
                Complex64::new(amp_t[0], amp_t[1]),
            )?,
        };
        let mode = match self.mode {
            RawMode::Sequential => ProtocolMode::Sequential,
            RawMode::Fixed { n_h, n_t } => ProtocolMode::FixedComposition { n_h, n_t },
        };
        ProtocolSpec::new(self.weeks, rule, coin, mode)
    }
}

impl From<&ProtocolSpec> for RawProtocol {
    fn from(spec: &ProtocolSpec) -> Self {
        let coin = match &spec.coin {
            CoinModel::ClassicalFair => RawCoin::Classical {
                p_h: Rational::half().to_string(),
            },
            CoinModel::ClassicalBiased(p) => RawCoin::Classical { p_h: p.to_string() },
            CoinModel::Quantum { amp_h, amp_t } => RawCoin::Quantum {
                amp_h: [amp_h.re, amp_h.im],
                amp_t: [amp_t.re, amp_t.im],
            },
        };
        let mode = match spec.mode {
            ProtocolMode::Sequential => RawMode::Sequential,
            ProtocolMode::FixedComposition { n_h, n_t } => RawMode::Fixed { n_h, n_t },
        };
        RawProtocol {
            weeks: spec.weeks,
            awakenings: RawCounts {
                h: spec.rule.heads,
                t: spec.rule.tails,
            },
            coin,
            mode,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use TossOutcome::{H, T};

    fn aw(week: u32, day: u32, coin_state: TossOutcome) -> Awakening {
        Awakening { week, day, coin_state }
    }

    #[test]
    fn tails_wakes_monday_and_tuesday() {
        let rule = AwakeningRule::monday_tuesday();
        assert_eq!(awakenings_for(&vec![T].into(), rule), vec![aw(0, 0, T), aw(0, 1, T)]);
        assert_eq!(awakenings_for(&vec![H].into(), rule), vec![aw(0, 0, H)]);
    }

    #[test]
    fn zero_count_rule_yields_no_awakenings() {
        let rule = AwakeningRule::new(0, 2).unwrap();
        assert!(awakenings_for(&vec![H, H].into(), rule).is_empty());
        assert!(AwakeningRule::new(0, 0).is_err());
    }

    #[test]
    fn awakening_totals() {
        let rule = AwakeningRule::monday_tuesday();
        assert_eq!(total_awakenings(&vec![H, T].into(), rule), 3);
        assert_eq!(total_awakenings(&vec![T, T].into(), rule), 4);
        assert_eq!(total_awakenings(&vec![H].into(), rule), 1);
        assert_eq!(heads_awakenings(&vec![H, T].into(), rule), 1);
    }

    #[test]
    fn awakenings_are_chronological() {
        let rule = AwakeningRule::new(2, 3).unwrap();
        let list = awakenings_for(&"THT".parse().unwrap(), rule);
        let mut sorted = list.clone();
        sorted.sort_by_key(|a| (a.week, a.day));
        assert_eq!(list, sorted);
        assert!(list.iter().all(|a| a.day < rule.count(a.coin_state)));
    }

    #[test]
    fn enumeration_is_lexicographic() {
        let seqs: Vec<String> = OutcomeSequence::enumerate(2).map(|s| s.to_string()).collect();
        assert_eq!(seqs, ["HH", "HT", "TH", "TT"]);
    }

    #[test]
    fn parses_one_week_fair_protocol() {
        let text = r#"{"weeks":1,"awakenings":{"H":1,"T":2},"coin":{"type":"classical","pH":"1/2"},"mode":{"type":"sequential"}}"#;
        let spec = parse_protocol(text).unwrap();
        assert_eq!(spec, ProtocolSpec::fair(1).unwrap());
        assert_eq!(spec.to_json(), text);
    }

    #[test]
    fn parses_fixed_composition() {
        let text = r#"{"weeks":1,"awakenings":{"H":1,"T":1},"coin":{"type":"classical","pH":"1/2"},"mode":{"type":"fixed","nH":2609,"nT":5218}}"#;
        let spec = parse_protocol(text).unwrap();
        assert_eq!(spec.mode(), ProtocolMode::FixedComposition { n_h: 2609, n_t: 5218 });
    }

    #[test]
    fn rejects_out_of_range_probability() {
        let text = r#"{"weeks":1,"awakenings":{"H":1,"T":2},"coin":{"type":"classical","pH":"3/2"},"mode":{"type":"sequential"}}"#;
        let err = parse_protocol(text).unwrap_err();
        assert_eq!(err.path(), "coin.pH");
        assert!(err.to_string().contains("out of range"));
    }

    #[test]
    fn rejects_unnormalized_quantum_coin() {
        let text = r#"{"weeks":1,"awakenings":{"H":1,"T":2},"coin":{"type":"quantum","ampH":[0.6,0],"ampT":[0.9,0]},"mode":{"type":"sequential"}}"#;
        let err = parse_protocol(text).unwrap_err();
        assert!(matches!(err, ProtocolError::Invalid { .. }));
        assert_eq!(err.path(), "coin");
    }

    #[test]
    fn syntax_errors_carry_field_path() {
        let text = r#"{"weeks":-1,"awakenings":{"H":1,"T":2},"coin":{"type":"classical","pH":"1/2"},"mode":{"type":"sequential"}}"#;
        let err = parse_protocol(text).unwrap_err();
        assert_eq!(err.path(), "weeks");
        let err = parse_protocol(r#"{"weeks":1,"awakenings":{"H":"x","T":2}}"#).unwrap_err();
        assert_eq!(err.path(), "awakenings.H");
        assert!(parse_protocol("{not json").is_err());
    }

    #[test]
    fn zero_weeks_rejected() {
        let err = ProtocolSpec::fair(0).unwrap_err();
        assert_eq!(err.path(), "weeks");
    }

    #[test]
    fn hash_is_stable_and_distinguishes() {
        let a = ProtocolSpec::fair(1).unwrap();
        assert_eq!(a.hash_hex(), ProtocolSpec::fair(1).unwrap().hash_hex());
        assert_ne!(a.hash_hex(), ProtocolSpec::fair(2).unwrap().hash_hex());
        assert_eq!(a.hash_hex().len(), 16);
    }
}
