//! Command-line front end: argument model, dispatch, and report rendering.
//!
//! Exit codes: 0 on success, 1 when an engine rejects the run (for example a
//! protocol without awakenings), 2 for configuration errors (bad flags,
//! unreadable or invalid protocol files).

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use credence_core::branch::{self, BranchError, CenteredCredences, OpusReport, RouletteMeasures};
use credence_core::exact::{self, CredenceReport, CredenceRule, DECIMAL_PLACES};
use credence_core::montecarlo::{
    self, BetLedger, BreakEven, ClosenessReport, Seed, SimulationStats,
};
use credence_core::{
    parse_protocol, AwakeningRule, CoinModel, Complex, EngineError, ProtocolError, ProtocolMode,
    ProtocolSpec, Rational, StateVector,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

/// Environment variable overriding the default seed.
pub const SEED_ENV: &str = "CREDENCE_SEED";

#[derive(Debug, Parser)]
#[command(name = "credence", version, about = "Per-awakening credences: exact, simulated, and branching-worlds")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Exact credence in H under the lewis or elga rule.
    Exact {
        #[command(flatten)]
        protocol: ProtocolArgs,
        #[arg(long, default_value = "elga")]
        rule: CredenceRule,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Monte Carlo per-awakening H frequency.
    Simulate {
        #[command(flatten)]
        protocol: ProtocolArgs,
        #[command(flatten)]
        sampling: SamplingArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Settle a bet on H at every awakening, and report the break-even odds.
    Bet {
        #[command(flatten)]
        protocol: ProtocolArgs,
        #[command(flatten)]
        sampling: SamplingArgs,
        /// Units returned per unit staked when the coin is H.
        #[arg(long, default_value_t = 3.0)]
        odds: f64,
        #[arg(long, default_value_t = 1.0)]
        stake: f64,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Fixed-composition experiment: exact credence and a shuffled schedule.
    Fixed {
        #[arg(long = "nH")]
        n_h: Option<u64>,
        #[arg(long = "nT")]
        n_t: Option<u64>,
        /// Protocol file in fixed mode, instead of --nH/--nT.
        #[arg(long, conflicts_with_all = ["n_h", "n_t"])]
        protocol: Option<PathBuf>,
        #[arg(long, env = SEED_ENV, default_value_t = 1)]
        seed: u64,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Centered credences for a quantum coin, plus optional roulette measures.
    Branch {
        #[command(flatten)]
        protocol: ProtocolArgs,
        /// Heads amplitude as `re,im` (overrides the protocol's coin).
        #[arg(long = "ampH", requires = "amp_t", allow_hyphen_values = true)]
        amp_h: Option<String>,
        #[arg(long = "ampT", requires = "amp_h", allow_hyphen_values = true)]
        amp_t: Option<String>,
        /// Rounds of quantum Russian roulette with the coin's heads amplitude
        /// as the survival amplitude.
        #[arg(long)]
        rounds: Option<u32>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Check that (R+ - R-)/sqrt(2) recovers Q for orthonormal P and Q.
    Opus {
        /// Dimension of the random orthonormal pair; without it P = e0, Q = e1.
        #[arg(long)]
        dim: Option<usize>,
        #[arg(long, env = SEED_ENV, default_value_t = 1)]
        seed: u64,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Sequential many-week frequency against the fixed-composition credence.
    Compare {
        #[command(flatten)]
        protocol: ProtocolArgs,
        #[command(flatten)]
        sampling: SamplingArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Debug, Args)]
pub struct ProtocolArgs {
    /// JSON protocol file; excludes the inline protocol flags.
    #[arg(long, conflicts_with_all = ["weeks", "p_h", "awake_h", "awake_t"])]
    pub protocol: Option<PathBuf>,
    #[arg(long)]
    pub weeks: Option<u32>,
    /// Heads probability as a rational string, e.g. `1/3`.
    #[arg(long = "pH")]
    pub p_h: Option<String>,
    /// Awakenings per H week.
    #[arg(long = "awake-h")]
    pub awake_h: Option<u32>,
    /// Awakenings per T week.
    #[arg(long = "awake-t")]
    pub awake_t: Option<u32>,
}

#[derive(Debug, Args)]
pub struct SamplingArgs {
    #[arg(long, default_value_t = 100_000)]
    pub trials: u64,
    #[arg(long, env = SEED_ENV, default_value_t = 1)]
    pub seed: u64,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Debug)]
pub enum CliError {
    Config(String),
    Engine(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) => 2,
            CliError::Engine(_) => 1,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Config(m) | CliError::Engine(m) => m,
        }
    }
}

impl From<ProtocolError> for CliError {
    fn from(e: ProtocolError) -> Self {
        CliError::Config(e.to_string())
    }
}

impl From<EngineError> for CliError {
    fn from(e: EngineError) -> Self {
        CliError::Engine(e.to_string())
    }
}

impl From<BranchError> for CliError {
    fn from(e: BranchError) -> Self {
        CliError::Engine(e.to_string())
    }
}

impl ProtocolArgs {
    pub fn resolve(&self) -> Result<ProtocolSpec, CliError> {
        if let Some(path) = &self.protocol {
            return load_protocol(path);
        }
        let rule = AwakeningRule::new(self.awake_h.unwrap_or(1), self.awake_t.unwrap_or(2))?;
        let coin = match &self.p_h {
            Some(p) => {
                let p: Rational = p
                    .parse()
                    .map_err(|e| CliError::Config(format!("--pH: {e}")))?;
                CoinModel::classical(p)?
            }
            None => CoinModel::ClassicalFair,
        };
        Ok(ProtocolSpec::sequential(self.weeks.unwrap_or(1), rule, coin)?)
    }
}

fn load_protocol(path: &PathBuf) -> Result<ProtocolSpec, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Config(format!("cannot read protocol file {}: {e}", path.display())))?;
    Ok(parse_protocol(&text)?)
}

fn parse_complex(flag: &str, text: &str) -> Result<Complex, CliError> {
    let bad = || CliError::Config(format!("{flag}: expected `re,im`, got `{text}`"));
    let (re, im) = match text.split_once(',') {
        Some((re, im)) => (re.trim(), im.trim()),
        None => (text.trim(), "0"),
    };
    Ok(Complex::new(re.parse().map_err(|_| bad())?, im.parse().map_err(|_| bad())?))
}

/// Seeded orthonormal pair in `dim` dimensions: Gram-Schmidt on two uniformly
/// drawn complex vectors, with basis labels `e0`, `e1`, ...
pub fn random_orthonormal_pair(dim: usize, seed: u64) -> Result<(StateVector, StateVector), CliError> {
    use rand::Rng;
    if dim < 2 {
        return Err(CliError::Config("--dim must be at least 2".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let mut draw = || -> Vec<Complex> {
            (0..dim)
                .map(|_| Complex::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))
                .collect()
        };
        let (u, v) = (draw(), draw());
        let norm = |x: &[Complex]| x.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
        let nu = norm(&u);
        if nu < 1e-3 {
            continue;
        }
        let p: Vec<Complex> = u.iter().map(|a| a / nu).collect();
        let overlap: Complex = p.iter().zip(&v).map(|(a, b)| a.conj() * b).sum();
        let w: Vec<Complex> = v.iter().zip(&p).map(|(b, a)| b - overlap * a).collect();
        let nw = norm(&w);
        if nw < 1e-3 {
            continue;
        }
        let q: Vec<Complex> = w.iter().map(|a| a / nw).collect();
        let ket = |x: Vec<Complex>| {
            StateVector::from_entries(x.into_iter().enumerate().map(|(i, a)| (format!("e{i}"), a)))
        };
        return Ok((ket(p), ket(q)));
    }
}

/// Engine output ready for rendering.
pub enum Report {
    Exact(CredenceReport),
    Simulation { protocol_hash: String, seed: u64, stats: SimulationStats },
    Bet { protocol_hash: String, seed: u64, trials: u64, ledger: BetLedger, break_even: BreakEven },
    Fixed { n_h: u64, n_t: u64, seed: u64, credence: Rational, stats: SimulationStats },
    Branch { credences: CenteredCredences, roulette: Option<RouletteMeasures> },
    Opus(OpusReport),
    Compare { protocol_hash: String, seed: u64, report: ClosenessReport },
}

pub fn execute(command: &Command) -> Result<(Report, Format), CliError> {
    Ok(match command {
        Command::Exact { protocol, rule, output } => {
            let spec = protocol.resolve()?;
            (Report::Exact(exact::credence(&spec, *rule)?), output.format)
        }
        Command::Simulate { protocol, sampling, output } => {
            let spec = protocol.resolve()?;
            let stats = montecarlo::simulate(&spec, sampling.trials, Seed(sampling.seed))?;
            (
                Report::Simulation { protocol_hash: spec.hash_hex(), seed: sampling.seed, stats },
                output.format,
            )
        }
        Command::Bet { protocol, sampling, odds, stake, output } => {
            let spec = protocol.resolve()?;
            let seed = Seed(sampling.seed);
            let ledger = montecarlo::bet_evaluate(&spec, *odds, *stake, sampling.trials, seed)?;
            let break_even = montecarlo::break_even_search(&spec, sampling.trials, seed)?;
            (
                Report::Bet {
                    protocol_hash: spec.hash_hex(),
                    seed: sampling.seed,
                    trials: sampling.trials,
                    ledger,
                    break_even,
                },
                output.format,
            )
        }
        Command::Fixed { n_h, n_t, protocol, seed, output } => {
            let (n_h, n_t) = match protocol {
                Some(path) => match load_protocol(path)?.mode() {
                    ProtocolMode::FixedComposition { n_h, n_t } => (n_h, n_t),
                    ProtocolMode::Sequential => {
                        return Err(CliError::Config("protocol file is not in fixed mode".into()))
                    }
                },
                None => match (n_h, n_t) {
                    (Some(h), Some(t)) => (*h, *t),
                    _ => return Err(CliError::Config("fixed requires --nH and --nT".into())),
                },
            };
            let credence = exact::fixed_composition_credence(n_h, n_t)?;
            let stats = montecarlo::simulate_fixed_composition(n_h, n_t, Seed(*seed))?;
            (Report::Fixed { n_h, n_t, seed: *seed, credence, stats }, output.format)
        }
        Command::Branch { protocol, amp_h, amp_t, rounds, output } => {
            let mut spec = protocol.resolve()?;
            if let (Some(h), Some(t)) = (amp_h, amp_t) {
                let coin = CoinModel::quantum(parse_complex("--ampH", h)?, parse_complex("--ampT", t)?)?;
                spec = ProtocolSpec::new(spec.weeks(), spec.rule(), coin, spec.mode())?;
            }
            let credences = branch::centered_credences(&spec)?;
            let roulette = match rounds {
                Some(n) => Some(branch::roulette_measures(*n, branch::coin_amplitudes(spec.coin()).0)?),
                None => None,
            };
            (Report::Branch { credences, roulette }, output.format)
        }
        Command::Opus { dim, seed, output } => {
            let (p, q) = match dim {
                Some(d) => random_orthonormal_pair(*d, *seed)?,
                None => (StateVector::basis("e0"), StateVector::basis("e1")),
            };
            (Report::Opus(branch::opus_identity_check(&p, &q)?), output.format)
        }
        Command::Compare { protocol, sampling, output } => {
            let spec = protocol.resolve()?;
            let report = montecarlo::compare_sequential_vs_fixed(&spec, sampling.trials, Seed(sampling.seed))?;
            (
                Report::Compare { protocol_hash: spec.hash_hex(), seed: sampling.seed, report },
                output.format,
            )
        }
    })
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the exit code and the text for stdout or stderr.
pub fn run<I, T>(args: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => return (e.exit_code(), e.render().to_string()),
    };
    match execute(&cli.command) {
        Ok((report, format)) => (0, emit_report(&report, format)),
        Err(e) => (e.exit_code(), format!("error: {}\n", e.message())),
    }
}

fn rational_cell(r: &Rational) -> String {
    format!("{r} ({})", r.to_decimal(DECIMAL_PLACES))
}

fn float(x: f64) -> String {
    format!("{x:.12}")
}

fn opt_float(x: Option<f64>) -> String {
    x.map(float).unwrap_or_else(|| "NA".into())
}

fn render_json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

/// Renders a report. Field order is fixed; CSV output always starts with a
/// header row.
pub fn emit_report(report: &Report, format: Format) -> String {
    match format {
        Format::Json => render_json(&report_json(report)),
        Format::Csv => report_csv(report),
        Format::Table => report_table(report),
    }
}

fn report_json(report: &Report) -> Value {
    match report {
        Report::Exact(r) => serde_json::to_value(r).expect("report serializes"),
        Report::Simulation { protocol_hash, seed, stats } => json!({
            "protocol_hash": protocol_hash,
            "seed": seed,
            "stats": stats,
        }),
        Report::Bet { protocol_hash, seed, trials, ledger, break_even } => json!({
            "protocol_hash": protocol_hash,
            "seed": seed,
            "trials": trials,
            "ledger": ledger,
            "break_even": break_even,
        }),
        Report::Fixed { n_h, n_t, seed, credence, stats } => json!({
            "nH": n_h,
            "nT": n_t,
            "seed": seed,
            "credence": credence,
            "credence_decimal": credence.to_decimal(DECIMAL_PLACES),
            "simulated": stats,
        }),
        Report::Branch { credences, roulette } => {
            let mut v = serde_json::to_value(credences).expect("credences serialize");
            v["roulette"] = serde_json::to_value(roulette).expect("roulette serializes");
            v
        }
        Report::Opus(r) => serde_json::to_value(r).expect("opus report serializes"),
        Report::Compare { protocol_hash, seed, report } => json!({
            "protocol_hash": protocol_hash,
            "seed": seed,
            "report": report,
        }),
    }
}

fn report_csv(report: &Report) -> String {
    let mut out = String::new();
    match report {
        Report::Exact(r) => {
            out.push_str("rule,sequence,prior,prior_decimal,conditional,conditional_decimal\n");
            for s in &r.per_sequence {
                let (c, cd) = match &s.conditional {
                    Some(c) => (c.to_string(), c.to_decimal(DECIMAL_PLACES)),
                    None => (String::new(), String::new()),
                };
                let _ = writeln!(
                    out,
                    "{},{},{},{},{},{}",
                    r.rule,
                    s.sequence,
                    s.prior,
                    s.prior.to_decimal(DECIMAL_PLACES),
                    c,
                    cd
                );
            }
            // aggregate row: prior 1 and the total credence as its conditional
            let one = Rational::one();
            let _ = writeln!(
                out,
                "{},*,{},{},{},{}",
                r.rule,
                one,
                one.to_decimal(DECIMAL_PLACES),
                r.total,
                r.total.to_decimal(DECIMAL_PLACES)
            );
        }
        Report::Simulation { protocol_hash, seed, stats } => {
            out.push_str("protocol_hash,seed,trials,total_awakenings,h_awakenings,frequency,se\n");
            let _ = writeln!(
                out,
                "{protocol_hash},{seed},{},{},{},{},{}",
                stats.trials,
                stats.total_awakenings,
                stats.h_awakenings,
                float(stats.frequency),
                opt_float(stats.se)
            );
        }
        Report::Bet { protocol_hash, seed, trials, ledger, break_even } => {
            out.push_str("protocol_hash,seed,trials,odds,stake,awakenings_bet,net_payoff,mean_payoff_per_awakening,se,implied_credence,break_even_odds\n");
            let _ = writeln!(
                out,
                "{protocol_hash},{seed},{trials},{},{},{},{},{},{},{},{}",
                ledger.odds_payout_on_h,
                ledger.stake_per_awakening,
                ledger.awakenings_bet,
                float(ledger.net_payoff),
                float(ledger.mean_payoff_per_awakening),
                opt_float(ledger.se),
                float(break_even.implied_credence),
                float(break_even.break_even_odds)
            );
        }
        Report::Fixed { n_h, n_t, seed, credence, stats } => {
            out.push_str("nH,nT,seed,credence,credence_decimal,h_awakenings,total_awakenings,frequency\n");
            let _ = writeln!(
                out,
                "{n_h},{n_t},{seed},{credence},{},{},{},{}",
                credence.to_decimal(DECIMAL_PLACES),
                stats.h_awakenings,
                stats.total_awakenings,
                float(stats.frequency)
            );
        }
        Report::Branch { credences, roulette } => {
            out.push_str("proposition,coin_state,branch_measure,credence\n");
            for e in &credences.entries {
                let _ = writeln!(
                    out,
                    "{},{},{},{}",
                    e.proposition,
                    e.coin_state,
                    float(e.branch_measure),
                    float(e.credence)
                );
            }
            if let Some(r) = roulette {
                let _ = writeln!(out, "roulette-survive-{},,,{}", r.rounds, float(r.surviving));
                let _ = writeln!(out, "roulette-dead-{},,,{}", r.rounds, float(r.dead));
            }
        }
        Report::Opus(r) => {
            out.push_str("status,max_deviation\n");
            let _ = writeln!(out, "{},{:e}", pass_fail(r.passed), r.max_deviation);
        }
        Report::Compare { protocol_hash, seed, report: r } => {
            out.push_str("protocol_hash,seed,weeks,trials,sequential_frequency,target,fixed_nH,fixed_nT,gap,se,se_method,status\n");
            let _ = writeln!(
                out,
                "{protocol_hash},{seed},{},{},{},{},{},{},{},{},{},{}",
                r.weeks,
                r.trials,
                float(r.sequential_frequency),
                r.target,
                r.fixed.n_h,
                r.fixed.n_t,
                float(r.gap),
                float(r.se),
                se_method_name(r.se_method),
                pass_fail(r.pass)
            );
        }
    }
    out
}

fn pass_fail(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

fn se_method_name(m: montecarlo::SeMethod) -> &'static str {
    match m {
        montecarlo::SeMethod::AcrossTrials => "across-trials",
        montecarlo::SeMethod::WeekBootstrap => "week-bootstrap",
    }
}

fn report_table(report: &Report) -> String {
    let mut out = String::new();
    match report {
        Report::Exact(r) => {
            let _ = writeln!(out, "rule: {}", r.rule);
            let _ = writeln!(out, "{:<12} {:<28} {:<28}", "sequence", "prior", "p(H|sequence)");
            for s in &r.per_sequence {
                let c = s.conditional.as_ref().map(rational_cell).unwrap_or_else(|| "undefined".into());
                let _ = writeln!(out, "{:<12} {:<28} {:<28}", s.sequence.to_string(), rational_cell(&s.prior), c);
            }
            let _ = writeln!(out, "credence(H): {}", rational_cell(&r.total));
        }
        Report::Simulation { protocol_hash, seed, stats } => {
            let _ = writeln!(out, "protocol:          {protocol_hash}");
            let _ = writeln!(out, "seed:              {seed}");
            let _ = writeln!(out, "trials:            {}", stats.trials);
            let _ = writeln!(out, "awakenings:        {}", stats.total_awakenings);
            let _ = writeln!(out, "H awakenings:      {}", stats.h_awakenings);
            let _ = writeln!(out, "frequency(H):      {}", float(stats.frequency));
            let _ = writeln!(out, "standard error:    {}", opt_float(stats.se));
            let _ = writeln!(out, "per-trial mean:    {}", float(stats.per_trial.mean));
            let _ = writeln!(out, "per-trial stddev:  {}", opt_float(stats.per_trial.std_dev));
        }
        Report::Bet { protocol_hash, seed, trials, ledger, break_even } => {
            let _ = writeln!(out, "protocol:                 {protocol_hash}");
            let _ = writeln!(out, "seed:                     {seed}");
            let _ = writeln!(out, "trials:                   {trials}");
            let _ = writeln!(out, "odds (payout on H):       {}", ledger.odds_payout_on_h);
            let _ = writeln!(out, "stake per awakening:      {}", ledger.stake_per_awakening);
            let _ = writeln!(out, "awakenings bet:           {}", ledger.awakenings_bet);
            let _ = writeln!(out, "net payoff:               {}", float(ledger.net_payoff));
            let _ = writeln!(out, "mean payoff / awakening:  {}", float(ledger.mean_payoff_per_awakening));
            let _ = writeln!(out, "standard error:           {}", opt_float(ledger.se));
            let _ = writeln!(out, "break-even odds:          {}", float(break_even.break_even_odds));
            let _ = writeln!(out, "implied credence(H):      {}", float(break_even.implied_credence));
        }
        Report::Fixed { n_h, n_t, seed, credence, stats } => {
            let _ = writeln!(out, "nH: {n_h}  nT: {n_t}  seed: {seed}");
            let _ = writeln!(out, "credence(H): {}", rational_cell(credence));
            let _ = writeln!(
                out,
                "shuffled schedule: {}/{} H awakenings, frequency {}",
                stats.h_awakenings,
                stats.total_awakenings,
                float(stats.frequency)
            );
        }
        Report::Branch { credences, roulette } => {
            let _ = writeln!(out, "{:<16} {:<6} {:<16} {:<16}", "proposition", "coin", "measure", "credence");
            for e in &credences.entries {
                let _ = writeln!(
                    out,
                    "{:<16} {:<6} {:<16} {:<16}",
                    e.proposition.to_string(),
                    e.coin_state.to_string(),
                    float(e.branch_measure),
                    float(e.credence)
                );
            }
            let _ = writeln!(out, "credence(H): {}", float(credences.credence_in(credence_core::TossOutcome::H)));
            if let Some(r) = roulette {
                let _ = writeln!(
                    out,
                    "roulette after {} rounds: surviving {} dead {}",
                    r.rounds,
                    float(r.surviving),
                    float(r.dead)
                );
            }
        }
        Report::Opus(r) => {
            let _ = writeln!(out, "opus identity: {} (max deviation {:e})", pass_fail(r.passed), r.max_deviation);
        }
        Report::Compare { protocol_hash, seed, report: r } => {
            let _ = writeln!(out, "protocol:               {protocol_hash}");
            let _ = writeln!(out, "seed:                   {seed}");
            let _ = writeln!(out, "weeks x trials:         {} x {}", r.weeks, r.trials);
            let _ = writeln!(out, "sequential frequency:   {}", float(r.sequential_frequency));
            let _ = writeln!(out, "target credence:        {}", rational_cell(&r.target));
            let _ = writeln!(
                out,
                "fixed counterpart:      nH={} nT={} credence {}",
                r.fixed.n_h,
                r.fixed.n_t,
                rational_cell(&r.fixed.credence)
            );
            let _ = writeln!(out, "gap:                    {}", float(r.gap));
            let _ = writeln!(out, "standard error:         {} ({})", float(r.se), se_method_name(r.se_method));
            let _ = writeln!(out, "within 4 SE:            {}", pass_fail(r.pass));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_ok(args: &[&str]) -> String {
        let mut full = vec!["credence"];
        full.extend_from_slice(args);
        let (code, out) = run(full);
        assert_eq!(code, 0, "{out}");
        out
    }

    #[test]
    fn exact_prints_five_twelfths() {
        let out = run_ok(&["exact", "--weeks", "2", "--rule", "lewis"]);
        assert!(out.contains("credence(H): 5/12 (0.416666666667)"), "{out}");
    }

    #[test]
    fn exact_table_has_one_row_per_sequence() {
        let out = run_ok(&["exact", "--weeks", "2", "--rule", "elga"]);
        for s in ["HH ", "HT ", "TH ", "TT "] {
            assert_eq!(out.lines().filter(|l| l.starts_with(s)).count(), 1, "{out}");
        }
    }

    #[test]
    fn exact_csv_has_aggregate_row() {
        let out = run_ok(&["exact", "--weeks", "1", "--rule", "elga", "--format", "csv"]);
        assert_eq!(
            out,
            "rule,sequence,prior,prior_decimal,conditional,conditional_decimal\n\
             elga,H,1/3,0.333333333333,1/1,1.000000000000\n\
             elga,T,2/3,0.666666666667,0/1,0.000000000000\n\
             elga,*,1/1,1.000000000000,1/3,0.333333333333\n"
        );
    }

    #[test]
    fn simulation_csv_is_a_single_row() {
        let out = run_ok(&["simulate", "--trials", "1000", "--seed", "3", "--format", "csv"]);
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines.len(), 2);
        assert_eq!(lines[0], "protocol_hash,seed,trials,total_awakenings,h_awakenings,frequency,se");
        assert_eq!(lines[1].split(',').count(), 7);
    }

    #[test]
    fn fixed_prints_one_third() {
        let out = run_ok(&["fixed", "--nH", "2609", "--nT", "5218"]);
        assert!(out.contains("credence(H): 1/3 (0.333333333333)"), "{out}");
        assert!(out.contains("2609/7827"), "{out}");
    }

    #[test]
    fn opus_prints_pass_line() {
        let out = run_ok(&["opus"]);
        assert!(out.starts_with("opus identity: PASS (max deviation"), "{out}");
        let out = run_ok(&["opus", "--dim", "8", "--seed", "4", "--format", "csv"]);
        assert!(out.lines().nth(1).unwrap().starts_with("PASS,"), "{out}");
    }

    #[test]
    fn branch_reports_thirds_and_roulette() {
        let h = std::f64::consts::FRAC_1_SQRT_2.to_string();
        let out = run_ok(&["branch", "--ampH", &h, "--ampT", &format!("0,{h}"), "--rounds", "10", "--format", "json"]);
        let v: Value = serde_json::from_str(&out).unwrap();
        for k in ["H-Mon", "T-Mon", "T-Tue"] {
            assert!((v["credences"][k].as_f64().unwrap() - 1.0 / 3.0).abs() < 1e-12);
        }
        assert!((v["roulette"]["surviving"].as_f64().unwrap() - 2f64.powi(-10)).abs() < 1e-12);
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run(["credence", "exact", "--bogus"]).0, 2);
        assert_eq!(run(["credence", "exact", "--pH", "3/2"]).0, 2);
        assert_eq!(run(["credence", "exact", "--protocol", "/nonexistent/p.json"]).0, 2);
        assert_eq!(run(["credence", "fixed", "--nH", "1"]).0, 2);
        assert_eq!(run(["credence", "fixed", "--nH", "0", "--nT", "0"]).0, 1);
        assert_eq!(run(["credence", "exact", "--pH", "1", "--awake-h", "0", "--awake-t", "1"]).0, 1);
        assert_eq!(run(["credence", "exact", "--weeks", "25"]).0, 1);
        assert_eq!(run(["credence", "simulate", "--trials", "0"]).0, 1);
    }

    #[test]
    fn random_pairs_are_orthonormal() {
        for dim in 2..=16 {
            let (p, q) = random_orthonormal_pair(dim, dim as u64).unwrap();
            assert!(p.is_normalized() && q.is_normalized());
            assert!(credence_core::inner_product(&p, &q).norm() < 1e-12);
        }
        assert!(random_orthonormal_pair(1, 0).is_err());
    }
}
