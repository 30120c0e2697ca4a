//! Python bindings for `credence-core`.
//!
//! Structured results come back as plain dicts built from the same JSON the
//! CLI emits; rationals are `fractions.Fraction` at the top level and
//! `"num/den"` strings inside reports.
//!
//!     import credence
//!     p = credence.Protocol(weeks=2)
//!     credence.credence(p, "lewis")["total"]   # Fraction(5, 12)

use std::collections::HashMap;

use credence_core::branch::{self, StateVector};
use credence_core::exact::{self, CredenceRule};
use credence_core::montecarlo::{self, Seed};
use credence_core::{
    parse_protocol, AwakeningRule, CoinModel, ProtocolMode, ProtocolSpec, Rational,
};
use num_complex::Complex64;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

fn value_err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn to_py<'py>(py: Python<'py>, value: &impl serde::Serialize) -> PyResult<Bound<'py, PyAny>> {
    let text = serde_json::to_string(value).map_err(value_err)?;
    py.import("json")?.call_method1("loads", (text,))
}

fn fraction<'py>(py: Python<'py>, r: &Rational) -> PyResult<Bound<'py, PyAny>> {
    py.import("fractions")?
        .getattr("Fraction")?
        .call1((r.to_string(),))
}

/// An awakening protocol.
#[pyclass(frozen, module = "credence")]
struct Protocol {
    inner: ProtocolSpec,
}

#[pymethods]
impl Protocol {
    /// Sequential protocol with a classical coin.
    ///
    /// Args:
    ///     weeks: number of weekly tosses.
    ///     p_h: heads probability as a rational string, e.g. "1/3".
    ///     awake_h, awake_t: awakenings per H and T week.
    #[new]
    #[pyo3(signature = (weeks=1, p_h="1/2", awake_h=1, awake_t=2))]
    fn new(weeks: u32, p_h: &str, awake_h: u32, awake_t: u32) -> PyResult<Self> {
        let p: Rational = p_h.parse().map_err(value_err)?;
        let coin = CoinModel::classical(p).map_err(value_err)?;
        let rule = AwakeningRule::new(awake_h, awake_t).map_err(value_err)?;
        let inner = ProtocolSpec::sequential(weeks, rule, coin).map_err(value_err)?;
        Ok(Protocol { inner })
    }

    /// Sequential protocol with a quantum coin given by complex amplitudes.
    #[staticmethod]
    #[pyo3(signature = (amp_h, amp_t, weeks=1, awake_h=1, awake_t=2))]
    fn quantum(amp_h: Complex64, amp_t: Complex64, weeks: u32, awake_h: u32, awake_t: u32) -> PyResult<Self> {
        let coin = CoinModel::quantum(amp_h, amp_t).map_err(value_err)?;
        let rule = AwakeningRule::new(awake_h, awake_t).map_err(value_err)?;
        let inner = ProtocolSpec::sequential(weeks, rule, coin).map_err(value_err)?;
        Ok(Protocol { inner })
    }

    /// Fixed-composition protocol with `n_h` H and `n_t` T awakenings.
    #[staticmethod]
    fn fixed(n_h: u64, n_t: u64) -> PyResult<Self> {
        let inner = ProtocolSpec::new(
            1,
            AwakeningRule::new(1, 1).map_err(value_err)?,
            CoinModel::ClassicalFair,
            ProtocolMode::FixedComposition { n_h, n_t },
        )
        .map_err(value_err)?;
        Ok(Protocol { inner })
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        Ok(Protocol {
            inner: parse_protocol(text).map_err(value_err)?,
        })
    }

    fn to_json(&self) -> String {
        self.inner.to_json()
    }

    #[getter]
    fn weeks(&self) -> u32 {
        self.inner.weeks()
    }

    fn hash(&self) -> String {
        self.inner.hash_hex()
    }

    fn __eq__(&self, other: &Protocol) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        format!("Protocol({})", self.inner.to_json())
    }
}

/// Exact credence report under rule "lewis" or "elga". `total` is a Fraction.
#[pyfunction]
#[pyo3(signature = (protocol, rule="elga"))]
fn credence<'py>(py: Python<'py>, protocol: &Protocol, rule: &str) -> PyResult<Bound<'py, PyAny>> {
    let rule: CredenceRule = rule.parse().map_err(value_err)?;
    let report = exact::credence(&protocol.inner, rule).map_err(value_err)?;
    let out = to_py(py, &report)?;
    out.set_item("total", fraction(py, &report.total)?)?;
    Ok(out)
}

#[pyfunction]
fn fixed_composition_credence<'py>(py: Python<'py>, n_h: u64, n_t: u64) -> PyResult<Bound<'py, PyAny>> {
    fraction(py, &exact::fixed_composition_credence(n_h, n_t).map_err(value_err)?)
}

#[pyfunction]
#[pyo3(signature = (protocol, trials=100_000, seed=1))]
fn simulate<'py>(py: Python<'py>, protocol: &Protocol, trials: u64, seed: u64) -> PyResult<Bound<'py, PyAny>> {
    let stats = py
        .detach(|| montecarlo::simulate(&protocol.inner, trials, Seed(seed)))
        .map_err(value_err)?;
    to_py(py, &stats)
}

#[pyfunction]
#[pyo3(signature = (n_h, n_t, seed=1))]
fn simulate_fixed_composition<'py>(py: Python<'py>, n_h: u64, n_t: u64, seed: u64) -> PyResult<Bound<'py, PyAny>> {
    to_py(py, &montecarlo::simulate_fixed_composition(n_h, n_t, Seed(seed)).map_err(value_err)?)
}

#[pyfunction]
#[pyo3(signature = (protocol, odds, stake=1.0, trials=100_000, seed=1))]
fn bet_evaluate<'py>(
    py: Python<'py>,
    protocol: &Protocol,
    odds: f64,
    stake: f64,
    trials: u64,
    seed: u64,
) -> PyResult<Bound<'py, PyAny>> {
    let ledger = py
        .detach(|| montecarlo::bet_evaluate(&protocol.inner, odds, stake, trials, Seed(seed)))
        .map_err(value_err)?;
    to_py(py, &ledger)
}

#[pyfunction]
#[pyo3(signature = (protocol, trials=100_000, seed=1))]
fn break_even_search<'py>(py: Python<'py>, protocol: &Protocol, trials: u64, seed: u64) -> PyResult<Bound<'py, PyAny>> {
    let be = py
        .detach(|| montecarlo::break_even_search(&protocol.inner, trials, Seed(seed)))
        .map_err(value_err)?;
    to_py(py, &be)
}

#[pyfunction]
#[pyo3(signature = (protocol, trials=1, seed=1))]
fn compare_sequential_vs_fixed<'py>(py: Python<'py>, protocol: &Protocol, trials: u64, seed: u64) -> PyResult<Bound<'py, PyAny>> {
    let report = py
        .detach(|| montecarlo::compare_sequential_vs_fixed(&protocol.inner, trials, Seed(seed)))
        .map_err(value_err)?;
    to_py(py, &report)
}

/// Map from centered proposition label (e.g. "T-Tue") to credence.
#[pyfunction]
fn centered_credences(protocol: &Protocol) -> PyResult<HashMap<String, f64>> {
    let c = branch::centered_credences(&protocol.inner).map_err(value_err)?;
    Ok(c.entries
        .iter()
        .map(|e| (e.proposition.to_string(), e.credence))
        .collect())
}

/// `(surviving, dead)` measures after `rounds` of quantum Russian roulette.
#[pyfunction]
fn roulette_measures(rounds: u32, survival: Complex64) -> PyResult<(f64, f64)> {
    let m = branch::roulette_measures(rounds, survival).map_err(value_err)?;
    Ok((m.surviving, m.dead))
}

/// Takes two kets as `{label: complex}` dicts.
#[pyfunction]
fn opus_identity_check<'py>(
    py: Python<'py>,
    p: HashMap<String, Complex64>,
    q: HashMap<String, Complex64>,
) -> PyResult<Bound<'py, PyAny>> {
    let report = branch::opus_identity_check(&StateVector::from_entries(p), &StateVector::from_entries(q))
        .map_err(value_err)?;
    to_py(py, &report)
}

#[pymodule]
#[pyo3(name = "credence")]
fn credence_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Protocol>()?;
    m.add_function(wrap_pyfunction!(credence, m)?)?;
    m.add_function(wrap_pyfunction!(fixed_composition_credence, m)?)?;
    m.add_function(wrap_pyfunction!(simulate, m)?)?;
    m.add_function(wrap_pyfunction!(simulate_fixed_composition, m)?)?;
    m.add_function(wrap_pyfunction!(bet_evaluate, m)?)?;
    m.add_function(wrap_pyfunction!(break_even_search, m)?)?;
    m.add_function(wrap_pyfunction!(compare_sequential_vs_fixed, m)?)?;
    m.add_function(wrap_pyfunction!(centered_credences, m)?)?;
    m.add_function(wrap_pyfunction!(roulette_measures, m)?)?;
    m.add_function(wrap_pyfunction!(opus_identity_check, m)?)?;
    Ok(())
}
