//! Branching-worlds model of a quantum coin.
//!
//! A [`WorldTree`] is an arena of [`WorldNode`]s. Each node carries its
//! amplitude relative to its parent; the measure of existence of a world is
//! the product of `|amplitude|^2` along its path from the root. Credences in
//! centered propositions ("I am in world X at week w, day d") are proportional
//! to the measure of the world that contains the awakening.
//!
//! [`StateVector`] is a sparse ket over string basis labels, used for the
//! superposition identity checked by [`opus_identity_check`].

use std::collections::BTreeMap;
use std::fmt;

use num_complex::Complex64;
use serde::ser::{SerializeMap, SerializeStruct, SerializeTuple};
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::protocol::{awakenings_for, CoinModel, OutcomeSequence, ProtocolSpec, TossOutcome};

pub type Complex = Complex64;

/// Normalization tolerance for a single split or vector.
pub const NORM_TOLERANCE: f64 = 1e-12;

/// Tolerance for sums over deep trees.
pub const AGGREGATE_TOLERANCE: f64 = 1e-9;

/// Largest number of weeks expanded into an explicit world tree.
pub const MAX_BRANCH_WEEKS: u32 = 16;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum BranchError {
    #[error("branch amplitudes not normalized: sum of |a|^2 = {0}")]
    NotNormalized(f64),
    #[error("duplicate branch label `{0}`")]
    DuplicateLabel(String),
    #[error("node {0} already has children")]
    NotALeaf(usize),
    #[error("node {0} is not part of this tree")]
    UnknownNode(usize),
    #[error("no branches given")]
    NoBranches,
    #[error("amplitude must be finite")]
    NonFinite,
    #[error("|survival amplitude| = {0} exceeds 1")]
    AmplitudeTooLarge(f64),
    #[error("protocol must be sequential with at most {MAX_BRANCH_WEEKS} weeks")]
    UnsupportedProtocol,
    #[error("no awakening has positive measure")]
    NoAwakenings,
    #[error("inputs are not orthonormal: <P|P> = {pp}, <Q|Q> = {qq}, |<P|Q>| = {pq}")]
    NotOrthonormal { pp: f64, qq: f64, pq: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NodeId(usize);

impl NodeId {
    pub fn index(self) -> usize {
        self.0
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct WorldNode {
    pub label: String,
    /// Amplitude relative to the parent; the root's is 1.
    pub amplitude: Complex,
    parent: Option<NodeId>,
    children: Vec<NodeId>,
}

impl WorldNode {
    pub fn parent(&self) -> Option<NodeId> {
        self.parent
    }

    pub fn children(&self) -> &[NodeId] {
        &self.children
    }

    pub fn is_leaf(&self) -> bool {
        self.children.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct WorldTree {
    nodes: Vec<WorldNode>,
}

impl Default for WorldTree {
    fn default() -> Self {
        WorldTree::new("root")
    }
}

impl WorldTree {
    pub fn new(root_label: impl Into<String>) -> Self {
        WorldTree {
            nodes: vec![WorldNode {
                label: root_label.into(),
                amplitude: Complex::new(1.0, 0.0),
                parent: None,
                children: Vec::new(),
            }],
        }
    }

    pub fn root(&self) -> NodeId {
        NodeId(0)
    }

    pub fn node(&self, id: NodeId) -> Result<&WorldNode, BranchError> {
        self.nodes.get(id.0).ok_or(BranchError::UnknownNode(id.0))
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Splits leaf `id` into the given branches.
    pub fn split<S: Into<String>>(
        &mut self,
        id: NodeId,
        branches: impl IntoIterator<Item = (S, Complex)>,
    ) -> Result<Vec<NodeId>, BranchError> {
        let branches: Vec<(String, Complex)> =
            branches.into_iter().map(|(l, a)| (l.into(), a)).collect();
        if !self.node(id)?.is_leaf() {
            return Err(BranchError::NotALeaf(id.0));
        }
        if branches.is_empty() {
            return Err(BranchError::NoBranches);
        }
        if branches.iter().any(|(_, a)| !a.re.is_finite() || !a.im.is_finite()) {
            return Err(BranchError::NonFinite);
        }
        let norm: f64 = branches.iter().map(|(_, a)| a.norm_sqr()).sum();
        if (norm - 1.0).abs() > NORM_TOLERANCE {
            return Err(BranchError::NotNormalized(norm));
        }
        for (i, (label, _)) in branches.iter().enumerate() {
            if branches[..i].iter().any(|(l, _)| l == label) {
                return Err(BranchError::DuplicateLabel(label.clone()));
            }
        }
        let ids: Vec<NodeId> = branches
            .into_iter()
            .map(|(label, amplitude)| {
                self.nodes.push(WorldNode {
                    label,
                    amplitude,
                    parent: Some(id),
                    children: Vec::new(),
                });
                NodeId(self.nodes.len() - 1)
            })
            .collect();
        self.nodes[id.0].children = ids.clone();
        Ok(ids)
    }

    /// Product of `|amplitude|^2` from the root down to `id`.
    pub fn measure_of_existence(&self, id: NodeId) -> Result<f64, BranchError> {
        let mut measure = 1.0;
        let mut cur = Some(id);
        while let Some(n) = cur {
            let node = self.node(n)?;
            measure *= node.amplitude.norm_sqr();
            cur = node.parent;
        }
        Ok(measure)
    }

    pub fn leaves(&self) -> impl Iterator<Item = NodeId> + '_ {
        (0..self.nodes.len())
            .map(NodeId)
            .filter(|&id| self.nodes[id.0].is_leaf())
    }

    /// Labels along the path from the first split to `id`.
    pub fn path_labels(&self, id: NodeId) -> Result<Vec<&str>, BranchError> {
        let mut labels = Vec::new();
        let mut cur = id;
        while let Some(parent) = self.node(cur)?.parent {
            labels.push(self.nodes[cur.0].label.as_str());
            cur = parent;
        }
        labels.reverse();
        Ok(labels)
    }

    pub fn leaf_measure_sum(&self) -> f64 {
        self.leaves()
            .map(|id| self.measure_of_existence(id).expect("leaf belongs to tree"))
            .sum()
    }

    fn serialize_node<S: Serializer>(&self, id: NodeId, serializer: S) -> Result<S::Ok, S::Error> {
        let node = &self.nodes[id.0];
        let mut st = serializer.serialize_struct("WorldNode", 4)?;
        st.serialize_field("label", &node.label)?;
        st.serialize_field("amplitude", &ComplexPair(node.amplitude))?;
        st.serialize_field(
            "measure",
            &self.measure_of_existence(id).expect("node belongs to tree"),
        )?;
        let children: Vec<NodeRef<'_>> = node.children.iter().map(|&c| NodeRef(self, c)).collect();
        st.serialize_field("children", &children)?;
        st.end()
    }
}

struct NodeRef<'a>(&'a WorldTree, NodeId);

impl Serialize for NodeRef<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.0.serialize_node(self.1, serializer)
    }
}

impl Serialize for WorldTree {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.serialize_node(self.root(), serializer)
    }
}

/// Serializes a complex number as `[re, im]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexPair(pub Complex);

impl Serialize for ComplexPair {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut t = serializer.serialize_tuple(2)?;
        t.serialize_element(&self.0.re)?;
        t.serialize_element(&self.0.im)?;
        t.end()
    }
}

const DAY_NAMES: [&str; 7] = ["Mon", "Tue", "Wed", "Thu", "Fri", "Sat", "Sun"];

/// "I am in world `branch_label`, at `week`, on `day`."
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CenteredProposition {
    pub branch_label: String,
    pub week: u32,
    pub day: u32,
}

impl fmt::Display for CenteredProposition {
    /// `H-Mon` for week 0; `HT-w1-Tue` otherwise. Days past Sunday render as `d7`, `d8`, ...
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let day = DAY_NAMES
            .get(self.day as usize)
            .map(|d| d.to_string())
            .unwrap_or_else(|| format!("d{}", self.day));
        if self.week == 0 {
            write!(f, "{}-{}", self.branch_label, day)
        } else {
            write!(f, "{}-w{}-{}", self.branch_label, self.week, day)
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CenteredCredence {
    pub proposition: CenteredProposition,
    /// Coin state of the awakening's week in this branch.
    pub coin_state: TossOutcome,
    pub branch_measure: f64,
    pub credence: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CenteredCredences {
    pub tree: WorldTree,
    /// Awakenings of positive-measure worlds, in branch then chronological order.
    pub entries: Vec<CenteredCredence>,
}

impl CenteredCredences {
    pub fn get(&self, label: &str) -> Option<f64> {
        self.entries
            .iter()
            .find(|e| e.proposition.to_string() == label)
            .map(|e| e.credence)
    }

    /// Total credence that the current awakening's coin shows `outcome`.
    pub fn credence_in(&self, outcome: TossOutcome) -> f64 {
        self.entries
            .iter()
            .filter(|e| e.coin_state == outcome)
            .map(|e| e.credence)
            .sum()
    }

    pub fn sum(&self) -> f64 {
        self.entries.iter().map(|e| e.credence).sum()
    }
}

impl Serialize for CenteredCredences {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        struct Credences<'a>(&'a [CenteredCredence]);
        impl Serialize for Credences<'_> {
            fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
                let mut m = serializer.serialize_map(Some(self.0.len()))?;
                for e in self.0 {
                    m.serialize_entry(&e.proposition.to_string(), &e.credence)?;
                }
                m.end()
            }
        }
        let mut st = serializer.serialize_struct("CenteredCredences", 3)?;
        st.serialize_field("tree", &self.tree)?;
        st.serialize_field("credences", &Credences(&self.entries))?;
        st.serialize_field("h_credence", &self.credence_in(TossOutcome::H))?;
        st.end()
    }
}

/// Branch amplitudes of a coin: quantum amplitudes as given, classical ones as
/// `(sqrt(pH), sqrt(1 - pH))`.
pub fn coin_amplitudes(coin: &CoinModel) -> (Complex, Complex) {
    match coin {
        CoinModel::Quantum { amp_h, amp_t } => (*amp_h, *amp_t),
        _ => {
            let (wh, wt) = coin.weights();
            (Complex::new(wh.sqrt(), 0.0), Complex::new(wt.sqrt(), 0.0))
        }
    }
}

/// One split per week; the leaves are the worlds, labelled by their toss
/// history (`"H"`, `"TH"`, ...).
pub fn coin_world_tree(coin: &CoinModel, weeks: u32) -> Result<WorldTree, BranchError> {
    let (amp_h, amp_t) = coin_amplitudes(coin);
    let mut tree = WorldTree::default();
    let mut frontier = vec![tree.root()];
    for _ in 0..weeks {
        let mut next = Vec::with_capacity(frontier.len() * 2);
        for leaf in frontier {
            next.extend(tree.split(leaf, [("H", amp_h), ("T", amp_t)])?);
        }
        frontier = next;
    }
    Ok(tree)
}

/// Credence in each centered proposition, proportional to the measure of the
/// world containing it.
pub fn centered_credences(protocol: &ProtocolSpec) -> Result<CenteredCredences, BranchError> {
    if !protocol.is_sequential() || protocol.weeks() > MAX_BRANCH_WEEKS {
        return Err(BranchError::UnsupportedProtocol);
    }
    let tree = coin_world_tree(protocol.coin(), protocol.weeks())?;
    let mut entries = Vec::new();
    for leaf in tree.leaves() {
        let measure = tree.measure_of_existence(leaf)?;
        if measure == 0.0 {
            continue;
        }
        let labels = tree.path_labels(leaf)?;
        let history: String = labels.concat();
        let seq: OutcomeSequence = history.parse().expect("coin tree labels are H/T");
        for a in awakenings_for(&seq, protocol.rule()) {
            entries.push(CenteredCredence {
                proposition: CenteredProposition {
                    branch_label: history.clone(),
                    week: a.week,
                    day: a.day,
                },
                coin_state: a.coin_state,
                branch_measure: measure,
                credence: measure,
            });
        }
    }
    let total: f64 = entries.iter().map(|e| e.branch_measure).sum();
    if total <= 0.0 {
        return Err(BranchError::NoAwakenings);
    }
    for e in &mut entries {
        e.credence = e.branch_measure / total;
    }
    Ok(CenteredCredences { tree, entries })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RouletteMeasures {
    pub rounds: u32,
    pub surviving: f64,
    pub dead: f64,
}

/// Measures after `rounds` of quantum Russian roulette, where each round the
/// player survives in the branch with amplitude `survival`.
pub fn roulette_measures(rounds: u32, survival: Complex) -> Result<RouletteMeasures, BranchError> {
    if !survival.re.is_finite() || !survival.im.is_finite() {
        return Err(BranchError::NonFinite);
    }
    let p = survival.norm_sqr();
    if p > 1.0 + NORM_TOLERANCE {
        return Err(BranchError::AmplitudeTooLarge(p.sqrt()));
    }
    let p = p.min(1.0);
    let surviving = (0..rounds).fold(1.0, |acc, _| acc * p);
    Ok(RouletteMeasures {
        rounds,
        surviving,
        dead: 1.0 - surviving,
    })
}

/// The roulette game as an explicit tree: the surviving leaf splits into
/// `alive` and `dead` each round. Returns the tree and the final surviving leaf.
pub fn roulette_tree(rounds: u32, survival: Complex) -> Result<(WorldTree, NodeId), BranchError> {
    let p = survival.norm_sqr();
    if p > 1.0 + NORM_TOLERANCE {
        return Err(BranchError::AmplitudeTooLarge(p.sqrt()));
    }
    let death = Complex::new((1.0 - p).max(0.0).sqrt(), 0.0);
    let mut tree = WorldTree::default();
    let mut alive = tree.root();
    for _ in 0..rounds {
        alive = tree.split(alive, [("alive", survival), ("dead", death)])?[0];
    }
    Ok((tree, alive))
}

/// Sparse ket over string basis labels.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct StateVector {
    entries: BTreeMap<String, Complex>,
}

impl StateVector {
    pub fn new() -> Self {
        StateVector::default()
    }

    /// The basis ket `|label>`.
    pub fn basis(label: impl Into<String>) -> Self {
        StateVector::from_entries([(label, Complex::new(1.0, 0.0))])
    }

    /// Later duplicates of a label overwrite earlier ones.
    pub fn from_entries<S: Into<String>>(entries: impl IntoIterator<Item = (S, Complex)>) -> Self {
        StateVector {
            entries: entries.into_iter().map(|(l, a)| (l.into(), a)).collect(),
        }
    }

    pub fn amplitude(&self, label: &str) -> Complex {
        self.entries.get(label).copied().unwrap_or_default()
    }

    pub fn entries(&self) -> impl Iterator<Item = (&str, Complex)> {
        self.entries.iter().map(|(l, a)| (l.as_str(), *a))
    }

    pub fn norm_sqr(&self) -> f64 {
        self.entries.values().map(|a| a.norm_sqr()).sum()
    }

    /// Scales to unit norm; the zero vector is returned unchanged.
    pub fn normalize(&self) -> StateVector {
        let n = self.norm_sqr().sqrt();
        if n == 0.0 {
            return self.clone();
        }
        self.scale(Complex::new(1.0 / n, 0.0))
    }

    pub fn is_normalized(&self) -> bool {
        (self.norm_sqr() - 1.0).abs() <= NORM_TOLERANCE
    }

    pub fn scale(&self, c: Complex) -> StateVector {
        StateVector {
            entries: self.entries.iter().map(|(l, a)| (l.clone(), a * c)).collect(),
        }
    }

    /// Largest `|self_i - other_i|` over the union of both supports.
    pub fn max_deviation(&self, other: &StateVector) -> f64 {
        self.entries
            .keys()
            .chain(other.entries.keys())
            .map(|l| (self.amplitude(l) - other.amplitude(l)).norm())
            .fold(0.0, f64::max)
    }
}

impl Serialize for StateVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut m = serializer.serialize_map(Some(self.entries.len()))?;
        for (l, a) in &self.entries {
            m.serialize_entry(l, &ComplexPair(*a))?;
        }
        m.end()
    }
}

/// Entrywise `c1 v1 + c2 v2`.
pub fn superpose(v1: &StateVector, v2: &StateVector, c1: Complex, c2: Complex) -> StateVector {
    let mut entries = BTreeMap::new();
    for (l, a) in &v1.entries {
        *entries.entry(l.clone()).or_insert_with(Complex::default) += c1 * a;
    }
    for (l, a) in &v2.entries {
        *entries.entry(l.clone()).or_insert_with(Complex::default) += c2 * a;
    }
    StateVector { entries }
}

/// `<v1|v2>`, conjugate-linear in `v1`.
pub fn inner_product(v1: &StateVector, v2: &StateVector) -> Complex {
    v1.entries
        .iter()
        .filter_map(|(l, a)| v2.entries.get(l).map(|b| a.conj() * b))
        .sum()
}

#[derive(Debug, Clone, PartialEq)]
pub struct OpusReport {
    pub r_plus: StateVector,
    pub r_minus: StateVector,
    /// `(R+ - R-) / sqrt(2)`.
    pub recombined: StateVector,
    pub max_deviation: f64,
    pub passed: bool,
}

impl Serialize for OpusReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("OpusReport", 5)?;
        st.serialize_field("r_plus", &self.r_plus)?;
        st.serialize_field("r_minus", &self.r_minus)?;
        st.serialize_field("recombined", &self.recombined)?;
        st.serialize_field("max_deviation", &self.max_deviation)?;
        st.serialize_field("passed", &self.passed)?;
        st.end()
    }
}

/// Builds `R+ = (P + Q)/sqrt(2)` and `R- = (P - Q)/sqrt(2)`, then checks that
/// `(R+ - R-)/sqrt(2)` is `Q` again.
pub fn opus_identity_check(p: &StateVector, q: &StateVector) -> Result<OpusReport, BranchError> {
    let pp = inner_product(p, p).re;
    let qq = inner_product(q, q).re;
    let pq = inner_product(p, q).norm();
    if (pp - 1.0).abs() > NORM_TOLERANCE || (qq - 1.0).abs() > NORM_TOLERANCE || pq > NORM_TOLERANCE {
        return Err(BranchError::NotOrthonormal { pp, qq, pq });
    }
    let h = Complex::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
    let r_plus = superpose(p, q, h, h);
    let r_minus = superpose(p, q, h, -h);
    let recombined = superpose(&r_plus, &r_minus, h, -h);
    let max_deviation = recombined.max_deviation(q);
    Ok(OpusReport {
        r_plus,
        r_minus,
        recombined,
        max_deviation,
        passed: max_deviation < NORM_TOLERANCE,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::protocol::AwakeningRule;
    use std::f64::consts::FRAC_1_SQRT_2;

    fn re(x: f64) -> Complex {
        Complex::new(x, 0.0)
    }

    fn quantum(weeks: u32, amp_h: Complex, amp_t: Complex) -> ProtocolSpec {
        ProtocolSpec::sequential(
            weeks,
            AwakeningRule::monday_tuesday(),
            CoinModel::quantum(amp_h, amp_t).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn fair_split_halves_the_measure() {
        let mut tree = WorldTree::default();
        let kids = tree.split(tree.root(), [("R", re(FRAC_1_SQRT_2)), ("T", re(FRAC_1_SQRT_2))]).unwrap();
        assert_eq!(kids.len(), 2);
        for k in &kids {
            assert!((tree.measure_of_existence(*k).unwrap() - 0.5).abs() < 1e-15);
        }
        assert_eq!(tree.measure_of_existence(tree.root()).unwrap(), 1.0);
        let grand = tree.split(kids[0], [("R", re(FRAC_1_SQRT_2)), ("T", re(FRAC_1_SQRT_2))]).unwrap();
        assert!((tree.measure_of_existence(grand[1]).unwrap() - 0.25).abs() < 1e-15);
    }

    #[test]
    fn trivial_split_keeps_measure() {
        let mut tree = WorldTree::default();
        let kid = tree.split(tree.root(), [("A", re(1.0))]).unwrap()[0];
        assert_eq!(tree.measure_of_existence(kid).unwrap(), 1.0);
    }

    #[test]
    fn split_errors() {
        let mut tree = WorldTree::default();
        let root = tree.root();
        assert!(matches!(
            tree.split(root, [("A", re(0.6)), ("B", re(0.9))]),
            Err(BranchError::NotNormalized(_))
        ));
        assert_eq!(
            tree.split(root, [("A", re(FRAC_1_SQRT_2)), ("A", re(FRAC_1_SQRT_2))]),
            Err(BranchError::DuplicateLabel("A".into()))
        );
        assert_eq!(tree.split(root, Vec::<(String, Complex)>::new()), Err(BranchError::NoBranches));
        tree.split(root, [("A", re(1.0))]).unwrap();
        assert_eq!(tree.split(root, [("B", re(1.0))]), Err(BranchError::NotALeaf(0)));
        assert_eq!(tree.measure_of_existence(NodeId(42)), Err(BranchError::UnknownNode(42)));
    }

    #[test]
    fn fair_quantum_coin_gives_thirds() {
        let c = centered_credences(&quantum(1, re(FRAC_1_SQRT_2), re(FRAC_1_SQRT_2))).unwrap();
        let labels: Vec<String> = c.entries.iter().map(|e| e.proposition.to_string()).collect();
        assert_eq!(labels, ["H-Mon", "T-Mon", "T-Tue"]);
        for l in &labels {
            assert!((c.get(l).unwrap() - 1.0 / 3.0).abs() < 1e-12);
        }
    }

    #[test]
    fn single_branch_coin() {
        let c = centered_credences(&quantum(1, re(1.0), re(0.0))).unwrap();
        assert_eq!(c.entries.len(), 1);
        assert_eq!(c.get("H-Mon"), Some(1.0));
    }

    #[test]
    fn skewed_coin_gives_fifths() {
        let c = centered_credences(&quantum(1, re((1.0f64 / 3.0).sqrt()), re((2.0f64 / 3.0).sqrt()))).unwrap();
        assert!((c.get("H-Mon").unwrap() - 0.2).abs() < 1e-12);
        assert!((c.get("T-Mon").unwrap() - 0.4).abs() < 1e-12);
        assert!((c.get("T-Tue").unwrap() - 0.4).abs() < 1e-12);
    }

    #[test]
    fn multi_week_labels() {
        let c = centered_credences(&quantum(2, re(FRAC_1_SQRT_2), re(FRAC_1_SQRT_2))).unwrap();
        assert!(c.get("HT-w1-Tue").is_some());
        assert!((c.sum() - 1.0).abs() < 1e-12);
        assert!((c.credence_in(TossOutcome::H) - 1.0 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn roulette_closed_form() {
        let fair = re(FRAC_1_SQRT_2);
        assert_eq!(roulette_measures(0, fair).unwrap(), RouletteMeasures { rounds: 0, surviving: 1.0, dead: 0.0 });
        let one = roulette_measures(1, fair).unwrap();
        assert!((one.surviving - 0.5).abs() < 1e-15 && (one.dead - 0.5).abs() < 1e-15);
        let ten = roulette_measures(10, fair).unwrap();
        assert!((ten.surviving - 2f64.powi(-10)).abs() < 1e-15);
        assert!(matches!(roulette_measures(1, re(1.1)), Err(BranchError::AmplitudeTooLarge(_))));
    }

    #[test]
    fn roulette_tree_matches() {
        let fair = re(FRAC_1_SQRT_2);
        let (tree, alive) = roulette_tree(10, fair).unwrap();
        let m = tree.measure_of_existence(alive).unwrap();
        assert!((m - roulette_measures(10, fair).unwrap().surviving).abs() < 1e-12);
        assert!((tree.leaf_measure_sum() - 1.0).abs() < 1e-9);
    }

    #[test]
    fn superposition_basics() {
        let p = StateVector::basis("five");
        let q = StateVector::basis("ten");
        let h = re(FRAC_1_SQRT_2);
        assert_eq!(superpose(&p, &q, re(1.0), re(0.0)).max_deviation(&p), 0.0);
        let rp = superpose(&p, &q, h, h);
        let rm = superpose(&p, &q, h, -h);
        assert!(rp.is_normalized() && rm.is_normalized());
        assert!(inner_product(&rp, &rm).norm() < 1e-15);
        assert_eq!(inner_product(&p, &q), Complex::default());
        assert_eq!(inner_product(&p, &p), re(1.0));
    }

    #[test]
    fn inner_product_is_conjugate_linear_in_first_slot() {
        let v = StateVector::from_entries([("a", Complex::new(0.0, 1.0))]);
        let w = StateVector::basis("a");
        assert_eq!(inner_product(&v, &w), Complex::new(0.0, -1.0));
        assert_eq!(inner_product(&w, &v), Complex::new(0.0, 1.0));
    }

    #[test]
    fn opus_identity_on_basis_states() {
        let report = opus_identity_check(&StateVector::basis("e0"), &StateVector::basis("e1")).unwrap();
        assert!(report.max_deviation < 1e-15);
        assert!(report.passed);
    }

    #[test]
    fn opus_rejects_non_orthogonal_inputs() {
        let p = StateVector::basis("e0");
        assert!(matches!(opus_identity_check(&p, &p), Err(BranchError::NotOrthonormal { .. })));
        let unnormalized = StateVector::from_entries([("e1", re(2.0))]);
        assert!(opus_identity_check(&p, &unnormalized).is_err());
    }

    #[test]
    fn normalize_unit_norm() {
        let v = StateVector::from_entries([("a", re(3.0)), ("b", Complex::new(0.0, 4.0))]).normalize();
        assert!(v.is_normalized());
        assert_eq!(StateVector::new().normalize(), StateVector::new());
    }

    #[test]
    fn tree_json_shape() {
        let tree = coin_world_tree(&CoinModel::ClassicalFair, 1).unwrap();
        let json = serde_json::to_value(&tree).unwrap();
        assert_eq!(json["children"][0]["label"], "H");
        assert!((json["children"][1]["measure"].as_f64().unwrap() - 0.5).abs() < 1e-15);
        assert_eq!(json["amplitude"], serde_json::json!([1.0, 0.0]));
    }
}
