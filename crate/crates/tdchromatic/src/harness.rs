//! Machine verification of the bound theorems, their corollaries, and the
//! sharpness examples, over exhaustive universes of small connected graphs.
//!
//! Each check either produces a [`BoundReport`] or a [`SkipReason`]; a
//! theorem hypothesis that fails (disconnected graph, bridge edge, cut
//! vertex, undersized result) is a skip, never a failure. A report with
//! `holds == false` is a finding: the exhaustive driver collects it on a
//! counterexample channel and the run fails.
//!
//! Corollary bounds are half-integers; all comparisons use exact doubled
//! integers ([`HalfInt`]), never floating point.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::analysis::{bridges, cut_vertices, has_isolated_vertex, is_connected};
use crate::enumerate::{connected_graphs, connected_graphs_dedup};
use crate::error::{Error, Result};
use crate::formulas::{chi_dt_corona, chi_dt_gadget, CoronaKind};
use crate::graph::Graph;
use crate::io::write_edge_list;
use crate::ops;
use crate::solver::{
    chromatic_number, td_chromatic_number, total_domination_number, SolveResult, Witness,
};

/// Hard cap on the exhaustive verification order.
pub const VERIFY_CAP: usize = 7;

/// Default exhaustive verification order.
pub const VERIFY_DEFAULT: usize = 6;

// ---------------------------------------------------------------------------
// Exact half-integer arithmetic
// ---------------------------------------------------------------------------

/// An exact half-integer, stored as twice its value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct HalfInt(i64);

impl HalfInt {
    pub fn from_int(v: i64) -> Self {
        HalfInt(2 * v)
    }

    /// Value `numerator / 2`.
    pub fn halves(numerator: i64) -> Self {
        HalfInt(numerator)
    }

    pub fn doubled(self) -> i64 {
        self.0
    }
}

impl From<u32> for HalfInt {
    fn from(v: u32) -> Self {
        HalfInt::from_int(v as i64)
    }
}

impl std::fmt::Display for HalfInt {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.0 % 2 == 0 {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

// ---------------------------------------------------------------------------
// Identifiers
// ---------------------------------------------------------------------------

/// The checkable statements.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TheoremId {
    /// Edge removal: χdt(G) - 1 ≤ χdt(G-e) ≤ χdt(G) + 2 (non-bridge e).
    T22,
    /// Vertex removal: χdt(G) - 2 ≤ χdt(G-v) ≤ χdt(G) + deg(v) - 1.
    T23,
    /// Edge contraction: χdt(G) - 2 ≤ χdt(G/e) ≤ χdt(G) + 1.
    T31,
    /// Vertex contraction: χdt(G) - 2 ≤ χdt(G/v) ≤ χdt(G) + deg(v) - 1.
    T33,
    /// Neighborhood-edge removal: χdt(G) - deg(v) + 1 ≤ χdt(G⊙v) ≤ χdt(G) + 1.
    T35,
    /// Edge sandwich: (χdt(G-e) + χdt(G/e) ± 3) / 2 brackets χdt(G).
    C32,
    /// Vertex sandwich from vertex removal and contraction.
    C34,
    /// γt(G) ≤ χdt(G) ≤ γt(G) + χ(G).
    Henning,
}

/// Canonical check order; also the report order.
pub const ALL_THEOREMS: [TheoremId; 8] = [
    TheoremId::T22,
    TheoremId::T23,
    TheoremId::T31,
    TheoremId::T33,
    TheoremId::T35,
    TheoremId::C32,
    TheoremId::C34,
    TheoremId::Henning,
];

impl TheoremId {
    pub fn name(self) -> &'static str {
        match self {
            TheoremId::T22 => "T2.2",
            TheoremId::T23 => "T2.3",
            TheoremId::T31 => "T3.1",
            TheoremId::T33 => "T3.3",
            TheoremId::T35 => "T3.5",
            TheoremId::C32 => "C3.2",
            TheoremId::C34 => "C3.4",
            TheoremId::Henning => "Henning",
        }
    }

    fn index(self) -> usize {
        ALL_THEOREMS.iter().position(|&t| t == self).unwrap()
    }

    pub fn parse(s: &str) -> Result<Self> {
        ALL_THEOREMS
            .iter()
            .copied()
            .find(|t| t.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| {
                Error::Parse(format!(
                    "unknown theorem `{s}` (expected one of T2.2 T2.3 T3.1 T3.3 T3.5 C3.2 C3.4 Henning)"
                ))
            })
    }
}

impl std::fmt::Display for TheoremId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// The vertex or edge a check operates on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Operand {
    None,
    Vertex(usize),
    Edge(usize, usize),
}

impl std::fmt::Display for Operand {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match *self {
            Operand::None => f.write_str("-"),
            Operand::Vertex(v) => write!(f, "v {v}"),
            Operand::Edge(u, w) => write!(f, "e {u}-{w}"),
        }
    }
}

/// Why an instance was not checked. Each reason names the theorem
/// hypothesis that failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SkipReason {
    Disconnected,
    BridgeEdge,
    CutVertex,
    TooSmall,
    IsolatedVertex,
}

impl SkipReason {
    pub fn name(self) -> &'static str {
        match self {
            SkipReason::Disconnected => "disconnected",
            SkipReason::BridgeEdge => "bridge-edge",
            SkipReason::CutVertex => "cut-vertex",
            SkipReason::TooSmall => "too-small",
            SkipReason::IsolatedVertex => "isolated-vertex",
        }
    }
}

impl std::fmt::Display for SkipReason {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

// ---------------------------------------------------------------------------
// Per-instance reports
// ---------------------------------------------------------------------------

/// One verified inequality instance: `lhs ≤ value ≤ rhs`.
#[derive(Debug, Clone)]
pub struct BoundReport {
    pub theorem: TheoremId,
    pub operand: Operand,
    pub lhs: HalfInt,
    /// The bounded quantity (χdt of the operated graph, or of G itself for
    /// the corollaries and the Henning sandwich).
    pub value: HalfInt,
    pub rhs: HalfInt,
    pub holds: bool,
    pub tight_low: bool,
    pub tight_high: bool,
    /// Named values for reporting (base χdt, operand degree, certificates
    /// on violation).
    pub values: BTreeMap<String, String>,
}

impl BoundReport {
    fn new(
        theorem: TheoremId,
        operand: Operand,
        lhs: HalfInt,
        value: HalfInt,
        rhs: HalfInt,
        values: BTreeMap<String, String>,
    ) -> Self {
        BoundReport {
            theorem,
            operand,
            lhs,
            value,
            rhs,
            holds: lhs <= value && value <= rhs,
            tight_low: value == lhs,
            tight_high: value == rhs,
            values,
        }
    }
}

/// A checked instance or the hypothesis that ruled it out.
#[derive(Debug, Clone)]
pub enum CheckOutcome {
    Checked(BoundReport),
    Skipped(SkipReason),
}

fn certificate_text(result: &SolveResult) -> String {
    match &result.witness {
        Witness::TotalDominator(cert) => crate::io::write_certificate(cert),
        Witness::ProperColoring(c) => format!("coloring {:?}", c.colors()),
        Witness::TotalDominatingSet(s) => format!("set {s:?}"),
    }
}

fn base_values(base: &SolveResult) -> BTreeMap<String, String> {
    let mut m = BTreeMap::new();
    m.insert("chi_dt_g".into(), base.value.to_string());
    m.insert("nodes_g".into(), base.nodes_explored.to_string());
    m.insert("certificate_g".into(), certificate_text(base));
    m
}

fn attach_violation_detail(report: &mut BoundReport, op_result: Option<&SolveResult>) {
    if report.holds {
        // certificates only travel on the counterexample channel
        report.values.remove("certificate_g");
        report.values.remove("nodes_g");
        return;
    }
    if let Some(op) = op_result {
        report
            .values
            .insert("certificate_op".into(), certificate_text(op));
    }
}

fn check_vertex_in_range(g: &Graph, v: usize) -> Result<()> {
    if v >= g.order() {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            order: g.order(),
        });
    }
    Ok(())
}

fn check_edge_in_graph(g: &Graph, u: usize, w: usize) -> Result<()> {
    check_vertex_in_range(g, u)?;
    check_vertex_in_range(g, w)?;
    if !g.has_edge(u, w) {
        return Err(Error::MissingEdge(u, w));
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Individual theorem checks
// ---------------------------------------------------------------------------

/// Edge removal bound (non-bridge hypothesis).
pub fn check_edge_removal(g: &Graph, u: usize, w: usize) -> Result<CheckOutcome> {
    check_edge_in_graph(g, u, w)?;
    if !is_connected(g) {
        return Ok(CheckOutcome::Skipped(SkipReason::Disconnected));
    }
    if g.order() < 3 {
        return Ok(CheckOutcome::Skipped(SkipReason::TooSmall));
    }
    if bridges(g).contains(&(u.min(w), u.max(w))) {
        return Ok(CheckOutcome::Skipped(SkipReason::BridgeEdge));
    }
    let base = td_chromatic_number(g)?;
    check_edge_removal_with(g, &base, u, w)
}

fn check_edge_removal_with(
    g: &Graph,
    base: &SolveResult,
    u: usize,
    w: usize,
) -> Result<CheckOutcome> {
    let removed = ops::remove_edge(g, u, w)?;
    let op = td_chromatic_number(&removed)?;
    let mut values = base_values(base);
    values.insert("chi_dt_g_minus_e".into(), op.value.to_string());
    let mut report = BoundReport::new(
        TheoremId::T22,
        Operand::Edge(u, w),
        HalfInt::from_int(base.value as i64 - 1),
        op.value.into(),
        HalfInt::from_int(base.value as i64 + 2),
        values,
    );
    attach_violation_detail(&mut report, Some(&op));
    Ok(CheckOutcome::Checked(report))
}

/// Vertex removal bound (non-cut-vertex hypothesis).
pub fn check_vertex_removal(g: &Graph, v: usize) -> Result<CheckOutcome> {
    check_vertex_in_range(g, v)?;
    if !is_connected(g) {
        return Ok(CheckOutcome::Skipped(SkipReason::Disconnected));
    }
    if g.order() < 3 {
        return Ok(CheckOutcome::Skipped(SkipReason::TooSmall));
    }
    if cut_vertices(g).contains(&v) {
        return Ok(CheckOutcome::Skipped(SkipReason::CutVertex));
    }
    let base = td_chromatic_number(g)?;
    check_vertex_removal_with(g, &base, v)
}

fn check_vertex_removal_with(g: &Graph, base: &SolveResult, v: usize) -> Result<CheckOutcome> {
    let deg = g.degree(v) as i64;
    let removed = ops::remove_vertex(g, v)?;
    let op = td_chromatic_number(&removed)?;
    let mut values = base_values(base);
    values.insert("chi_dt_g_minus_v".into(), op.value.to_string());
    values.insert("deg_v".into(), deg.to_string());
    let mut report = BoundReport::new(
        TheoremId::T23,
        Operand::Vertex(v),
        HalfInt::from_int(base.value as i64 - 2),
        op.value.into(),
        HalfInt::from_int(base.value as i64 + deg - 1),
        values,
    );
    attach_violation_detail(&mut report, Some(&op));
    Ok(CheckOutcome::Checked(report))
}

/// Edge contraction bound.
pub fn check_edge_contraction(g: &Graph, u: usize, w: usize) -> Result<CheckOutcome> {
    check_edge_in_graph(g, u, w)?;
    if !is_connected(g) {
        return Ok(CheckOutcome::Skipped(SkipReason::Disconnected));
    }
    if g.order() < 3 {
        return Ok(CheckOutcome::Skipped(SkipReason::TooSmall));
    }
    let base = td_chromatic_number(g)?;
    check_edge_contraction_with(g, &base, u, w)
}

fn check_edge_contraction_with(
    g: &Graph,
    base: &SolveResult,
    u: usize,
    w: usize,
) -> Result<CheckOutcome> {
    let contracted = ops::contract_edge(g, u, w)?;
    let op = td_chromatic_number(&contracted)?;
    let mut values = base_values(base);
    values.insert("chi_dt_g_over_e".into(), op.value.to_string());
    let mut report = BoundReport::new(
        TheoremId::T31,
        Operand::Edge(u, w),
        HalfInt::from_int(base.value as i64 - 2),
        op.value.into(),
        HalfInt::from_int(base.value as i64 + 1),
        values,
    );
    attach_violation_detail(&mut report, Some(&op));
    Ok(CheckOutcome::Checked(report))
}

/// Vertex contraction bound.
pub fn check_vertex_contraction(g: &Graph, v: usize) -> Result<CheckOutcome> {
    check_vertex_in_range(g, v)?;
    if !is_connected(g) {
        return Ok(CheckOutcome::Skipped(SkipReason::Disconnected));
    }
    if g.order() < 3 {
        return Ok(CheckOutcome::Skipped(SkipReason::TooSmall));
    }
    let base = td_chromatic_number(g)?;
    check_vertex_contraction_with(g, &base, v)
}

fn check_vertex_contraction_with(
    g: &Graph,
    base: &SolveResult,
    v: usize,
) -> Result<CheckOutcome> {
    let deg = g.degree(v) as i64;
    let contracted = ops::contract_vertex(g, v)?;
    let op = td_chromatic_number(&contracted)?;
    let mut values = base_values(base);
    values.insert("chi_dt_g_over_v".into(), op.value.to_string());
    values.insert("deg_v".into(), deg.to_string());
    let mut report = BoundReport::new(
        TheoremId::T33,
        Operand::Vertex(v),
        HalfInt::from_int(base.value as i64 - 2),
        op.value.into(),
        HalfInt::from_int(base.value as i64 + deg - 1),
        values,
    );
    attach_violation_detail(&mut report, Some(&op));
    Ok(CheckOutcome::Checked(report))
}

/// Neighborhood-edge removal bound.
pub fn check_odot(g: &Graph, v: usize) -> Result<CheckOutcome> {
    check_vertex_in_range(g, v)?;
    if !is_connected(g) {
        return Ok(CheckOutcome::Skipped(SkipReason::Disconnected));
    }
    if g.order() < 2 {
        return Ok(CheckOutcome::Skipped(SkipReason::TooSmall));
    }
    let base = td_chromatic_number(g)?;
    check_odot_with(g, &base, v)
}

fn check_odot_with(g: &Graph, base: &SolveResult, v: usize) -> Result<CheckOutcome> {
    let deg = g.degree(v) as i64;
    let opened = ops::odot(g, v)?;
    let op = td_chromatic_number(&opened)?;
    let mut values = base_values(base);
    values.insert("chi_dt_g_odot_v".into(), op.value.to_string());
    values.insert("deg_v".into(), deg.to_string());
    let mut report = BoundReport::new(
        TheoremId::T35,
        Operand::Vertex(v),
        HalfInt::from_int(base.value as i64 - deg + 1),
        op.value.into(),
        HalfInt::from_int(base.value as i64 + 1),
        values,
    );
    attach_violation_detail(&mut report, Some(&op));
    Ok(CheckOutcome::Checked(report))
}

/// Corollary sandwiches: the edge form for [`Operand::Edge`], the vertex
/// form for [`Operand::Vertex`]. Preconditions are the conjunction of the
/// constituent theorems'.
pub fn check_corollaries(g: &Graph, operand: Operand) -> Result<CheckOutcome> {
    match operand {
        Operand::Edge(u, w) => {
            check_edge_in_graph(g, u, w)?;
            if !is_connected(g) {
                return Ok(CheckOutcome::Skipped(SkipReason::Disconnected));
            }
            if g.order() < 3 {
                return Ok(CheckOutcome::Skipped(SkipReason::TooSmall));
            }
            if bridges(g).contains(&(u.min(w), u.max(w))) {
                return Ok(CheckOutcome::Skipped(SkipReason::BridgeEdge));
            }
            let base = td_chromatic_number(g)?;
            check_corollary_edge_with(g, &base, u, w)
        }
        Operand::Vertex(v) => {
            check_vertex_in_range(g, v)?;
            if !is_connected(g) {
                return Ok(CheckOutcome::Skipped(SkipReason::Disconnected));
            }
            if g.order() < 3 {
                return Ok(CheckOutcome::Skipped(SkipReason::TooSmall));
            }
            if cut_vertices(g).contains(&v) {
                return Ok(CheckOutcome::Skipped(SkipReason::CutVertex));
            }
            let base = td_chromatic_number(g)?;
            check_corollary_vertex_with(g, &base, v)
        }
        Operand::None => Err(Error::InvalidParameter(
            "corollary check needs a vertex or edge operand".into(),
        )),
    }
}

fn check_corollary_edge_with(
    g: &Graph,
    base: &SolveResult,
    u: usize,
    w: usize,
) -> Result<CheckOutcome> {
    let removed = td_chromatic_number(&ops::remove_edge(g, u, w)?)?;
    let contracted = td_chromatic_number(&ops::contract_edge(g, u, w)?)?;
    let sum = removed.value as i64 + contracted.value as i64;
    let mut values = base_values(base);
    values.insert("chi_dt_g_minus_e".into(), removed.value.to_string());
    values.insert("chi_dt_g_over_e".into(), contracted.value.to_string());
    let mut report = BoundReport::new(
        TheoremId::C32,
        Operand::Edge(u, w),
        HalfInt::halves(sum - 3),
        base.value.into(),
        HalfInt::halves(sum + 3),
        values,
    );
    attach_violation_detail(&mut report, None);
    Ok(CheckOutcome::Checked(report))
}

fn check_corollary_vertex_with(
    g: &Graph,
    base: &SolveResult,
    v: usize,
) -> Result<CheckOutcome> {
    let deg = g.degree(v) as i64;
    let removed = td_chromatic_number(&ops::remove_vertex(g, v)?)?;
    let contracted = td_chromatic_number(&ops::contract_vertex(g, v)?)?;
    let sum = removed.value as i64 + contracted.value as i64;
    let mut values = base_values(base);
    values.insert("chi_dt_g_minus_v".into(), removed.value.to_string());
    values.insert("chi_dt_g_over_v".into(), contracted.value.to_string());
    values.insert("deg_v".into(), deg.to_string());
    let mut report = BoundReport::new(
        TheoremId::C34,
        Operand::Vertex(v),
        HalfInt::halves(sum - 2 * deg + 2),
        base.value.into(),
        HalfInt::halves(sum + 4),
        values,
    );
    attach_violation_detail(&mut report, None);
    Ok(CheckOutcome::Checked(report))
}

/// The total domination sandwich γt ≤ χdt ≤ γt + χ.
pub fn check_henning(g: &Graph) -> Result<CheckOutcome> {
    if g.order() < 2 {
        return Ok(CheckOutcome::Skipped(SkipReason::TooSmall));
    }
    if has_isolated_vertex(g) {
        return Ok(CheckOutcome::Skipped(SkipReason::IsolatedVertex));
    }
    let base = td_chromatic_number(g)?;
    check_henning_with(g, &base)
}

fn check_henning_with(g: &Graph, base: &SolveResult) -> Result<CheckOutcome> {
    let gamma = total_domination_number(g)?;
    let chi = chromatic_number(g)?;
    let mut values = base_values(base);
    values.insert("gamma_t".into(), gamma.value.to_string());
    values.insert("chi".into(), chi.value.to_string());
    let mut report = BoundReport::new(
        TheoremId::Henning,
        Operand::None,
        gamma.value.into(),
        base.value.into(),
        HalfInt::from_int(gamma.value as i64 + chi.value as i64),
        values,
    );
    attach_violation_detail(&mut report, None);
    Ok(CheckOutcome::Checked(report))
}

// ---------------------------------------------------------------------------
// Exhaustive verification
// ---------------------------------------------------------------------------

/// Options for [`verify_exhaustive`].
#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub n_max: usize,
    pub theorems: Vec<TheoremId>,
    /// Verify one representative per isomorphism class instead of every
    /// labeled graph.
    pub dedup: bool,
    /// Worker threads; 0 uses the rayon default.
    pub workers: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            n_max: VERIFY_DEFAULT,
            theorems: ALL_THEOREMS.to_vec(),
            dedup: false,
            workers: 0,
        }
    }
}

/// A recorded instance: graph, operand, and the values behind the verdict.
#[derive(Debug, Clone, Serialize)]
pub struct WitnessRecord {
    pub graph: String,
    pub operand: String,
    pub values: BTreeMap<String, String>,
}

fn witness_record(g: &Graph, report: &BoundReport, endpoint: &str) -> WitnessRecord {
    let mut values = report.values.clone();
    values.insert("endpoint".into(), endpoint.into());
    values.insert("lhs".into(), report.lhs.to_string());
    values.insert("value".into(), report.value.to_string());
    values.insert("rhs".into(), report.rhs.to_string());
    WitnessRecord {
        graph: write_edge_list(g),
        operand: report.operand.to_string(),
        values,
    }
}

/// Aggregated results for one theorem.
#[derive(Debug, Clone, Default)]
pub struct TheoremStats {
    pub checked: u64,
    pub held: u64,
    pub skipped: u64,
    pub tight_low: u64,
    pub tight_high: u64,
    pub first_tight_low: Option<WitnessRecord>,
    pub first_tight_high: Option<WitnessRecord>,
    pub counterexamples: Vec<WitnessRecord>,
}

/// Summary of an exhaustive verification run.
#[derive(Debug, Clone)]
pub struct VerifySummary {
    pub n_max: usize,
    pub theorems: Vec<TheoremId>,
    pub stats: Vec<TheoremStats>,
}

impl VerifySummary {
    pub fn violations(&self) -> u64 {
        self.stats
            .iter()
            .map(|s| s.counterexamples.len() as u64)
            .sum()
    }

    pub fn stats_for(&self, theorem: TheoremId) -> Option<&TheoremStats> {
        self.theorems
            .iter()
            .position(|&t| t == theorem)
            .map(|i| &self.stats[i])
    }

    /// JSON report: one object per theorem with the schema
    /// `{theorem, n_max, checked, held, skipped, tight_low, tight_high, witnesses}`.
    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct TheoremJson<'a> {
            theorem: &'a str,
            n_max: usize,
            checked: u64,
            held: u64,
            skipped: u64,
            tight_low: u64,
            tight_high: u64,
            witnesses: Vec<&'a WitnessRecord>,
        }
        let rows: Vec<TheoremJson> = self
            .theorems
            .iter()
            .zip(&self.stats)
            .map(|(&t, s)| TheoremJson {
                theorem: t.name(),
                n_max: self.n_max,
                checked: s.checked,
                held: s.held,
                skipped: s.skipped,
                tight_low: s.tight_low,
                tight_high: s.tight_high,
                witnesses: s
                    .first_tight_low
                    .iter()
                    .chain(s.first_tight_high.iter())
                    .collect(),
            })
            .collect();
        serde_json::to_string_pretty(&rows).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (&t, s) in self.theorems.iter().zip(&self.stats) {
            out.push_str(&format!(
                "{}: checked={} held={} skipped={} tight_low={} tight_high={}\n",
                t.name(),
                s.checked,
                s.held,
                s.skipped,
                s.tight_low,
                s.tight_high
            ));
        }
        out.push_str(&format!(
            "violations={} (n_max={})\n",
            self.violations(),
            self.n_max
        ));
        out
    }

    /// The counterexample channel: every failed instance with certificates.
    pub fn counterexamples(&self) -> Vec<(TheoremId, &WitnessRecord)> {
        self.theorems
            .iter()
            .zip(&self.stats)
            .flat_map(|(&t, s)| s.counterexamples.iter().map(move |w| (t, w)))
            .collect()
    }
}

/// Everything the reducer needs from one graph, kept small so exhaustive
/// runs stream.
struct PerGraph {
    counts: Vec<[u64; 5]>, // checked, held, skipped, tight_low, tight_high
    tight_records: Vec<(usize, bool, WitnessRecord)>, // theorem idx, is_high, record
    violations: Vec<(usize, WitnessRecord)>,
}

fn process_graph(g: &Graph, theorems: &[TheoremId]) -> Result<PerGraph> {
    let mut out = PerGraph {
        counts: vec![[0; 5]; ALL_THEOREMS.len()],
        tight_records: Vec::new(),
        violations: Vec::new(),
    };
    let connected = is_connected(g);
    let solvable = connected && g.order() >= 2;
    let base = if solvable {
        Some(td_chromatic_number(g)?)
    } else {
        None
    };
    let bridge_set = if solvable { bridges(g) } else { Vec::new() };
    let cut_set = if solvable { cut_vertices(g) } else { Vec::new() };

    let record = |out: &mut PerGraph, theorem: TheoremId, outcome: CheckOutcome| {
        let idx = theorem.index();
        match outcome {
            CheckOutcome::Skipped(_) => out.counts[idx][2] += 1,
            CheckOutcome::Checked(report) => {
                out.counts[idx][0] += 1;
                if report.holds {
                    out.counts[idx][1] += 1;
                } else {
                    out.violations
                        .push((idx, witness_record(g, &report, "violation")));
                }
                if report.tight_low {
                    out.counts[idx][3] += 1;
                    if !out.tight_records.iter().any(|(i, hi, _)| *i == idx && !hi) {
                        out.tight_records
                            .push((idx, false, witness_record(g, &report, "low")));
                    }
                }
                if report.tight_high {
                    out.counts[idx][4] += 1;
                    if !out.tight_records.iter().any(|(i, hi, _)| *i == idx && *hi) {
                        out.tight_records
                            .push((idx, true, witness_record(g, &report, "high")));
                    }
                }
            }
        }
    };

    let edges = g.edges();
    for &theorem in theorems {
        match theorem {
            TheoremId::T22 => {
                for &(u, w) in &edges {
                    let outcome = match &base {
                        Some(b) if g.order() >= 3 && !bridge_set.contains(&(u, w)) => {
                            check_edge_removal_with(g, b, u, w)?
                        }
                        Some(_) => CheckOutcome::Skipped(if g.order() < 3 {
                            SkipReason::TooSmall
                        } else {
                            SkipReason::BridgeEdge
                        }),
                        None => CheckOutcome::Skipped(SkipReason::Disconnected),
                    };
                    record(&mut out, theorem, outcome);
                }
            }
            TheoremId::T23 => {
                for v in 0..g.order() {
                    let outcome = match &base {
                        Some(b) if g.order() >= 3 && !cut_set.contains(&v) => {
                            check_vertex_removal_with(g, b, v)?
                        }
                        Some(_) => CheckOutcome::Skipped(if g.order() < 3 {
                            SkipReason::TooSmall
                        } else {
                            SkipReason::CutVertex
                        }),
                        None => CheckOutcome::Skipped(SkipReason::Disconnected),
                    };
                    record(&mut out, theorem, outcome);
                }
            }
            TheoremId::T31 => {
                for &(u, w) in &edges {
                    let outcome = match &base {
                        Some(b) if g.order() >= 3 => check_edge_contraction_with(g, b, u, w)?,
                        Some(_) => CheckOutcome::Skipped(SkipReason::TooSmall),
                        None => CheckOutcome::Skipped(SkipReason::Disconnected),
                    };
                    record(&mut out, theorem, outcome);
                }
            }
            TheoremId::T33 => {
                for v in 0..g.order() {
                    let outcome = match &base {
                        Some(b) if g.order() >= 3 => check_vertex_contraction_with(g, b, v)?,
                        Some(_) => CheckOutcome::Skipped(SkipReason::TooSmall),
                        None => CheckOutcome::Skipped(SkipReason::Disconnected),
                    };
                    record(&mut out, theorem, outcome);
                }
            }
            TheoremId::T35 => {
                for v in 0..g.order() {
                    let outcome = match &base {
                        Some(b) => check_odot_with(g, b, v)?,
                        None => CheckOutcome::Skipped(SkipReason::Disconnected),
                    };
                    record(&mut out, theorem, outcome);
                }
            }
            TheoremId::C32 => {
                for &(u, w) in &edges {
                    let outcome = match &base {
                        Some(b) if g.order() >= 3 && !bridge_set.contains(&(u, w)) => {
                            check_corollary_edge_with(g, b, u, w)?
                        }
                        Some(_) => CheckOutcome::Skipped(if g.order() < 3 {
                            SkipReason::TooSmall
                        } else {
                            SkipReason::BridgeEdge
                        }),
                        None => CheckOutcome::Skipped(SkipReason::Disconnected),
                    };
                    record(&mut out, theorem, outcome);
                }
            }
            TheoremId::C34 => {
                for v in 0..g.order() {
                    let outcome = match &base {
                        Some(b) if g.order() >= 3 && !cut_set.contains(&v) => {
                            check_corollary_vertex_with(g, b, v)?
                        }
                        Some(_) => CheckOutcome::Skipped(if g.order() < 3 {
                            SkipReason::TooSmall
                        } else {
                            SkipReason::CutVertex
                        }),
                        None => CheckOutcome::Skipped(SkipReason::Disconnected),
                    };
                    record(&mut out, theorem, outcome);
                }
            }
            TheoremId::Henning => {
                let outcome = match &base {
                    Some(b) => check_henning_with(g, b)?,
                    None if g.order() < 2 => CheckOutcome::Skipped(SkipReason::TooSmall),
                    // the universes are connected; a disconnected graph fed
                    // directly still gets the honest reason
                    None if has_isolated_vertex(g) => {
                        CheckOutcome::Skipped(SkipReason::IsolatedVertex)
                    }
                    None => check_henning(g)?,
                };
                record(&mut out, theorem, outcome);
            }
        }
    }
    Ok(out)
}

/// Runs every selected check over every connected graph of order
/// `1..=n_max` and every admissible operand. Deterministic: reports are
/// reduced in enumeration order regardless of worker count.
pub fn verify_exhaustive(options: &VerifyOptions) -> Result<VerifySummary> {
    if options.n_max > VERIFY_CAP {
        return Err(Error::ResourceGuard {
            what: "exhaustive verification",
            order: options.n_max,
            cap: VERIFY_CAP,
        });
    }
    if options.n_max == 0 {
        return Err(Error::InvalidParameter("n_max must be at least 1".into()));
    }
    let theorems = if options.theorems.is_empty() {
        ALL_THEOREMS.to_vec()
    } else {
        let mut seen = Vec::new();
        for &t in ALL_THEOREMS.iter() {
            if options.theorems.contains(&t) {
                seen.push(t);
            }
        }
        seen
    };

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(options.workers)
        .build()
        .map_err(|e| Error::InvalidParameter(format!("worker pool: {e}")))?;

    let mut stats: Vec<TheoremStats> = theorems.iter().map(|_| TheoremStats::default()).collect();

    const CHUNK: usize = 1024;
    for n in 1..=options.n_max {
        let mut stream: Box<dyn Iterator<Item = Graph>> = if options.dedup {
            Box::new(connected_graphs_dedup(n)?)
        } else {
            Box::new(connected_graphs(n)?)
        };
        loop {
            let chunk: Vec<Graph> = stream.by_ref().take(CHUNK).collect();
            if chunk.is_empty() {
                break;
            }
            let results: Vec<Result<PerGraph>> = pool.install(|| {
                use rayon::prelude::*;
                chunk
                    .par_iter()
                    .map(|g| process_graph(g, &theorems))
                    .collect()
            });
            for per_graph in results {
                let per_graph = per_graph?;
                for (slot, &theorem) in theorems.iter().enumerate() {
                    let idx = theorem.index();
                    let s = &mut stats[slot];
                    s.checked += per_graph.counts[idx][0];
                    s.held += per_graph.counts[idx][1];
                    s.skipped += per_graph.counts[idx][2];
                    s.tight_low += per_graph.counts[idx][3];
                    s.tight_high += per_graph.counts[idx][4];
                }
                for (idx, is_high, record) in per_graph.tight_records {
                    let slot = theorems.iter().position(|t| t.index() == idx).unwrap();
                    let s = &mut stats[slot];
                    let target = if is_high {
                        &mut s.first_tight_high
                    } else {
                        &mut s.first_tight_low
                    };
                    if target.is_none() {
                        *target = Some(record);
                    }
                }
                for (idx, record) in per_graph.violations {
                    let slot = theorems.iter().position(|t| t.index() == idx).unwrap();
                    stats[slot].counterexamples.push(record);
                }
            }
        }
    }

    Ok(VerifySummary {
        n_max: options.n_max,
        theorems,
        stats,
    })
}

// ---------------------------------------------------------------------------
// Gap growth tables
// ---------------------------------------------------------------------------

/// Which unbounded-gap statement a table illustrates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GapKind {
    /// Pendant-apex gadget: |χdt(G) - χdt(G - apex)| grows without bound.
    T25,
    /// χdt(K_n) / χdt(K_n ⊙ v) = n/2 grows without bound.
    C36,
}

/// One row of a gap-growth table. Formula columns are exact; solver columns
/// are present for the orders the experiment re-solves.
#[derive(Debug, Clone)]
pub struct GapRow {
    pub n: usize,
    pub base_value: u32,
    pub operated_value: u32,
    /// |difference| for [`GapKind::T25`], ratio for [`GapKind::C36`].
    pub gap: HalfInt,
    pub solver_base: Option<u32>,
    pub solver_operated: Option<u32>,
}

/// Builds the gap table for `n` in `from..=to`, re-solving rows with
/// `n <= solver_max` exactly.
pub fn gap_growth(kind: GapKind, from: usize, to: usize, solver_max: usize) -> Result<Vec<GapRow>> {
    let min = match kind {
        GapKind::T25 => 2,
        GapKind::C36 => 3,
    };
    if from < min || from > to {
        return Err(Error::InvalidParameter(format!(
            "gap range must satisfy {min} <= from <= to, got {from}..={to}"
        )));
    }
    let mut rows = Vec::with_capacity(to - from + 1);
    for n in from..=to {
        let row = match kind {
            GapKind::T25 => {
                let base = chi_dt_gadget(n)?.value;
                let operated = chi_dt_corona(CoronaKind::Path, n)?.value;
                let gap = HalfInt::from_int((base as i64 - operated as i64).abs());
                let (solver_base, solver_operated) = if n <= solver_max {
                    let g = crate::family::build_family(crate::family::FamilySpec::Theorem25Gadget(n))?;
                    let stripped = ops::remove_vertex(&g, crate::family::gadget_apex(n))?;
                    (
                        Some(td_chromatic_number(&g)?.value),
                        Some(td_chromatic_number(&stripped)?.value),
                    )
                } else {
                    (None, None)
                };
                GapRow {
                    n,
                    base_value: base,
                    operated_value: operated,
                    gap,
                    solver_base,
                    solver_operated,
                }
            }
            GapKind::C36 => {
                let base = n as u32;
                let operated = 2u32;
                let gap = HalfInt::halves(n as i64);
                let (solver_base, solver_operated) = if n <= solver_max {
                    let g = crate::family::build_family(crate::family::FamilySpec::Complete(n))?;
                    let opened = ops::odot(&g, 0)?;
                    (
                        Some(td_chromatic_number(&g)?.value),
                        Some(td_chromatic_number(&opened)?.value),
                    )
                } else {
                    (None, None)
                };
                GapRow {
                    n,
                    base_value: base,
                    operated_value: operated,
                    gap,
                    solver_base,
                    solver_operated,
                }
            }
        };
        rows.push(row);
    }
    Ok(rows)
}

/// CSV for a gap table.
pub fn gap_csv(kind: GapKind, rows: &[GapRow]) -> String {
    let mut out = match kind {
        GapKind::T25 => "n,chi_dt_gadget,chi_dt_minus_apex,gap,solver_gadget,solver_minus_apex\n",
        GapKind::C36 => "n,chi_dt_complete,chi_dt_odot,ratio,solver_complete,solver_odot\n",
    }
    .to_string();
    let cell = |v: Option<u32>| v.map(|x| x.to_string()).unwrap_or_default();
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{}\n",
            r.n,
            r.base_value,
            r.operated_value,
            r.gap,
            cell(r.solver_base),
            cell(r.solver_operated)
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{build_family, FamilySpec};

    fn fam(spec: FamilySpec) -> Graph {
        build_family(spec).unwrap()
    }

    fn report(outcome: CheckOutcome) -> BoundReport {
        match outcome {
            CheckOutcome::Checked(r) => r,
            CheckOutcome::Skipped(reason) => panic!("unexpected skip: {reason}"),
        }
    }

    #[test]
    fn half_int_display() {
        assert_eq!(HalfInt::from_int(3).to_string(), "3");
        assert_eq!(HalfInt::halves(7).to_string(), "7/2");
        assert_eq!(HalfInt::halves(-1).to_string(), "-1/2");
        assert!(HalfInt::halves(7) < HalfInt::from_int(4));
    }

    #[test]
    fn k3_edge_removal_is_tight_low() {
        let k3 = fam(FamilySpec::Complete(3));
        let r = report(check_edge_removal(&k3, 0, 1).unwrap());
        assert!(r.holds && r.tight_low && !r.tight_high);
        assert_eq!(r.value, HalfInt::from_int(2));
    }

    #[test]
    fn c4_edge_removal_within_bounds() {
        let c4 = fam(FamilySpec::Cycle(4));
        let r = report(check_edge_removal(&c4, 0, 1).unwrap());
        assert!(r.holds);
        assert_eq!(r.value, HalfInt::from_int(3)); // χdt(P4)
        assert!(!r.tight_low && !r.tight_high);
    }

    #[test]
    fn bridge_edges_are_skipped() {
        let p4 = fam(FamilySpec::Path(4));
        assert!(matches!(
            check_edge_removal(&p4, 1, 2).unwrap(),
            CheckOutcome::Skipped(SkipReason::BridgeEdge)
        ));
    }

    #[test]
    fn c10_vertex_removal_within_bounds() {
        // χdt(C10) = 7 and χdt(P9) = 6: removal drops the value by one,
        // inside [χdt(G)-2, χdt(G)+deg(v)-1] but away from both endpoints.
        let c10 = fam(FamilySpec::Cycle(10));
        let r = report(check_vertex_removal(&c10, 0).unwrap());
        assert!(r.holds);
        assert_eq!(r.lhs, HalfInt::from_int(5));
        assert_eq!(r.value, HalfInt::from_int(6));
        assert_eq!(r.rhs, HalfInt::from_int(8));
        assert!(!r.tight_low && !r.tight_high);
    }

    #[test]
    fn k2_vertex_removal_skipped() {
        let k2 = fam(FamilySpec::Complete(2));
        assert!(matches!(
            check_vertex_removal(&k2, 0).unwrap(),
            CheckOutcome::Skipped(SkipReason::TooSmall)
        ));
    }

    #[test]
    fn contraction_sharpness_on_cycles() {
        let c4 = fam(FamilySpec::Cycle(4));
        let r = report(check_edge_contraction(&c4, 0, 1).unwrap());
        assert!(r.holds && r.tight_high); // χdt(C3) = 3 = 2 + 1

        let c5 = fam(FamilySpec::Cycle(5));
        let r = report(check_edge_contraction(&c5, 0, 1).unwrap());
        assert!(r.holds && r.tight_low); // χdt(C4) = 2 = 4 - 2
    }

    #[test]
    fn vertex_contraction_sharpness() {
        let k24 = fam(FamilySpec::CompleteBipartite(2, 4));
        let r = report(check_vertex_contraction(&k24, 0).unwrap());
        assert!(r.holds && r.tight_high); // χdt(K5) = 5 = 2 + 4 - 1

        let c5 = fam(FamilySpec::Cycle(5));
        let r = report(check_vertex_contraction(&c5, 2).unwrap());
        assert!(r.holds && r.tight_low);
    }

    #[test]
    fn odot_sharpness_on_complete_graphs() {
        let k6 = fam(FamilySpec::Complete(6));
        let r = report(check_odot(&k6, 0).unwrap());
        assert!(r.holds && r.tight_low); // χdt(S6) = 2 = 6 - 5 + 1

        let p5 = fam(FamilySpec::Path(5));
        let r = report(check_odot(&p5, 2).unwrap());
        assert!(r.holds);
        assert_eq!(r.value, r.values["chi_dt_g"].parse::<i64>().map(HalfInt::from_int).unwrap());
    }

    #[test]
    fn corollary_examples() {
        let c5 = fam(FamilySpec::Cycle(5));
        let r = report(check_corollaries(&c5, Operand::Edge(0, 1)).unwrap());
        assert!(r.holds);

        let c10 = fam(FamilySpec::Cycle(10));
        let r = report(check_corollaries(&c10, Operand::Vertex(3)).unwrap());
        assert!(r.holds);

        let p4 = fam(FamilySpec::Path(4));
        assert!(matches!(
            check_corollaries(&p4, Operand::Edge(0, 1)).unwrap(),
            CheckOutcome::Skipped(SkipReason::BridgeEdge)
        ));
    }

    #[test]
    fn henning_examples() {
        let k5 = fam(FamilySpec::Complete(5));
        let r = report(check_henning(&k5).unwrap());
        assert!(r.holds);
        assert_eq!(r.lhs, HalfInt::from_int(2));

        let c4 = fam(FamilySpec::Cycle(4));
        let r = report(check_henning(&c4).unwrap());
        assert!(r.holds && r.tight_low);
    }

    #[test]
    fn verify_small_has_zero_violations() {
        let summary = verify_exhaustive(&VerifyOptions {
            n_max: 4,
            ..Default::default()
        })
        .unwrap();
        assert_eq!(summary.violations(), 0);
        for s in &summary.stats {
            assert_eq!(s.checked, s.held);
        }
    }

    #[test]
    fn verify_is_deterministic_across_worker_counts() {
        let run = |workers| {
            verify_exhaustive(&VerifyOptions {
                n_max: 4,
                workers,
                ..Default::default()
            })
            .unwrap()
            .to_json()
        };
        assert_eq!(run(1), run(2));
    }

    #[test]
    fn verify_cap() {
        let options = VerifyOptions {
            n_max: 8,
            ..Default::default()
        };
        assert!(matches!(
            verify_exhaustive(&options),
            Err(Error::ResourceGuard { .. })
        ));
    }

    #[test]
    fn gap_tables() {
        let rows = gap_growth(GapKind::T25, 2, 12, 3).unwrap();
        let at = |n: usize| rows.iter().find(|r| r.n == n).unwrap();
        assert_eq!(at(9).gap, HalfInt::from_int(2));
        assert_eq!(at(12).gap, HalfInt::from_int(3));
        assert_eq!(at(3).solver_base, Some(4));
        assert_eq!(at(3).solver_operated, Some(4));

        let rows = gap_growth(GapKind::C36, 3, 8, 4).unwrap();
        let at = |n: usize| rows.iter().find(|r| r.n == n).unwrap();
        assert_eq!(at(8).gap, HalfInt::from_int(4));
        assert_eq!(at(4).solver_base, Some(4));
        assert_eq!(at(4).solver_operated, Some(2));
        let csv = gap_csv(GapKind::C36, &rows);
        assert!(csv.contains("3,3,2,3/2,"));
    }
}
