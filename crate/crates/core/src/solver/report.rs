use std::str::FromStr;
use std::time::Instant;

use serde::Serialize;

use super::{compute_a, compute_ab, compute_phi, probe_conjecture, ConjectureProbe, SearchBudget, SolveError, Solved};
use crate::coloring::Coloring;
use crate::graph::{Girth, Graph};
use crate::graph6::emit_graph6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Target {
    A,
    Phi,
    Ab,
    Conjecture,
}

impl FromStr for Target {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "a" => Ok(Target::A),
            "phi" => Ok(Target::Phi),
            "ab" => Ok(Target::Ab),
            "conjecture" => Ok(Target::Conjecture),
            _ => Err(format!("unknown target {s:?} (expected A, phi, Ab or conjecture)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ValueStatus {
    Exact,
    Unknown,
}

/// One invariant: exact with a witness, or bounds when the budget ran out.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Value {
    pub status: ValueStatus,
    pub value: Option<usize>,
    pub lower: Option<usize>,
    pub upper: Option<usize>,
    pub witness: Option<Coloring>,
    pub nodes: u64,
}

impl Value {
    fn from_result(r: Result<Solved, SolveError>) -> Result<Value, SolveError> {
        match r {
            Ok(s) => Ok(Value {
                status: ValueStatus::Exact,
                value: Some(s.value),
                lower: Some(s.value),
                upper: Some(s.value),
                witness: Some(s.witness),
                nodes: s.nodes,
            }),
            Err(SolveError::BudgetExhausted(b)) => Ok(Value {
                status: ValueStatus::Unknown,
                value: None,
                lower: b.lower,
                upper: Some(b.upper),
                witness: b.witness,
                nodes: b.nodes,
            }),
            Err(e) => Err(e),
        }
    }

    pub fn is_exact(&self) -> bool {
        self.status == ValueStatus::Exact
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SolveReport {
    pub graph6: Option<String>,
    pub n: usize,
    pub m: usize,
    pub girth: Girth,
    #[serde(rename = "A", skip_serializing_if = "Option::is_none")]
    pub a: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub phi: Option<Value>,
    #[serde(rename = "Ab", skip_serializing_if = "Option::is_none")]
    pub ab: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub conjecture: Option<ConjectureProbe>,
    pub nodes: u64,
    pub millis: u64,
}

impl SolveReport {
    /// True when some requested value is not exact.
    pub fn budget_exhausted(&self) -> bool {
        [&self.a, &self.phi, &self.ab].into_iter().flatten().any(|v| !v.is_exact())
    }
}

/// Computes the requested invariants. Each one gets its own copy of `budget`.
/// Fails only if an exact result contradicts a known bound.
pub fn solve(g: &Graph, targets: &[Target], budget: &SearchBudget) -> Result<SolveReport, SolveError> {
    let start = Instant::now();
    let want = |t| targets.contains(&t);
    let a = want(Target::A).then(|| Value::from_result(compute_a(g, budget))).transpose()?;
    let phi = want(Target::Phi).then(|| Value::from_result(compute_phi(g, budget))).transpose()?;
    let ab = want(Target::Ab).then(|| Value::from_result(compute_ab(g, budget))).transpose()?;
    let conjecture = want(Target::Conjecture).then(|| probe_conjecture(g, budget));
    let nodes = [&a, &phi, &ab].into_iter().flatten().map(|v| v.nodes).sum();
    let report = SolveReport {
        graph6: emit_graph6(g).ok(),
        n: g.order(),
        m: g.size(),
        girth: g.girth(),
        a,
        phi,
        ab,
        conjecture,
        nodes,
        millis: start.elapsed().as_millis() as u64,
    };
    check_bounds(g, &report)?;
    Ok(report)
}

fn check_bounds(g: &Graph, r: &SolveReport) -> Result<(), SolveError> {
    let exact = |v: &Option<Value>| v.as_ref().and_then(|v| v.value);
    let (a, ab) = (exact(&r.a), exact(&r.ab));
    if let (Some(a), Some(ab)) = (a, ab) {
        if a > ab {
            return Err(SolveError::Invariant(format!("A = {a} exceeds Ab = {ab}")));
        }
    }
    if g.is_cubic() {
        if let Some(a) = a.filter(|&a| a > 4) {
            return Err(SolveError::Invariant(format!("cubic graph with A = {a} > 4")));
        }
        if let Some(ab) = ab.filter(|&ab| ab > 5) {
            return Err(SolveError::Invariant(format!("cubic graph with Ab = {ab} > 5")));
        }
    }
    Ok(())
}
