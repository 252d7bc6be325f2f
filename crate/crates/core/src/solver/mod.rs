//! Exact solvers for `A(G)`, `φ(G)` and `A_b(G)`, the de-cycler, and the
//! conjecture probe.
//!
//! All searches are plain depth-first backtracking in [`search_order`] with
//! color ids introduced in increasing order, so results are deterministic.

mod decycle;
mod report;
mod search;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coloring::{is_ab_minimal, Color, Coloring, ColoringError, MinimalCheck};
use crate::forest::{PairForests, UNCOLORED};
use crate::graph::{Girth, Graph, Vertex};

pub use decycle::{
    cycle_measure, decycle_4coloring, decycle_4coloring_traced, DecycleRule, DecycleStep, DecycleTrace,
};
pub use report::{solve, Target, Value, ValueStatus, SolveReport};
pub(crate) use search::search_order;
use search::{Found, Leaf, Meter, Spec};

/// Limits for one call. `None` means unlimited.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchBudget {
    pub max_nodes: Option<u64>,
    pub max_millis: Option<u64>,
    /// Seeds the randomized starts of [`find_acyclic_b4`]; exact searches ignore it.
    pub seed: Option<u64>,
}

impl SearchBudget {
    pub fn unlimited() -> Self {
        SearchBudget::default()
    }

    pub fn nodes(max: u64) -> Self {
        SearchBudget { max_nodes: Some(max), ..Self::default() }
    }
}

/// What was proven before the budget ran out. For `A` the witness attains
/// `upper`; for `φ` and `A_b` it attains `lower`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Bounds {
    pub lower: Option<usize>,
    pub upper: usize,
    pub witness: Option<Coloring>,
    pub nodes: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("search budget exhausted after {} nodes (bounds {:?}..={})", .0.nodes, .0.lower, .0.upper)]
    BudgetExhausted(Box<Bounds>),
    #[error("the graph is not cubic")]
    NotCubic,
    #[error("coloring uses color {found}; at most {max} allowed")]
    TooManyColors { max: Color, found: Color },
    #[error("no local move lowers the bi-colored cycle measure")]
    Stuck,
    #[error("invariant violated: {0}")]
    Invariant(String),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
}

/// An exact value with a witness coloring.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Solved {
    pub value: usize,
    pub witness: Coloring,
    pub nodes: u64,
}

fn exhausted(lower: Option<usize>, upper: usize, witness: Option<Coloring>, meter: &Meter) -> SolveError {
    SolveError::BudgetExhausted(Box::new(Bounds { lower, upper, witness, nodes: meter.nodes }))
}

fn coloring(k: usize, colors: Vec<Color>) -> Coloring {
    Coloring::new(k as Color, colors).expect("search colors are in range")
}

/// Smallest available color keeping the partial coloring proper and acyclic.
pub fn greedy_acyclic(g: &Graph, order: &[Vertex]) -> Coloring {
    let n = g.order();
    let mut colors = vec![UNCOLORED; n];
    let mut forests = PairForests::new(n, n);
    for &v in order {
        let c = (1..=n as Color)
            .find(|&c| {
                g.neighbors(v).iter().all(|&u| colors[u] != c) && !forests.closes_cycle(g, &colors, v, c)
            })
            .expect("a fresh color never closes a cycle");
        forests.insert(g, &colors, v, c);
        colors[v] = c;
    }
    Coloring::from_colors(colors).unwrap()
}

/// Acyclic chromatic number.
pub fn compute_a(g: &Graph, budget: &SearchBudget) -> Result<Solved, SolveError> {
    let mut meter = Meter::new(budget);
    let greedy = greedy_acyclic(g, &search_order(g));
    let upper = greedy.used_count();
    for k in 1..upper {
        let spec = Spec { k: k as Color, acyclic: true, exact_k: false, symmetry: true, leaf: Leaf::Any };
        match search::find(g, spec, &mut meter) {
            Found::Coloring(c) => return Ok(Solved { value: k, witness: coloring(k, c), nodes: meter.nodes }),
            Found::None => {}
            Found::Aborted => return Err(exhausted(Some(k), upper, Some(greedy), &meter)),
        }
    }
    Ok(Solved { value: upper, witness: greedy, nodes: meter.nodes })
}

/// The usual b-chromatic upper bound: the largest `m` such that at least `m`
/// vertices have degree at least `m - 1`.
pub fn m_degree(g: &Graph) -> usize {
    let mut degrees: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    degrees.sort_unstable_by(|a, b| b.cmp(a));
    (1..=g.order()).filter(|&m| degrees[m - 1] + 1 >= m).max().unwrap_or(1)
}

/// b-chromatic number.
pub fn compute_phi(g: &Graph, budget: &SearchBudget) -> Result<Solved, SolveError> {
    let mut meter = Meter::new(budget);
    let upper = m_degree(g);
    for k in (1..=upper).rev() {
        let spec = Spec { k: k as Color, acyclic: false, exact_k: true, symmetry: true, leaf: Leaf::BColoring };
        match search::find(g, spec, &mut meter) {
            Found::Coloring(c) => return Ok(Solved { value: k, witness: coloring(k, c), nodes: meter.nodes }),
            Found::None => {}
            Found::Aborted => return Err(exhausted(None, k, None, &meter)),
        }
    }
    unreachable!("a proper coloring with one class per vertex of maximum degree always exists")
}

/// Upper bound on `A_b`: `min(n, ⌊Δ²/2⌋ + 1)`.
pub fn ab_upper_bound(g: &Graph) -> usize {
    let d = g.max_degree();
    g.order().min(d * d / 2 + 1)
}

/// Acyclic b-chromatic number.
pub fn compute_ab(g: &Graph, budget: &SearchBudget) -> Result<Solved, SolveError> {
    compute_ab_with(g, budget, true)
}

/// [`compute_ab`] with color-symmetry breaking optionally switched off.
pub fn compute_ab_with(g: &Graph, budget: &SearchBudget, symmetry: bool) -> Result<Solved, SolveError> {
    let mut meter = Meter::new(budget);
    let upper = ab_upper_bound(g);
    // a minimal coloring reached by recoloring steps is a verified lower bound
    let seed = recoloring_algorithm(g, &greedy_acyclic(g, &search_order(g)));
    let lower = seed.used_count();
    if lower == upper {
        return Ok(Solved { value: lower, witness: seed, nodes: meter.nodes });
    }
    for k in (lower + 1..=upper).rev() {
        let spec = Spec { k: k as Color, acyclic: true, exact_k: true, symmetry, leaf: Leaf::Minimal };
        match search::find(g, spec, &mut meter) {
            Found::Coloring(c) => return Ok(Solved { value: k, witness: coloring(k, c), nodes: meter.nodes }),
            Found::None => {}
            Found::Aborted => return Err(exhausted(Some(lower), k, Some(seed), &meter)),
        }
    }
    Ok(Solved { value: lower, witness: seed, nodes: meter.nodes })
}

/// Applies acyclic recoloring steps (first admissible class, ascending)
/// until the coloring is minimal; the result is compacted to `1..=used`.
pub fn recoloring_algorithm(g: &Graph, c: &Coloring) -> Coloring {
    let mut cur = c.compacted();
    while let MinimalCheck::Step(w) = is_ab_minimal(g, &cur).expect("input must be acyclic") {
        cur = w.apply(&cur).unwrap().compacted();
    }
    cur
}

/// A ⊳ₐ-minimal acyclic coloring with exactly four colors, or `None` if
/// exhaustive search proves there is none.
pub fn find_acyclic_b4(g: &Graph, budget: &SearchBudget) -> Result<Option<Coloring>, SolveError> {
    if !g.is_cubic() {
        return Err(SolveError::NotCubic);
    }
    let mut meter = Meter::new(budget);
    let mut rng = ChaCha8Rng::seed_from_u64(budget.seed.unwrap_or(0));
    let mut order = search_order(g);
    for attempt in 0..32 {
        if attempt > 0 {
            order.shuffle(&mut rng);
        }
        if !meter.tick() {
            return Err(exhausted(None, 4, None, &meter));
        }
        if let Some(c) = seeded_b4(g, &order) {
            return Ok(Some(c));
        }
    }
    let spec = Spec { k: 4, acyclic: true, exact_k: true, symmetry: true, leaf: Leaf::Minimal };
    match search::find(g, spec, &mut meter) {
        Found::Coloring(c) => Ok(Some(coloring(4, c))),
        Found::None => Ok(None),
        Found::Aborted => Err(exhausted(None, 4, None, &meter)),
    }
}

/// Greedy proper coloring along `order`, de-cycled, then checked.
fn seeded_b4(g: &Graph, order: &[Vertex]) -> Option<Coloring> {
    let mut colors = vec![UNCOLORED; g.order()];
    for &v in order {
        colors[v] = (1..=4).find(|&c| g.neighbors(v).iter().all(|&u| colors[u] != c))?;
    }
    let proper = Coloring::new(4, colors).ok()?;
    let out = decycle_4coloring(g, &proper).ok()?;
    (out.used_count() == 4 && is_ab_minimal(g, &out).ok()?.is_minimal()).then_some(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ConjectureVerdict {
    /// `g <= 2φ`: nothing to check.
    Vacuous,
    /// `g > 2φ` and `A_b >= φ`.
    Holds,
    /// `g > 2φ` and `A_b < φ`, with both values exact.
    Counterexample,
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConjectureProbe {
    pub girth: Girth,
    pub phi: Option<usize>,
    pub ab: Option<usize>,
    pub hypothesis: Option<bool>,
    pub verdict: ConjectureVerdict,
}

/// Checks whether `g(G) > 2φ(G)` implies `A_b(G) >= φ(G)` on this graph.
pub fn probe_conjecture(g: &Graph, budget: &SearchBudget) -> ConjectureProbe {
    let girth = g.girth();
    let phi = compute_phi(g, budget).ok().map(|s| s.value);
    let hypothesis = phi.map(|p| match girth {
        Girth::Finite(len) => len > 2 * p,
        Girth::Acyclic => true,
    });
    let mut probe = ConjectureProbe { girth, phi, ab: None, hypothesis, verdict: ConjectureVerdict::Inconclusive };
    match hypothesis {
        None => {}
        Some(false) => probe.verdict = ConjectureVerdict::Vacuous,
        Some(true) => {
            probe.ab = compute_ab(g, budget).ok().map(|s| s.value);
            probe.verdict = match (probe.ab, phi) {
                (Some(ab), Some(p)) if ab >= p => ConjectureVerdict::Holds,
                (Some(_), Some(_)) => ConjectureVerdict::Counterexample,
                _ => ConjectureVerdict::Inconclusive,
            };
        }
    }
    probe
}

#[cfg(test)]
mod tests;
