use serde::{Deserialize, Serialize};

use super::{require_acyclic, Color, Coloring, ColoringError};
use crate::forest::PairForests;
use crate::graph::{Graph, Vertex};

/// Replacement colors `ℓ_v` for every vertex of one color class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecolorWitness {
    pub class_color: Color,
    /// `(v, ℓ_v)` sorted by vertex.
    pub replacement: Vec<(Vertex, Color)>,
}

impl RecolorWitness {
    /// The coloring after the step. The palette is unchanged; the class of
    /// `class_color` becomes empty.
    pub fn apply(&self, c: &Coloring) -> Result<Coloring, ColoringError> {
        let mut colors = c.as_slice().to_vec();
        for &(v, l) in &self.replacement {
            if v >= colors.len() {
                return Err(ColoringError::NoSuchVertex(v));
            }
            colors[v] = l;
        }
        Coloring::new(c.palette(), colors)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "reason", rename_all = "snake_case")]
pub enum StepRefusal {
    EmptyClass,
    /// This vertex sees every color in its closed neighborhood.
    BVertexPresent { vertex: Vertex },
    AllAssignmentsCyclic,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StepResult {
    Step(RecolorWitness),
    Refused(StepRefusal),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MinimalCheck {
    Minimal,
    /// First color class (ascending) that admits an acyclic recoloring step.
    Step(RecolorWitness),
}

impl MinimalCheck {
    pub fn is_minimal(&self) -> bool {
        matches!(self, MinimalCheck::Minimal)
    }
}

/// Exact search for an acyclic recoloring step removing class `i`.
pub fn try_acyclic_recoloring_step(
    g: &Graph,
    c: &Coloring,
    i: Color,
) -> Result<StepResult, ColoringError> {
    require_acyclic(g, c)?;
    if i == 0 || i > c.palette() {
        return Err(ColoringError::NoSuchColor(i));
    }
    let mut forests = PairForests::from_colors(g, c.palette() as usize, c.as_slice())
        .expect("acyclicity was checked");
    Ok(step_result(g, c, &mut forests, i))
}

/// No used color class admits an acyclic recoloring step.
pub fn is_ab_minimal(g: &Graph, c: &Coloring) -> Result<MinimalCheck, ColoringError> {
    require_acyclic(g, c)?;
    let mut forests = PairForests::from_colors(g, c.palette() as usize, c.as_slice())
        .expect("acyclicity was checked");
    for i in c.used_colors() {
        if let StepResult::Step(w) = step_result(g, c, &mut forests, i) {
            return Ok(MinimalCheck::Step(w));
        }
    }
    Ok(MinimalCheck::Minimal)
}

fn step_result(g: &Graph, c: &Coloring, forests: &mut PairForests, i: Color) -> StepResult {
    let class = c.class(i);
    match class_step(g, c.as_slice(), c.palette(), forests, &class) {
        Ok(replacement) => StepResult::Step(RecolorWitness { class_color: i, replacement }),
        Err(refusal) => StepResult::Refused(refusal),
    }
}

/// Backtracking over `ℓ_v ∈ missing(v)` for the vertices of `class`, with
/// forward checking: after each assignment every unassigned vertex drops
/// the candidates that would now close a bi-colored cycle. Blocking is
/// monotone (assignments only add vertices to forests of colors other than
/// the class color), so a dropped candidate never comes back.
///
/// `forests` must describe the acyclic coloring `colors`; it is restored
/// before returning.
pub(crate) fn class_step(
    g: &Graph,
    colors: &[Color],
    k: Color,
    forests: &mut PairForests,
    class: &[Vertex],
) -> Result<Vec<(Vertex, Color)>, StepRefusal> {
    if class.is_empty() {
        return Err(StepRefusal::EmptyClass);
    }
    let mut used = vec![false; k as usize + 1];
    for &c in colors {
        used[c as usize] = true;
    }
    let coloring = ColorsView { k, colors, used: &used };
    let mut candidates = Vec::with_capacity(class.len());
    for &v in class {
        let miss = coloring.missing(g, v);
        if miss.is_empty() {
            return Err(StepRefusal::BVertexPresent { vertex: v });
        }
        candidates.push(miss);
    }
    let mark = forests.checkpoint();
    let mut assignment = vec![0; class.len()];
    let found = assign(g, colors, forests, class, &candidates, &mut assignment);
    forests.rollback(mark);
    if found {
        let mut out: Vec<(Vertex, Color)> = class.iter().copied().zip(assignment).collect();
        out.sort_unstable();
        Ok(out)
    } else {
        Err(StepRefusal::AllAssignmentsCyclic)
    }
}

struct ColorsView<'a> {
    k: Color,
    colors: &'a [Color],
    used: &'a [bool],
}

impl ColorsView<'_> {
    /// Used colors absent from `N[v]`. An unused palette color would only
    /// rename the class, so it is not a candidate.
    fn missing(&self, g: &Graph, v: Vertex) -> Vec<Color> {
        let mut present = 0u128;
        let mut big = Vec::new();
        for c in std::iter::once(self.colors[v]).chain(g.neighbors(v).iter().map(|&u| self.colors[u])) {
            if c < 128 {
                present |= 1 << c;
            } else {
                big.push(c);
            }
        }
        (1..=self.k)
            .filter(|&j| self.used[j as usize])
            .filter(|&j| if j < 128 { present & (1 << j) == 0 } else { !big.contains(&j) })
            .collect()
    }
}

fn assign(
    g: &Graph,
    colors: &[Color],
    forests: &mut PairForests,
    class: &[Vertex],
    candidates: &[Vec<Color>],
    assignment: &mut [Color],
) -> bool {
    // pick the unassigned vertex with the fewest live candidates
    let mut best: Option<(usize, Vec<Color>)> = None;
    for (idx, &v) in class.iter().enumerate() {
        if assignment[idx] != 0 {
            continue;
        }
        let live: Vec<Color> = candidates[idx]
            .iter()
            .copied()
            .filter(|&l| !forests.closes_cycle(g, colors, v, l))
            .collect();
        if live.is_empty() {
            return false;
        }
        if best.as_ref().is_none_or(|(_, b)| live.len() < b.len()) {
            best = Some((idx, live));
        }
    }
    let Some((idx, live)) = best else {
        return true;
    };
    let v = class[idx];
    for l in live {
        let mark = forests.checkpoint();
        forests.insert(g, colors, v, l);
        assignment[idx] = l;
        if assign(g, colors, forests, class, candidates, assignment) {
            return true;
        }
        assignment[idx] = 0;
        forests.rollback(mark);
    }
    false
}
