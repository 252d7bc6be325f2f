//! Turning a proper 4-coloring of a cubic graph into an acyclic one.
//!
//! Each round picks the shortest bi-colored cycle (smallest vertex id on
//! ties) and tries the local rules below in order, accepting the first move
//! that keeps the coloring proper and lowers [`cycle_measure`]. If no rule
//! move qualifies, single-vertex and then adjacent-pair recolorings are tried.

use serde::Serialize;

use crate::coloring::{is_proper, Color, Coloring, ColoringError, ProperCheck};
use crate::graph::{CycleWitness, Graph, Vertex};

use super::SolveError;

/// Which rule produced an accepted move.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DecycleRule {
    /// `u_j` carries a cycle color and `u_{j-1}`, `u_{j+1}` share a color.
    SharedOuter,
    /// `u_{j-1}` and `u_{j+1}` carry the two non-cycle colors.
    SplitOuter,
    /// No `u_i` carries a cycle color: recolor one cycle vertex.
    OffCycle,
    /// Follow-up of [`OffCycle`](Self::OffCycle) when it closes a cycle through `u_{p-1} v_{p-1} v_p v_{p+1} u_{p+1}`.
    OffCycleRepair,
    SingleVertex,
    AdjacentPair,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DecycleStep {
    pub cycle: CycleWitness,
    pub rule: DecycleRule,
    pub recolored: Vec<(Vertex, Color)>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct DecycleTrace {
    /// Measure before the first step and after every step.
    pub measures: Vec<usize>,
    pub steps: Vec<DecycleStep>,
}

pub fn decycle_4coloring(g: &Graph, c: &Coloring) -> Result<Coloring, SolveError> {
    decycle_4coloring_traced(g, c).map(|(out, _)| out)
}

pub fn decycle_4coloring_traced(g: &Graph, c: &Coloring) -> Result<(Coloring, DecycleTrace), SolveError> {
    if !g.is_cubic() {
        return Err(ColoringError::NotCubic.into());
    }
    c.check_size(g)?;
    if let ProperCheck::Conflict { edge } = is_proper(g, c)? {
        return Err(ColoringError::Improper(edge.0, edge.1).into());
    }
    if c.as_slice().iter().any(|&x| x > 4) {
        return Err(SolveError::TooManyColors { max: 4, found: c.palette() });
    }
    let mut colors = c.as_slice().to_vec();
    let mut trace = DecycleTrace { measures: vec![cycle_measure(g, &colors)], steps: Vec::new() };
    while let Some(cycle) = shortest_bicolored_cycle(g, &colors) {
        let before = *trace.measures.last().unwrap();
        let (rule, moves) = choose_move(g, &colors, &cycle, before).ok_or(SolveError::Stuck)?;
        for &(v, x) in &moves {
            colors[v] = x;
        }
        trace.measures.push(cycle_measure(g, &colors));
        trace.steps.push(DecycleStep { cycle, rule, recolored: moves });
    }
    let out = Coloring::new(c.palette().max(colors.iter().copied().max().unwrap_or(1)), colors)?;
    Ok((out, trace))
}

/// Sum over color pairs of the cycle rank `m - v + components` of the
/// subgraph they induce. Zero exactly when the coloring is acyclic.
pub fn cycle_measure(g: &Graph, colors: &[Color]) -> usize {
    let k = colors.iter().copied().max().unwrap_or(0);
    let mut total = 0;
    for a in 1..=k {
        for b in a + 1..=k {
            let mut dsu: Vec<usize> = (0..g.order()).collect();
            fn find(d: &mut [usize], mut x: usize) -> usize {
                while d[x] != x {
                    d[x] = d[d[x]];
                    x = d[x];
                }
                x
            }
            for (u, v) in g.edges() {
                let (cu, cv) = (colors[u], colors[v]);
                if (cu == a || cu == b) && (cv == a || cv == b) {
                    let (ru, rv) = (find(&mut dsu, u), find(&mut dsu, v));
                    if ru == rv {
                        total += 1;
                    } else {
                        dsu[ru] = rv;
                    }
                }
            }
        }
    }
    total
}

/// Shortest bi-colored cycle over all color pairs, starting at its
/// smallest-id vertex among shortest ones.
fn shortest_bicolored_cycle(g: &Graph, colors: &[Color]) -> Option<CycleWitness> {
    let k = colors.iter().copied().max().unwrap_or(0);
    let mut best: Option<(usize, Vertex, Color, Color)> = None;
    for s in g.vertices() {
        for other in 1..=k {
            if other == colors[s] {
                continue;
            }
            let pair = [colors[s], other];
            let Some(len) = g.shortest_cycle_len_through(s, |u| pair.contains(&colors[u])) else {
                continue;
            };
            if best.is_none_or(|(l, ..)| len < l) {
                best = Some((len, s, colors[s], other));
            }
        }
    }
    let (_, s, a, b) = best?;
    g.shortest_cycle_through(s, |u| colors[u] == a || colors[u] == b)
}

fn choose_move(
    g: &Graph,
    colors: &[Color],
    cycle: &CycleWitness,
    before: usize,
) -> Option<(DecycleRule, Vec<(Vertex, Color)>)> {
    let accept = |moves: &[(Vertex, Color)]| {
        let mut next = colors.to_vec();
        for &(v, x) in moves {
            next[v] = x;
        }
        let proper = moves.iter().all(|&(v, x)| g.neighbors(v).iter().all(|&u| next[u] != x));
        proper && cycle_measure(g, &next) < before
    };
    for (rule, moves) in rule_moves(g, colors, cycle) {
        if accept(&moves) {
            return Some((rule, moves));
        }
    }
    let singles = g.vertices().flat_map(|v| (1..=4).filter(move |&x| x != colors[v]).map(move |x| (v, x)));
    for m in singles {
        if accept(&[m]) {
            return Some((DecycleRule::SingleVertex, vec![m]));
        }
    }
    for (u, v) in g.edges() {
        for x in 1..=4 {
            for y in 1..=4 {
                let moves = [(u, x), (v, y)];
                if (x, y) != (colors[u], colors[v]) && accept(&moves) {
                    return Some((DecycleRule::AdjacentPair, moves.to_vec()));
                }
            }
        }
    }
    None
}

/// Candidate moves from the local rules, in the order they are tried.
fn rule_moves(g: &Graph, colors: &[Color], cycle: &CycleWitness) -> Vec<(DecycleRule, Vec<(Vertex, Color)>)> {
    let vs = &cycle.vertices;
    let len = vs.len();
    let on_cycle = |u: Vertex| vs.contains(&u);
    // the cycle is chordless (it is a shortest one), so each v_i has one outer neighbor
    let outer: Vec<Vertex> = (0..len)
        .map(|i| {
            let (prev, next) = (vs[(i + len - 1) % len], vs[(i + 1) % len]);
            g.neighbors(vs[i]).iter().copied().find(|&u| u != prev && u != next).unwrap()
        })
        .collect();
    if outer.iter().any(|&u| on_cycle(u)) {
        return Vec::new();
    }
    let (p, q) = (colors[vs[0]], colors[vs[1]]);
    let off: Vec<Color> = (1..=4).filter(|&x| x != p && x != q).collect();
    let other_off = |x: Color| if x == off[0] { off[1] } else { off[0] };
    let cu = |i: usize| colors[outer[i % len]];
    let mut out = Vec::new();

    for (j, &v) in vs.iter().enumerate() {
        let (prev, next) = ((j + len - 1) % len, (j + 1) % len);
        if (cu(j) == p || cu(j) == q) && cu(prev) == cu(next) && off.contains(&cu(prev)) {
            out.push((DecycleRule::SharedOuter, vec![(v, other_off(cu(prev)))]));
        }
    }
    for j in 0..len {
        let (prev, next) = ((j + len - 1) % len, (j + 1) % len);
        if off.contains(&cu(prev)) && off.contains(&cu(next)) && cu(prev) != cu(next) {
            out.push((DecycleRule::SplitOuter, vec![(vs[prev], cu(next))]));
            out.push((DecycleRule::SplitOuter, vec![(vs[next], cu(prev))]));
        }
    }
    if (0..len).all(|i| off.contains(&cu(i))) {
        for pi in 0..len {
            // rename so that c(u_p) is the first off color, then v_p takes the second
            let x = cu(pi);
            let y = other_off(x);
            out.push((DecycleRule::OffCycle, vec![(vs[pi], y)]));
            let (prev, next) = ((pi + len - 1) % len, (pi + 1) % len);
            let distinct = outer[prev] != outer[pi] && outer[next] != outer[pi];
            if cu(prev) == y && cu(next) == y && distinct {
                out.push((
                    DecycleRule::OffCycleRepair,
                    vec![(vs[prev], x), (vs[next], x), (vs[pi], colors[vs[prev]])],
                ));
            }
        }
    }
    out
}
