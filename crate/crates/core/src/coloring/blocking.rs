use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::{missing_colors, Color, Coloring, ColoringError};
use crate::graph::{CycleWitness, Graph, Vertex};

/// For each color `j` missing around a vertex: the shortest cycle that would
/// become bi-colored if the vertex alone took color `j`, or `None` (free).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockReport {
    pub vertex: Vertex,
    pub candidates: Vec<CandidateBlock>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CandidateBlock {
    pub color: Color,
    pub cycle: Option<BlockingCycle>,
}

/// A `j_v`-cycle: starts at the vertex, every other vertex colored `j` or `partner`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockingCycle {
    pub partner: Color,
    pub cycle: CycleWitness,
}

impl BlockReport {
    pub fn free_colors(&self) -> Vec<Color> {
        self.candidates.iter().filter(|b| b.cycle.is_none()).map(|b| b.color).collect()
    }

    pub fn is_fully_blocked(&self) -> bool {
        self.candidates.iter().all(|b| b.cycle.is_some())
    }

    pub fn cycle_for(&self, j: Color) -> Option<&BlockingCycle> {
        self.candidates.iter().find(|b| b.color == j)?.cycle.as_ref()
    }
}

pub fn blocking_report(g: &Graph, c: &Coloring, v: Vertex) -> Result<BlockReport, ColoringError> {
    c.check_size(g)?;
    if v >= g.order() {
        return Err(ColoringError::NoSuchVertex(v));
    }
    let partners: BTreeSet<Color> = g.neighbors(v).iter().map(|&u| c.color(u)).collect();
    let candidates = missing_colors(g, c, v)
        .into_iter()
        .map(|j| {
            let mut best: Option<BlockingCycle> = None;
            for &m in &partners {
                let cycle = g.shortest_cycle_through(v, |u| {
                    u != v && (c.color(u) == j || c.color(u) == m)
                });
                let Some(cycle) = cycle else { continue };
                let better = best.as_ref().is_none_or(|b| {
                    (cycle.len(), &cycle.vertices) < (b.cycle.len(), &b.cycle.vertices)
                });
                if better {
                    best = Some(BlockingCycle { partner: m, cycle });
                }
            }
            CandidateBlock { color: j, cycle: best }
        })
        .collect();
    Ok(BlockReport { vertex: v, candidates })
}
