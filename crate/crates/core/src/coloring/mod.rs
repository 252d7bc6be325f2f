//! Colorings and the definitional checks built on them: properness,
//! acyclicity, b-vertices, acyclic recoloring steps and minimality.

mod blocking;
mod recolor;

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{CycleWitness, ForestCheck, Graph, Vertex};

pub use blocking::{blocking_report, BlockReport, BlockingCycle, CandidateBlock};
pub use recolor::{
    is_ab_minimal, try_acyclic_recoloring_step, MinimalCheck, RecolorWitness, StepRefusal,
    StepResult,
};
pub(crate) use recolor::class_step;

pub type Color = u32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("coloring has {coloring} entries but the graph has {graph} vertices")]
    SizeMismatch { graph: usize, coloring: usize },
    #[error("vertex {vertex} has color {color}, outside 1..={k}")]
    ColorOutOfRange { vertex: Vertex, color: Color, k: Color },
    #[error("palette size must be at least 1")]
    EmptyPalette,
    #[error("color {0} is not in the palette")]
    NoSuchColor(Color),
    #[error("vertex {0} does not exist")]
    NoSuchVertex(Vertex),
    #[error("edge ({0}, {1}) is monochromatic")]
    Improper(Vertex, Vertex),
    #[error("colors {pair:?} induce a cycle {cycle:?}")]
    Cyclic { pair: (Color, Color), cycle: CycleWitness },
    #[error("the graph is not cubic")]
    NotCubic,
    #[error("cannot parse coloring: {0}")]
    Parse(String),
}

/// Total map from vertices to colors `1..=k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawColoring")]
pub struct Coloring {
    k: Color,
    colors: Vec<Color>,
}

#[derive(Deserialize)]
struct RawColoring {
    k: Color,
    colors: Vec<Color>,
}

impl TryFrom<RawColoring> for Coloring {
    type Error = ColoringError;

    fn try_from(raw: RawColoring) -> Result<Self, Self::Error> {
        Coloring::new(raw.k, raw.colors)
    }
}

impl Coloring {
    pub fn new(k: Color, colors: Vec<Color>) -> Result<Self, ColoringError> {
        if k == 0 {
            return Err(ColoringError::EmptyPalette);
        }
        if let Some((vertex, &color)) =
            colors.iter().enumerate().find(|&(_, &c)| c == 0 || c > k)
        {
            return Err(ColoringError::ColorOutOfRange { vertex, color, k });
        }
        Ok(Coloring { k, colors })
    }

    /// Palette is the largest color used.
    pub fn from_colors(colors: Vec<Color>) -> Result<Self, ColoringError> {
        let k = colors.iter().copied().max().unwrap_or(1).max(1);
        Coloring::new(k, colors)
    }

    /// Every vertex gets its own color.
    pub fn trivial(n: usize) -> Self {
        Coloring { k: n as Color, colors: (1..=n as Color).collect() }
    }

    pub fn palette(&self) -> Color {
        self.k
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn color(&self, v: Vertex) -> Color {
        self.colors[v]
    }

    pub fn as_slice(&self) -> &[Color] {
        &self.colors
    }

    /// The color class `V_i`, ascending.
    pub fn class(&self, i: Color) -> Vec<Vertex> {
        (0..self.colors.len()).filter(|&v| self.colors[v] == i).collect()
    }

    /// Colors with a nonempty class, ascending.
    pub fn used_colors(&self) -> Vec<Color> {
        self.colors.iter().copied().collect::<BTreeSet<_>>().into_iter().collect()
    }

    pub fn used_count(&self) -> usize {
        self.used_colors().len()
    }

    /// Applies a bijection on colors given as `perm[old - 1] = new`.
    pub fn permuted(&self, perm: &[Color]) -> Coloring {
        Coloring { k: self.k, colors: self.colors.iter().map(|&c| perm[c as usize - 1]).collect() }
    }

    /// Renames the used colors to `1..=used` preserving their order.
    pub fn compacted(&self) -> Coloring {
        let used = self.used_colors();
        let colors = self
            .colors
            .iter()
            .map(|c| used.binary_search(c).unwrap() as Color + 1)
            .collect();
        Coloring { k: used.len() as Color, colors }
    }

    pub fn with_color(&self, v: Vertex, c: Color) -> Result<Coloring, ColoringError> {
        if v >= self.colors.len() {
            return Err(ColoringError::NoSuchVertex(v));
        }
        let mut colors = self.colors.clone();
        colors[v] = c;
        Coloring::new(self.k, colors)
    }

    /// Whitespace-separated colors, one per vertex.
    pub fn to_plain(&self) -> String {
        let parts: Vec<String> = self.colors.iter().map(Color::to_string).collect();
        parts.join(" ")
    }

    /// Reads either the JSON object form `{"k": .., "colors": [..]}` or the
    /// plain whitespace-separated form.
    pub fn parse(text: &str) -> Result<Coloring, ColoringError> {
        let trimmed = text.trim();
        if trimmed.starts_with('{') {
            return serde_json::from_str(trimmed).map_err(|e| ColoringError::Parse(e.to_string()));
        }
        let colors = trimmed
            .split_whitespace()
            .map(|tok| tok.parse::<Color>().map_err(|e| ColoringError::Parse(format!("{tok:?}: {e}"))))
            .collect::<Result<Vec<_>, _>>()?;
        if colors.is_empty() {
            return Err(ColoringError::Parse("no colors".into()));
        }
        Coloring::from_colors(colors)
    }

    pub(crate) fn check_size(&self, g: &Graph) -> Result<(), ColoringError> {
        if self.colors.len() != g.order() {
            return Err(ColoringError::SizeMismatch { graph: g.order(), coloring: self.colors.len() });
        }
        Ok(())
    }
}

impl fmt::Display for Coloring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_plain())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum ProperCheck {
    Proper,
    Conflict { edge: (Vertex, Vertex) },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum AcyclicCheck {
    Acyclic,
    Cycle { pair: (Color, Color), cycle: CycleWitness },
}

/// First monochromatic edge in edge order, if any.
pub fn is_proper(g: &Graph, c: &Coloring) -> Result<ProperCheck, ColoringError> {
    c.check_size(g)?;
    Ok(g.edges()
        .find(|&(u, v)| c.color(u) == c.color(v))
        .map_or(ProperCheck::Proper, |edge| ProperCheck::Conflict { edge }))
}

/// Checks every pair of used colors for a cycle, pairs in lexicographic order.
pub fn is_acyclic(g: &Graph, c: &Coloring) -> Result<AcyclicCheck, ColoringError> {
    if let ProperCheck::Conflict { edge } = is_proper(g, c)? {
        return Err(ColoringError::Improper(edge.0, edge.1));
    }
    let used = c.used_colors();
    for (idx, &a) in used.iter().enumerate() {
        for &b in &used[idx + 1..] {
            let keep: Vec<bool> = g.vertices().map(|v| c.color(v) == a || c.color(v) == b).collect();
            if let ForestCheck::Cycle(cycle) = g.induced_subgraph_is_forest(&keep) {
                return Ok(AcyclicCheck::Cycle { pair: (a, b), cycle });
            }
        }
    }
    Ok(AcyclicCheck::Acyclic)
}

/// Proper and acyclic, as a single error-returning check.
pub(crate) fn require_acyclic(g: &Graph, c: &Coloring) -> Result<(), ColoringError> {
    match is_acyclic(g, c)? {
        AcyclicCheck::Acyclic => Ok(()),
        AcyclicCheck::Cycle { pair, cycle } => Err(ColoringError::Cyclic { pair, cycle }),
    }
}

/// Colors of `1..=k` absent from the closed neighborhood of `v`, ascending.
pub fn missing_colors(g: &Graph, c: &Coloring, v: Vertex) -> Vec<Color> {
    let mut present = vec![false; c.palette() as usize + 1];
    present[c.color(v) as usize] = true;
    for &u in g.neighbors(v) {
        present[c.color(u) as usize] = true;
    }
    (1..=c.palette()).filter(|&j| !present[j as usize]).collect()
}

/// Vertices of color `i` whose closed neighborhood sees all `k` colors.
pub fn b_vertices(g: &Graph, c: &Coloring, i: Color) -> Result<Vec<Vertex>, ColoringError> {
    c.check_size(g)?;
    if i == 0 || i > c.palette() {
        return Err(ColoringError::NoSuchColor(i));
    }
    Ok(c.class(i).into_iter().filter(|&v| missing_colors(g, c, v).is_empty()).collect())
}

/// Neighborhood shape of a vertex in a cubic graph. Says nothing about
/// whether the vertex actually blocks its class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum VertexShape {
    #[serde(rename = "b")]
    BVertex,
    #[serde(rename = "A")]
    TypeA,
    #[serde(rename = "B")]
    TypeB,
    #[serde(rename = "none")]
    Neither,
}

pub fn classify_ab_vertex_shape(
    g: &Graph,
    c: &Coloring,
    v: Vertex,
) -> Result<VertexShape, ColoringError> {
    if !g.is_cubic() {
        return Err(ColoringError::NotCubic);
    }
    c.check_size(g)?;
    if v >= g.order() {
        return Err(ColoringError::NoSuchVertex(v));
    }
    if missing_colors(g, c, v).is_empty() {
        return Ok(VertexShape::BVertex);
    }
    let around: BTreeSet<Color> = g.neighbors(v).iter().map(|&u| c.color(u)).collect();
    Ok(match around.len() {
        1 => VertexShape::TypeA,
        2 => VertexShape::TypeB,
        _ => VertexShape::Neither,
    })
}
