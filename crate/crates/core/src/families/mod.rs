//! Graph families and fixtures with stable vertex names.

mod cubic;
pub mod fixtures;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::coloring::Coloring;
use crate::graph::{Graph, GraphError, Vertex};

pub use cubic::connected_cubic_graphs;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("G({n},{k}) needs 1 <= k < n/2")]
    KOutOfRange { n: usize, k: usize },
    #[error("(0,j)-prism needs an even rim length of at least 4, got {0}")]
    RimLength(usize),
    #[error("(0,j)-prism needs an even j, got {0}")]
    OddJ(usize),
    #[error("(0,j)-prism needs j <= rim/2, got j = {j} with rim {rim}")]
    JOutOfRange { rim: usize, j: usize },
    #[error("not a cubic tree: {0}")]
    InvalidTree(String),
    #[error("unknown sporadic graph {0:?} (expected petersen, k33, prism3 or g1)")]
    UnknownSporadic(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A graph together with a label for every vertex id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedGraph {
    pub graph: Graph,
    pub names: Vec<String>,
}

impl NamedGraph {
    pub fn name(&self, v: Vertex) -> &str {
        &self.names[v]
    }

    pub fn id_of(&self, name: &str) -> Option<Vertex> {
        self.names.iter().position(|s| s == name)
    }
}

/// A graph with a fixed coloring and the vertices drawn as acyclic b-vertices.
#[derive(Debug, Clone)]
pub struct ColoredFixture {
    pub graph: NamedGraph,
    pub coloring: Coloring,
    pub designated: Vec<Vertex>,
}

/// Generalized Petersen graph: `x_i = i`, `y_i = n + i`.
pub fn gen_petersen(n: usize, k: usize) -> Result<NamedGraph, FamilyError> {
    if k == 0 || 2 * k >= n {
        return Err(FamilyError::KOutOfRange { n, k });
    }
    let mut edges = Vec::with_capacity(3 * n);
    for i in 0..n {
        edges.push((i, (i + 1) % n));
        edges.push((n + i, n + (i + k) % n));
        edges.push((i, n + i));
    }
    let names = (0..n).map(|i| format!("x{i}")).chain((0..n).map(|i| format!("y{i}"))).collect();
    Ok(NamedGraph { graph: Graph::new(2 * n, edges)?, names })
}

/// `(0,j)`-prism with rims of length `rim`: `v^1_i = i`, `v^2_i = rim + i`.
pub fn gen_0j_prism(rim: usize, j: usize) -> Result<NamedGraph, FamilyError> {
    if rim < 4 || rim % 2 == 1 {
        return Err(FamilyError::RimLength(rim));
    }
    if j % 2 == 1 {
        return Err(FamilyError::OddJ(j));
    }
    if j > rim / 2 {
        return Err(FamilyError::JOutOfRange { rim, j });
    }
    Ok(NamedGraph { graph: Graph::new(2 * rim, prism_edges(rim, j))?, names: prism_names(rim) })
}

/// Edge list for any even offset `j < rim`, including the reflected range.
pub(crate) fn prism_edges(rim: usize, j: usize) -> Vec<(Vertex, Vertex)> {
    let mut edges = Vec::with_capacity(3 * rim);
    for i in 0..rim {
        edges.push((i, (i + 1) % rim));
        edges.push((rim + i, rim + (i + 1) % rim));
        let other = if i % 2 == 0 { i } else { (i + j) % rim };
        edges.push((i, rim + other));
    }
    edges
}

fn prism_names(rim: usize) -> Vec<String> {
    (1..=2).flat_map(|r| (0..rim).map(move |i| format!("v_{i}^{r}"))).collect()
}

pub fn gen_h3() -> NamedGraph {
    let graph = Graph::new(7, fixtures::H3_EDGES).expect("fixture is a simple graph");
    NamedGraph { graph, names: fixtures::H3_NAMES.iter().map(|s| s.to_string()).collect() }
}

/// A tree whose vertices all have degree 1 or 3, with at least one edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CubicTree {
    tree: Graph,
}

impl CubicTree {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (Vertex, Vertex)>) -> Result<Self, FamilyError> {
        let tree = Graph::new(n, edges)?;
        if tree.size() == 0 {
            return Err(FamilyError::InvalidTree("no edges".into()));
        }
        if tree.size() != n - 1 || !tree.is_connected() {
            return Err(FamilyError::InvalidTree("not a tree".into()));
        }
        if let Some(v) = tree.vertices().find(|&v| !matches!(tree.degree(v), 1 | 3)) {
            return Err(FamilyError::InvalidTree(format!(
                "vertex {v} has degree {}",
                tree.degree(v)
            )));
        }
        Ok(CubicTree { tree })
    }

    pub fn k2() -> Self {
        CubicTree::new(2, [(0, 1)]).unwrap()
    }

    /// `K₁,₃` with center 0.
    pub fn star() -> Self {
        CubicTree::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap()
    }

    pub fn graph(&self) -> &Graph {
        &self.tree
    }

    pub fn leaves(&self) -> Vec<Vertex> {
        self.tree.vertices().filter(|&v| self.tree.degree(v) == 1).collect()
    }

    pub fn inner(&self) -> Vec<Vertex> {
        self.tree.vertices().filter(|&v| self.tree.degree(v) == 3).collect()
    }
}

/// Layout of `C(T)`: tree vertices in id order, three ids (triangle corners
/// `a b c`) per inner vertex, seven ids (an H₃ copy) per leaf.
#[derive(Debug, Clone)]
pub struct CtLayout {
    /// First id of each tree vertex's block.
    pub block: Vec<Vertex>,
    pub is_leaf: Vec<bool>,
}

impl CtLayout {
    /// The `w` vertex of each leaf's H₃ copy, in tree-vertex order.
    pub fn w_vertices(&self) -> Vec<Vertex> {
        self.block
            .iter()
            .zip(&self.is_leaf)
            .filter(|(_, &leaf)| leaf)
            .map(|(&b, _)| b + fixtures::H3_W)
            .collect()
    }
}

pub(crate) fn c_of_t_layout(t: &CubicTree) -> CtLayout {
    let mut block = Vec::with_capacity(t.tree.order());
    let mut is_leaf = Vec::with_capacity(t.tree.order());
    let mut next = 0;
    for v in t.tree.vertices() {
        block.push(next);
        let leaf = t.tree.degree(v) == 1;
        is_leaf.push(leaf);
        next += if leaf { 7 } else { 3 };
    }
    CtLayout { block, is_leaf }
}

pub fn gen_c_of_t(t: &CubicTree) -> NamedGraph {
    gen_c_of_t_with_layout(t).0
}

pub(crate) fn gen_c_of_t_with_layout(t: &CubicTree) -> (NamedGraph, CtLayout) {
    let layout = c_of_t_layout(t);
    let tree = &t.tree;
    let order = 3 * t.inner().len() + 7 * t.leaves().len();
    let mut names = Vec::with_capacity(order);
    let mut edges = Vec::new();
    for v in tree.vertices() {
        let b = layout.block[v];
        if layout.is_leaf[v] {
            names.extend(fixtures::H3_NAMES.iter().map(|s| format!("{s}#{v}")));
            edges.extend(fixtures::H3_EDGES.iter().map(|&(p, q)| (b + p, b + q)));
        } else {
            names.extend(["a", "b", "c"].iter().map(|s| format!("{s}#{v}")));
            edges.extend([(b, b + 1), (b + 1, b + 2), (b, b + 2)]);
        }
    }
    let attach = |p: Vertex, q: Vertex| {
        if layout.is_leaf[p] {
            layout.block[p] + fixtures::H3_W
        } else {
            layout.block[p] + tree.neighbors(p).iter().position(|&x| x == q).unwrap()
        }
    };
    for (p, q) in tree.edges() {
        edges.push((attach(p, q), attach(q, p)));
    }
    let graph = Graph::new(order, edges).expect("C(T) is simple");
    (NamedGraph { graph, names }, layout)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sporadic {
    Petersen,
    K33,
    Prism3,
    G1,
}

impl Sporadic {
    pub const ALL: [Sporadic; 4] = [Sporadic::Petersen, Sporadic::K33, Sporadic::Prism3, Sporadic::G1];

    pub fn name(self) -> &'static str {
        match self {
            Sporadic::Petersen => "petersen",
            Sporadic::K33 => "k33",
            Sporadic::Prism3 => "prism3",
            Sporadic::G1 => "g1",
        }
    }
}

impl fmt::Display for Sporadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Sporadic {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Sporadic::ALL
            .into_iter()
            .find(|w| w.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| FamilyError::UnknownSporadic(s.to_string()))
    }
}

fn colored(graph: NamedGraph, colors: &[u32], designated: &[Vertex]) -> ColoredFixture {
    ColoredFixture {
        graph,
        coloring: Coloring::from_colors(colors.to_vec()).expect("fixture colors are in range"),
        designated: designated.to_vec(),
    }
}

pub fn k33() -> NamedGraph {
    let edges = (0..3).flat_map(|a| (3..6).map(move |b| (a, b)));
    let graph = Graph::new(6, edges).unwrap();
    NamedGraph { graph, names: ["a", "b", "c", "d", "e", "f"].map(String::from).to_vec() }
}

pub fn g1() -> NamedGraph {
    let graph = Graph::new(10, fixtures::G1_EDGES).unwrap();
    NamedGraph { graph, names: fixtures::G1_NAMES.map(String::from).to_vec() }
}

pub fn gen_sporadic(which: Sporadic) -> ColoredFixture {
    use fixtures::*;
    match which {
        Sporadic::Petersen => {
            colored(gen_petersen(5, 2).unwrap(), &PETERSEN_COLORS, &PETERSEN_DESIGNATED)
        }
        Sporadic::K33 => colored(k33(), &K33_COLORS, &K33_DESIGNATED),
        Sporadic::Prism3 => colored(gen_petersen(3, 1).unwrap(), &PRISM3_COLORS, &PRISM3_DESIGNATED),
        Sporadic::G1 => colored(g1(), &G1_COLORS, &G1_DESIGNATED),
    }
}

/// The 48-vertex cubic graph with its five-color acyclic b-coloring.
pub fn example48() -> ColoredFixture {
    use fixtures::*;
    let graph = Graph::new(48, EXAMPLE48_EDGES).unwrap();
    let names = EXAMPLE48_NAMES.map(String::from).to_vec();
    colored(NamedGraph { graph, names }, &EXAMPLE48_COLORS, &EXAMPLE48_DESIGNATED)
}

pub fn complete(n: usize) -> Graph {
    Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
}

pub fn cycle(n: usize) -> Graph {
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
}

/// The 3-cube `Q₃`; vertices are bit strings.
pub fn cube() -> Graph {
    let edges = (0..8usize).flat_map(|v| (0..3).map(move |b| (v, v ^ (1 << b)))).filter(|&(u, v)| u < v);
    Graph::new(8, edges).unwrap()
}

#[cfg(test)]
mod tests;
