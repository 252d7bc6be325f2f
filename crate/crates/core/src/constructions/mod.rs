//! Explicit acyclic b-colorings: five colors on generalized Petersen graphs
//! and `(0,j)`-prisms, four colors on `C(T)` and on prisms `G(n,1)`.
//!
//! The five-color constructions place five copies of a fixed segment
//! pattern around the graph, one per color, each centered on a type-B
//! vertex whose two missing colors are blocked by cycles inside the segment.
//! Segment palettes are chained so that overlapping vertices agree; the
//! remaining vertices are filled by backtracking and the result is
//! re-verified before it is returned.

mod fill;

use serde::Serialize;
use thiserror::Error;

use crate::coloring::{is_ab_minimal, is_acyclic, AcyclicCheck, Color, Coloring, ColoringError};
use crate::families::{
    fixtures, gen_0j_prism, gen_c_of_t_with_layout, gen_petersen, CubicTree, FamilyError, NamedGraph,
};
use crate::forest::UNCOLORED;
use crate::graph::Vertex;
use crate::solver::{find_acyclic_b4, SearchBudget, SolveError};

/// `(c⁰, c¹, c², c³, c⁴)` of one segment.
pub type Palette = [Color; 5];

/// One palette per segment, in anchor order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SegmentPalette(pub [Palette; 5]);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("{graph}: {param} = {got} is below the bound {bound} required by the construction")]
    BelowBound { graph: String, param: &'static str, got: usize, bound: usize },
    #[error("the construction needs {0}")]
    Parameter(String),
    #[error("G(3,1) is the prism K2xK3, whose acyclic b-chromatic number is 3; need n >= 4")]
    PrismException,
    #[error("no palette chain admitted a proper acyclic fill")]
    NotFound,
    #[error("constructed coloring failed verification: {0}")]
    Unverified(String),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Solve(#[from] SolveError),
}

#[derive(Debug, Clone)]
pub struct Construction {
    pub graph: NamedGraph,
    pub coloring: Coloring,
    /// The vertices carrying the blocking pattern, one per color.
    pub designated: Vec<Vertex>,
    pub palettes: Option<SegmentPalette>,
    /// Palette chains rejected before one succeeded (0 = the first choice worked).
    pub chains_rejected: usize,
}

/// Which vertex of a segment a role applies to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Side {
    /// `x_i` in `G(n,k)`, `v¹_i` in a prism.
    Outer,
    /// `y_i` in `G(n,k)`, `v²_i` in a prism.
    Inner,
}

/// `(side, offset from the anchor, role r)`: the vertex gets `c^r`.
type Pattern = Vec<(Side, isize, usize)>;

fn gp_pattern(k: usize) -> Pattern {
    use Side::*;
    let k = k as isize;
    let mut p = vec![(Outer, 0, 0), (Outer, 1, 4)];
    if k % 2 == 1 {
        p.extend([(Inner, 0, 3), (Inner, k - 1, 3), (Outer, k, 3)]);
        p.extend((1..=k).map(|t| (Outer, -t, if t % 2 == 1 { 3 } else { 1 })));
        p.push((Inner, -k, 1));
        p.extend([(Inner, -1, 2), (Outer, k - 1, 2), (Inner, k, 2)]);
    } else {
        p.extend([(Outer, -1, 3), (Inner, -k - 1, 3), (Outer, -k, 3), (Inner, 0, 3)]);
        p.extend([(Inner, -2, 3), (Outer, k - 2, 3), (Outer, k, 3)]);
        p.extend([(Inner, -1, 1), (Outer, -k - 1, 1), (Inner, -k, 1)]);
        p.extend([(Outer, -2, 2), (Inner, k - 2, 2), (Outer, k - 1, 2), (Inner, k, 2)]);
    }
    p
}

/// Anchor at `v¹_{2i+1}`; offsets are relative to it.
fn prism_pattern(j: usize) -> Pattern {
    use Side::*;
    let j = j as isize;
    let mut p = vec![(Outer, 0, 0), (Outer, -1, 4), (Inner, j + 1, 2)];
    // upper rim: even indices 2i+2..=2i+2+j, odd indices 2i+3..=2i+1+j
    p.extend((1..=j + 1).step_by(2).map(|o| (Outer, o, 3)));
    p.extend((2..=j).step_by(2).map(|o| (Outer, o, 2)));
    // lower rim: odd indices carry c³, even indices c¹
    p.extend((2..=j).step_by(2).map(|o| (Inner, o, 3)));
    p.extend((1..j).step_by(2).map(|o| (Inner, o, 1)));
    p
}

/// Writes the five segments into a partial coloring; `None` on a clash.
fn place(n: usize, anchors: &[usize], pattern: &Pattern, chain: &[Palette; 5]) -> Option<Vec<Color>> {
    let mut colors = vec![UNCOLORED; 2 * n];
    for (seg, &a) in anchors.iter().enumerate() {
        for &(side, off, role) in pattern {
            let i = (a as isize + off).rem_euclid(n as isize) as usize;
            let v = if side == Side::Outer { i } else { n + i };
            let c = chain[seg][role];
            if colors[v] != UNCOLORED && colors[v] != c {
                return None;
            }
            colors[v] = c;
        }
    }
    Some(colors)
}

fn permutations() -> Vec<Palette> {
    let mut out = Vec::with_capacity(120);
    let mut p = [1, 2, 3, 4, 5];
    fn heap(m: usize, p: &mut Palette, out: &mut Vec<Palette>) {
        if m == 1 {
            out.push(*p);
            return;
        }
        for i in 0..m {
            heap(m - 1, p, out);
            let swap = if m % 2 == 0 { i } else { 0 };
            p.swap(swap, m - 1);
        }
    }
    heap(5, &mut p, &mut out);
    out.sort();
    out
}

/// `next` such that `prev[r] = next[perm[r]]`.
fn follow(prev: &Palette, perm: &[usize; 5]) -> Palette {
    let mut next = [0; 5];
    for r in 0..5 {
        next[perm[r]] = prev[r];
    }
    next
}

/// Tries `preferred` first, then every chain starting at the identity
/// palette in lexicographic order, subject to `link` between consecutive
/// palettes and pairwise distinct `c⁰`.
fn search_chains<T>(
    preferred: [Palette; 5],
    link: impl Fn(&Palette, &Palette) -> bool,
    max_chains: usize,
    mut attempt: impl FnMut(&[Palette; 5]) -> Option<T>,
) -> Result<(T, [Palette; 5], usize), ConstructionError> {
    let distinct = (0..5).all(|a| (0..a).all(|b| preferred[a][0] != preferred[b][0]));
    let linked = preferred.windows(2).all(|w| link(&w[0], &w[1]));
    if distinct && linked {
        if let Some(t) = attempt(&preferred) {
            return Ok((t, preferred, 0));
        }
    }
    let perms = permutations();
    let mut chain = [[1, 2, 3, 4, 5]; 5];
    let mut tried = 1;
    fn rec<T>(
        depth: usize,
        chain: &mut [Palette; 5],
        perms: &[Palette],
        link: &dyn Fn(&Palette, &Palette) -> bool,
        tried: &mut usize,
        max: usize,
        attempt: &mut dyn FnMut(&[Palette; 5]) -> Option<T>,
    ) -> Option<T> {
        if depth == 5 {
            *tried += 1;
            return attempt(chain);
        }
        for p in perms {
            if *tried >= max {
                return None;
            }
            if !link(&chain[depth - 1], p) || chain[..depth].iter().any(|q| q[0] == p[0]) {
                continue;
            }
            chain[depth] = *p;
            if let Some(t) = rec(depth + 1, chain, perms, link, tried, max, attempt) {
                return Some(t);
            }
        }
        None
    }
    match rec(1, &mut chain, &perms, &link, &mut tried, max_chains, &mut attempt) {
        Some(t) => Ok((t, chain, tried - 1)),
        None => Err(ConstructionError::NotFound),
    }
}

const FILL_NODES: u64 = 200_000;
const MAX_CHAINS: usize = 4_000;

fn verify(graph: &NamedGraph, coloring: &Coloring, colors: usize) -> Result<(), ConstructionError> {
    let g = &graph.graph;
    let fail = |what: String| Err(ConstructionError::Unverified(what));
    match is_acyclic(g, coloring) {
        Ok(AcyclicCheck::Acyclic) => {}
        Ok(AcyclicCheck::Cycle { pair, .. }) => return fail(format!("colors {pair:?} induce a cycle")),
        Err(e) => return fail(e.to_string()),
    }
    if coloring.used_count() != colors {
        return fail(format!("uses {} colors, expected {colors}", coloring.used_count()));
    }
    match is_ab_minimal(g, coloring) {
        Ok(m) if m.is_minimal() => Ok(()),
        Ok(_) => fail("an acyclic recoloring step exists".into()),
        Err(e) => fail(e.to_string()),
    }
}

/// The bound `5(2k + (-1)^k)` on `n` for [`color_gp5`].
pub fn gp5_bound(k: usize) -> usize {
    if k % 2 == 1 {
        5 * (2 * k - 1)
    } else {
        5 * (2 * k + 1)
    }
}

/// Gluing permutations `π_i` with `P_i[r] = P_{i+1}[π_i[r]]`.
fn gp_gluing(n: usize, k: usize) -> [[usize; 5]; 4] {
    const PLAIN: [usize; 5] = [4, 0, 3, 1, 2];
    let mut perms = [PLAIN; 4];
    if k % 2 == 1 && n == 10 * k - 4 {
        perms[2] = [2, 0, 3, 1, 4];
    }
    perms
}

/// Five-coloring of `G(n,k)` with a type-B acyclic b-vertex `x_{j_i}` in every color.
pub fn color_gp5(n: usize, k: usize) -> Result<Construction, ConstructionError> {
    if k < 3 {
        return Err(ConstructionError::Parameter(format!("k >= 3, got k = {k}")));
    }
    let bound = gp5_bound(k);
    if n < bound {
        return Err(ConstructionError::BelowBound { graph: format!("G({n},{k})"), param: "n", got: n, bound });
    }
    let graph = gen_petersen(n, k)?;
    let step = if k % 2 == 1 { 2 * k - 1 } else { 2 * k + 1 };
    let anchors: Vec<usize> = (0..5).map(|i| step * i).collect();
    let pattern = gp_pattern(k);
    let mut preferred = [[1, 2, 3, 4, 5]; 5];
    for (i, perm) in gp_gluing(n, k).iter().enumerate() {
        preferred[i + 1] = follow(&preferred[i], perm);
    }
    // overlapping vertices: (c², c³) of one segment are (c³, c¹) of the next
    let link = |a: &Palette, b: &Palette| a[2] == b[3] && a[3] == b[1];
    let (colors, chain, rejected) = search_chains(preferred, link, MAX_CHAINS, |chain| {
        let partial = place(n, &anchors, &pattern, chain)?;
        fill::fill(&graph.graph, 5, &partial, FILL_NODES)
    })?;
    finish(graph, colors, anchors, Some(SegmentPalette(chain)), rejected, 5)
}

fn finish(
    graph: NamedGraph,
    colors: Vec<Color>,
    designated: Vec<Vertex>,
    palettes: Option<SegmentPalette>,
    chains_rejected: usize,
    k: usize,
) -> Result<Construction, ConstructionError> {
    let coloring = Coloring::new(k as Color, colors).map_err(|e: ColoringError| ConstructionError::Unverified(e.to_string()))?;
    verify(&graph, &coloring, k)?;
    Ok(Construction { graph, coloring, designated, palettes, chains_rejected })
}

/// Five-coloring of the `(0,j)`-prism with rims of length `rim`.
pub fn color_0j_prism5(rim: usize, j: usize) -> Result<Construction, ConstructionError> {
    if j == 0 {
        return Err(ConstructionError::Parameter("j > 0".into()));
    }
    let graph = gen_0j_prism(rim, j)?;
    let bound = 5 * (j + 2);
    if rim < bound {
        return Err(ConstructionError::BelowBound { graph: format!("(0,{j})-prism"), param: "rim length", got: rim, bound });
    }
    let anchors: Vec<usize> = (0..5).map(|s| s * (j + 2) + 1).collect();
    let pattern = prism_pattern(j);
    // c³ of one segment is c⁴ of the next; shift every role by one
    let mut preferred = [[1, 2, 3, 4, 5]; 5];
    for i in 1..5 {
        preferred[i] = follow(&preferred[i - 1], &[1, 2, 3, 4, 0]);
    }
    let link = |a: &Palette, b: &Palette| a[3] == b[4];
    let (colors, chain, rejected) = search_chains(preferred, link, MAX_CHAINS, |chain| {
        let partial = place(rim, &anchors, &pattern, chain)?;
        fill::fill(&graph.graph, 5, &partial, FILL_NODES)
    })?;
    finish(graph, colors, anchors, Some(SegmentPalette(chain)), rejected, 5)
}

/// Four-coloring of `C(T)`: every H₃ copy gets the fixed pattern (which has
/// a b-vertex of each color), the rest is filled.
pub fn color_c_of_t4(t: &CubicTree) -> Result<Construction, ConstructionError> {
    let (graph, layout) = gen_c_of_t_with_layout(t);
    let mut partial = vec![UNCOLORED; graph.graph.order()];
    for (&b, _) in layout.block.iter().zip(&layout.is_leaf).filter(|(_, &leaf)| leaf) {
        for (off, &c) in fixtures::H3_COLORS.iter().enumerate() {
            partial[b + 1 + off] = c;
        }
    }
    let colors = fill::fill(&graph.graph, 4, &partial, FILL_NODES).ok_or(ConstructionError::NotFound)?;
    let designated = layout.w_vertices();
    finish(graph, colors, designated, None, 0, 4)
}

/// A verified ⊳ₐ-minimal four-coloring of the prism `G(n,1)`, `n >= 4`.
pub fn prism_ab4(n: usize) -> Result<Construction, ConstructionError> {
    if n == 3 {
        return Err(ConstructionError::PrismException);
    }
    if n < 3 {
        return Err(ConstructionError::Parameter(format!("n >= 4, got n = {n}")));
    }
    let graph = gen_petersen(n, 1)?;
    let colors = match periodic_prism4(n) {
        Some(c) => c,
        None => find_acyclic_b4(&graph.graph, &SearchBudget::unlimited())?
            .ok_or(ConstructionError::NotFound)?
            .as_slice()
            .to_vec(),
    };
    finish(graph, colors, Vec::new(), None, 0, 4)
}

/// Tries short periodic patterns on the two rims, then a fill of the rest.
fn periodic_prism4(n: usize) -> Option<Vec<Color>> {
    let graph = gen_petersen(n, 1).ok()?.graph;
    let seeds: [(&[Color], &[Color]); 2] = [(&[1, 2, 3, 1, 2, 4], &[3, 4, 1, 2, 4, 3]), (&[1, 2, 3, 4], &[3, 4, 1, 2])];
    for (top, bottom) in seeds {
        let mut partial = vec![UNCOLORED; 2 * n];
        let whole = n - n % top.len();
        for i in 0..whole {
            partial[i] = top[i % top.len()];
            partial[n + i] = bottom[i % bottom.len()];
        }
        if let Some(colors) = fill::fill(&graph, 4, &partial, FILL_NODES) {
            let c = Coloring::new(4, colors.clone()).ok()?;
            if c.used_count() == 4 && is_ab_minimal(&graph, &c).ok()?.is_minimal() {
                return Some(colors);
            }
        }
    }
    None
}
