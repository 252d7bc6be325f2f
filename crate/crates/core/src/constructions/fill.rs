use crate::coloring::Color;
use crate::forest::{PairForests, UNCOLORED};
use crate::graph::{Graph, Vertex};

/// Extends a partial coloring (`0` = free) to a proper acyclic coloring
/// into `1..=k`. Picks the free vertex with the fewest options, colors
/// ascending. `None` if the fixed part is improper or cyclic, or nothing is
/// found within `node_limit` assignments.
pub(crate) fn fill(g: &Graph, k: Color, partial: &[Color], node_limit: u64) -> Option<Vec<Color>> {
    if g.edges().any(|(u, v)| partial[u] != UNCOLORED && partial[u] == partial[v]) {
        return None;
    }
    let mut forests = PairForests::from_colors(g, k as usize, partial)?;
    let mut colors = partial.to_vec();
    let mut free: Vec<Vertex> = g.vertices().filter(|&v| partial[v] == UNCOLORED).collect();
    let mut nodes = 0;
    go(g, k, &mut colors, &mut forests, &mut free, &mut nodes, node_limit).then_some(colors)
}

fn options(g: &Graph, k: Color, colors: &[Color], forests: &PairForests, v: Vertex) -> Vec<Color> {
    (1..=k)
        .filter(|&c| g.neighbors(v).iter().all(|&u| colors[u] != c) && !forests.closes_cycle(g, colors, v, c))
        .collect()
}

fn go(
    g: &Graph,
    k: Color,
    colors: &mut [Color],
    forests: &mut PairForests,
    free: &mut Vec<Vertex>,
    nodes: &mut u64,
    limit: u64,
) -> bool {
    if free.is_empty() {
        return true;
    }
    let mut best: Option<(usize, Vec<Color>)> = None;
    for (idx, &v) in free.iter().enumerate() {
        let opts = options(g, k, colors, forests, v);
        if best.as_ref().is_none_or(|(_, b)| opts.len() < b.len()) {
            let empty = opts.is_empty();
            best = Some((idx, opts));
            if empty {
                return false;
            }
        }
    }
    let (idx, opts) = best.unwrap();
    let v = free.swap_remove(idx);
    for c in opts {
        *nodes += 1;
        if *nodes > limit {
            break;
        }
        let mark = forests.checkpoint();
        forests.insert(g, colors, v, c);
        colors[v] = c;
        if go(g, k, colors, forests, free, nodes, limit) {
            return true;
        }
        colors[v] = UNCOLORED;
        forests.rollback(mark);
    }
    free.push(v);
    let last = free.len() - 1;
    free.swap(idx, last);
    false
}
