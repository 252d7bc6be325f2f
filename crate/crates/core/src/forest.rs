//! Incremental acyclicity tracking for colorings under construction.
//!
//! One union-find per unordered color pair `{a, b}` holds the components of
//! `G[V_a ∪ V_b]` restricted to the vertices colored so far. Union by size
//! without path compression keeps every operation undoable.

use crate::graph::{Graph, Vertex};

pub(crate) const UNCOLORED: u32 = 0;

#[derive(Debug, Clone)]
pub struct PairForests {
    n: usize,
    k: usize,
    parent: Vec<u32>,
    size: Vec<u32>,
    /// (slot that was attached, slot it was attached to)
    log: Vec<(u32, u32)>,
}

impl PairForests {
    /// Empty forests for colors `1..=k` on `n` vertices.
    pub fn new(n: usize, k: usize) -> Self {
        let slots = (k + 1) * (k + 1) * n;
        PairForests {
            n,
            k,
            parent: (0..slots as u32).collect(),
            size: vec![1; slots],
            log: Vec::new(),
        }
    }

    /// Forests for a complete or partial coloring (`0` marks uncolored).
    /// Returns `None` if the coloring already has a bi-colored cycle.
    pub fn from_colors(g: &Graph, k: usize, colors: &[u32]) -> Option<Self> {
        let mut forests = PairForests::new(g.order(), k);
        for v in g.vertices() {
            if colors[v] == UNCOLORED {
                continue;
            }
            for &u in g.neighbors(v).iter().filter(|&&u| u < v) {
                if colors[u] != UNCOLORED && !forests.union(colors[v], colors[u], v, u) {
                    return None;
                }
            }
        }
        Some(forests)
    }

    pub fn palette(&self) -> usize {
        self.k
    }

    #[inline]
    fn slot(&self, a: u32, b: u32, v: Vertex) -> usize {
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        (lo as usize * (self.k + 1) + hi as usize) * self.n + v
    }

    #[inline]
    fn root(&self, mut s: usize) -> usize {
        while self.parent[s] as usize != s {
            s = self.parent[s] as usize;
        }
        s
    }

    /// True if `u` and `v` lie in one component of the `{a, b}` forest.
    #[inline]
    pub fn connected(&self, a: u32, b: u32, u: Vertex, v: Vertex) -> bool {
        self.root(self.slot(a, b, u)) == self.root(self.slot(a, b, v))
    }

    /// Joins `u` and `v` in the `{a, b}` forest. Returns false (and changes
    /// nothing) if they were already connected.
    pub fn union(&mut self, a: u32, b: u32, u: Vertex, v: Vertex) -> bool {
        let ru = self.root(self.slot(a, b, u));
        let rv = self.root(self.slot(a, b, v));
        if ru == rv {
            return false;
        }
        let (small, big) = if self.size[ru] < self.size[rv] { (ru, rv) } else { (rv, ru) };
        self.parent[small] = big as u32;
        self.size[big] += self.size[small];
        self.log.push((small as u32, big as u32));
        true
    }

    /// Would giving `v` color `c` close a bi-colored cycle? `colors` is the
    /// current (partial) coloring and `v` must not yet be inserted with `c`.
    pub fn closes_cycle(&self, g: &Graph, colors: &[u32], v: Vertex, c: u32) -> bool {
        let nbrs = g.neighbors(v);
        for (i, &a) in nbrs.iter().enumerate() {
            let m = colors[a];
            if m == UNCOLORED || m == c {
                continue;
            }
            for &b in &nbrs[i + 1..] {
                if colors[b] == m && self.connected(c, m, a, b) {
                    return true;
                }
            }
        }
        false
    }

    /// Adds `v` with color `c`, linking it to its colored neighbors.
    /// Call only after [`closes_cycle`](Self::closes_cycle) returned false.
    pub fn insert(&mut self, g: &Graph, colors: &[u32], v: Vertex, c: u32) {
        for &u in g.neighbors(v) {
            let m = colors[u];
            if m != UNCOLORED && m != c {
                let fresh = self.union(c, m, v, u);
                debug_assert!(fresh, "insert called on a cycle-closing vertex");
            }
        }
    }

    pub fn checkpoint(&self) -> usize {
        self.log.len()
    }

    pub fn rollback(&mut self, to: usize) {
        while self.log.len() > to {
            let (small, big) = self.log.pop().unwrap();
            self.parent[small as usize] = small;
            self.size[big as usize] -= self.size[small as usize];
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn detects_even_cycle_and_rolls_back() {
        // C4: 0-1-2-3-0
        let g = Graph::new(4, [(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        let mut colors = vec![UNCOLORED; 4];
        let mut f = PairForests::new(4, 3);
        for (v, c) in [(0, 1), (1, 2), (2, 1)] {
            assert!(!f.closes_cycle(&g, &colors, v, c));
            f.insert(&g, &colors, v, c);
            colors[v] = c;
        }
        let mark = f.checkpoint();
        assert!(f.closes_cycle(&g, &colors, 3, 2));
        assert!(!f.closes_cycle(&g, &colors, 3, 3));
        f.insert(&g, &colors, 3, 3);
        f.rollback(mark);
        assert!(!f.connected(1, 3, 0, 3));
        assert!(f.connected(1, 2, 0, 2));
    }

    #[test]
    fn from_colors_rejects_cyclic() {
        let g = Graph::new(4, [(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        assert!(PairForests::from_colors(&g, 2, &[1, 2, 1, 2]).is_none());
        assert!(PairForests::from_colors(&g, 3, &[1, 2, 1, 3]).is_some());
    }
}
