//! Simple undirected graphs on dense vertex ids `0..n`.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub type Vertex = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("a graph needs at least one vertex")]
    Empty,
    #[error("edge ({0}, {1}) is a loop")]
    Loop(Vertex, Vertex),
    #[error("edge ({0}, {1}) appears more than once")]
    DuplicateEdge(Vertex, Vertex),
    #[error("edge ({u}, {v}) has an endpoint outside 0..{n}")]
    EndpointOutOfRange { u: Vertex, v: Vertex, n: usize },
}

/// Immutable simple graph. Adjacency lists are strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
}

impl Graph {
    pub fn new<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::EndpointOutOfRange { u, v, n });
            }
            if u == v {
                return Err(GraphError::Loop(u, v));
            }
            if adj[u].contains(&v) {
                return Err(GraphError::DuplicateEdge(u, v));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { adj })
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.adj.len()
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn is_cubic(&self) -> bool {
        self.adj.iter().all(|list| list.len() == 3)
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.order()];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &w in &self.adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.order()
    }

    /// Length of a shortest cycle, or [`Girth::Acyclic`] for forests.
    pub fn girth(&self) -> Girth {
        self.vertices()
            .filter_map(|s| self.shortest_cycle_len_through(s, |_| true))
            .min()
            .map_or(Girth::Acyclic, Girth::Finite)
    }

    /// Checks whether `G[keep]` is acyclic; otherwise returns a cycle inside `keep`.
    pub fn induced_subgraph_is_forest(&self, keep: &[bool]) -> ForestCheck {
        assert_eq!(keep.len(), self.order(), "keep mask must cover every vertex");
        match self.find_induced_cycle(|v| keep[v]) {
            Some(cycle) => ForestCheck::Cycle(cycle),
            None => ForestCheck::Forest,
        }
    }

    /// Depth-first search for a cycle in the subgraph induced by `allowed`.
    pub fn find_induced_cycle(&self, allowed: impl Fn(Vertex) -> bool) -> Option<CycleWitness> {
        const WHITE: u8 = 0;
        const GRAY: u8 = 1;
        const BLACK: u8 = 2;
        let n = self.order();
        let mut state = vec![WHITE; n];
        let mut parent = vec![usize::MAX; n];
        // (vertex, index of the next neighbor to look at)
        let mut stack: Vec<(Vertex, usize)> = Vec::new();
        for root in 0..n {
            if state[root] != WHITE || !allowed(root) {
                continue;
            }
            state[root] = GRAY;
            stack.push((root, 0));
            while let Some(&mut (u, ref mut next)) = stack.last_mut() {
                if let Some(&w) = self.adj[u].get(*next) {
                    *next += 1;
                    if !allowed(w) || w == parent[u] {
                        continue;
                    }
                    match state[w] {
                        WHITE => {
                            state[w] = GRAY;
                            parent[w] = u;
                            stack.push((w, 0));
                        }
                        GRAY => {
                            let start = stack.iter().position(|&(x, _)| x == w).unwrap();
                            let vertices = stack[start..].iter().map(|&(x, _)| x).collect();
                            return Some(CycleWitness { vertices });
                        }
                        _ => {}
                    }
                } else {
                    state[u] = BLACK;
                    stack.pop();
                }
            }
        }
        None
    }

    /// Length of a shortest cycle through `s` using only `allowed` vertices
    /// (besides `s` itself).
    pub fn shortest_cycle_len_through(
        &self,
        s: Vertex,
        allowed: impl Fn(Vertex) -> bool,
    ) -> Option<usize> {
        let (dist, branch) = self.branch_bfs(s, &allowed);
        let mut best: Option<usize> = None;
        for x in self.vertices() {
            if x == s || dist[x] == usize::MAX {
                continue;
            }
            for &y in &self.adj[x] {
                if y == s || y < x || dist[y] == usize::MAX || branch[x] == branch[y] {
                    continue;
                }
                let len = dist[x] + dist[y] + 1;
                best = Some(best.map_or(len, |b| b.min(len)));
            }
        }
        best
    }

    /// A shortest cycle through `s` inside `allowed ∪ {s}`; among all shortest
    /// ones, the lexicographically smallest vertex sequence starting at `s`.
    pub fn shortest_cycle_through(
        &self,
        s: Vertex,
        allowed: impl Fn(Vertex) -> bool,
    ) -> Option<CycleWitness> {
        let len = self.shortest_cycle_len_through(s, &allowed)?;
        let (dist, _) = self.branch_bfs(s, &allowed);
        let mut on_path = vec![false; self.order()];
        let mut path = vec![s];
        on_path[s] = true;
        if self.lex_cycle_dfs(s, len, &allowed, &dist, &mut path, &mut on_path) {
            Some(CycleWitness { vertices: path })
        } else {
            None
        }
    }

    fn lex_cycle_dfs(
        &self,
        s: Vertex,
        len: usize,
        allowed: &impl Fn(Vertex) -> bool,
        dist: &[usize],
        path: &mut Vec<Vertex>,
        on_path: &mut [bool],
    ) -> bool {
        let u = *path.last().unwrap();
        if path.len() == len {
            return self.has_edge(u, s);
        }
        for &w in &self.adj[u] {
            if on_path[w] || w == s || !allowed(w) || dist[w] == usize::MAX {
                continue;
            }
            // path.len() edges used after stepping to w; dist[w] more to get home
            if path.len() + dist[w] > len {
                continue;
            }
            path.push(w);
            on_path[w] = true;
            if self.lex_cycle_dfs(s, len, allowed, dist, path, on_path) {
                return true;
            }
            on_path[w] = false;
            path.pop();
        }
        false
    }

    /// BFS from `s` through allowed vertices, labelling every reached vertex
    /// with the neighbor of `s` its tree path starts with.
    fn branch_bfs(&self, s: Vertex, allowed: &impl Fn(Vertex) -> bool) -> (Vec<usize>, Vec<Vertex>) {
        let n = self.order();
        let mut dist = vec![usize::MAX; n];
        let mut branch = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        dist[s] = 0;
        for &a in &self.adj[s] {
            if allowed(a) {
                dist[a] = 1;
                branch[a] = a;
                queue.push_back(a);
            }
        }
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if dist[w] == usize::MAX && allowed(w) {
                    dist[w] = dist[u] + 1;
                    branch[w] = branch[u];
                    queue.push_back(w);
                }
            }
        }
        (dist, branch)
    }
}

/// Result of [`Graph::induced_subgraph_is_forest`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ForestCheck {
    Forest,
    Cycle(CycleWitness),
}

impl ForestCheck {
    pub fn is_forest(&self) -> bool {
        matches!(self, ForestCheck::Forest)
    }
}

/// Cyclic vertex sequence; consecutive entries (and last/first) are adjacent.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CycleWitness {
    pub vertices: Vec<Vertex>,
}

impl CycleWitness {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// True if this is a genuine cycle of `g`: length ≥ 3, distinct entries,
    /// cyclically consecutive entries adjacent.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        let vs = &self.vertices;
        if vs.len() < 3 || vs.iter().any(|&v| v >= g.order()) {
            return false;
        }
        let mut seen = vec![false; g.order()];
        for &v in vs {
            if std::mem::replace(&mut seen[v], true) {
                return false;
            }
        }
        (0..vs.len()).all(|i| g.has_edge(vs[i], vs[(i + 1) % vs.len()]))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Girth {
    Finite(usize),
    /// The graph is a forest.
    Acyclic,
}

impl Girth {
    pub fn finite(self) -> Option<usize> {
        match self {
            Girth::Finite(g) => Some(g),
            Girth::Acyclic => None,
        }
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Acyclic => f.write_str("acyclic"),
        }
    }
}

impl Serialize for Girth {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Girth::Finite(g) => serializer.serialize_u64(*g as u64),
            Girth::Acyclic => serializer.serialize_str("acyclic"),
        }
    }
}

impl<'de> Deserialize<'de> for Girth {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(usize),
            Text(String),
        }
        match Raw::deserialize(deserializer)? {
            Raw::Num(g) => Ok(Girth::Finite(g)),
            Raw::Text(t) if t == "acyclic" => Ok(Girth::Acyclic),
            Raw::Text(t) => Err(serde::de::Error::custom(format!("bad girth {t:?}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4() -> Graph {
        Graph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    fn k33() -> Graph {
        let edges = (0..3).flat_map(|a| (3..6).map(move |b| (a, b)));
        Graph::new(6, edges).unwrap()
    }

    /// girth as min over edges uv of 1 + dist(u, v) in G - uv.
    fn girth_by_edge_removal(g: &Graph) -> Option<usize> {
        let mut best = None;
        for (u, v) in g.edges() {
            let mut dist = vec![usize::MAX; g.order()];
            let mut queue = VecDeque::from([u]);
            dist[u] = 0;
            while let Some(x) = queue.pop_front() {
                for &y in g.neighbors(x) {
                    if (x == u && y == v) || (x == v && y == u) || dist[y] != usize::MAX {
                        continue;
                    }
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
            if dist[v] != usize::MAX {
                let len = dist[v] + 1;
                best = Some(best.map_or(len, |b: usize| b.min(len)));
            }
        }
        best
    }

    #[test]
    fn construction_errors_name_the_pair() {
        assert_eq!(Graph::new(3, [(1, 1)]), Err(GraphError::Loop(1, 1)));
        assert_eq!(Graph::new(3, [(0, 1), (1, 0)]), Err(GraphError::DuplicateEdge(1, 0)));
        assert_eq!(
            Graph::new(3, [(0, 3)]),
            Err(GraphError::EndpointOutOfRange { u: 0, v: 3, n: 3 })
        );
        assert_eq!(Graph::new(0, []), Err(GraphError::Empty));
    }

    #[test]
    fn single_vertex() {
        let g = Graph::new(1, []).unwrap();
        assert_eq!((g.order(), g.size()), (1, 0));
        assert_eq!(g.girth(), Girth::Acyclic);
    }

    #[test]
    fn k4_basics() {
        let g = k4();
        assert!(g.is_cubic());
        assert_eq!(g.size(), 6);
        assert_eq!(g.girth(), Girth::Finite(3));
        let cycle = match g.induced_subgraph_is_forest(&[true; 4]) {
            ForestCheck::Cycle(c) => c,
            ForestCheck::Forest => panic!("K4 has triangles"),
        };
        assert_eq!(cycle.len(), 3);
        assert!(cycle.is_valid_in(&g));
        assert!(g.induced_subgraph_is_forest(&[false; 4]).is_forest());
    }

    #[test]
    fn star_is_not_cubic() {
        let g = Graph::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(!g.is_cubic());
        assert_eq!(g.girth(), Girth::Acyclic);
    }

    #[test]
    fn k33_girth_four() {
        let g = k33();
        assert!(g.is_cubic());
        assert_eq!(g.girth(), Girth::Finite(4));
        assert_eq!(girth_by_edge_removal(&g), Some(4));
    }

    #[test]
    fn lexicographic_shortest_cycle() {
        let g = k33();
        let c = g.shortest_cycle_through(0, |_| true).unwrap();
        assert_eq!(c.vertices, vec![0, 3, 1, 4]);
        let c = g.shortest_cycle_through(4, |v| v != 0).unwrap();
        assert_eq!(c.vertices, vec![4, 1, 3, 2]);
        assert!(g.shortest_cycle_through(0, |v| v == 3 || v == 1).is_none());
    }

    #[test]
    fn girth_serializes_marker() {
        assert_eq!(serde_json::to_string(&Girth::Acyclic).unwrap(), "\"acyclic\"");
        assert_eq!(serde_json::to_string(&Girth::Finite(5)).unwrap(), "5");
        let back: Girth = serde_json::from_str("\"acyclic\"").unwrap();
        assert_eq!(back, Girth::Acyclic);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_graph() -> impl Strategy<Value = Graph> {
            (1usize..=12).prop_flat_map(|n| {
                let pairs: Vec<(usize, usize)> =
                    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
                let len = pairs.len();
                proptest::collection::vec(any::<bool>(), len).prop_map(move |mask| {
                    let edges = pairs.iter().zip(&mask).filter(|(_, &m)| m).map(|(&e, _)| e);
                    Graph::new(n, edges).unwrap()
                })
            })
        }

        fn components_and_edges(g: &Graph, keep: &[bool]) -> (usize, usize, usize) {
            let mut seen = vec![false; g.order()];
            let (mut comps, mut verts) = (0, 0);
            for s in g.vertices().filter(|&v| keep[v]) {
                verts += 1;
                if seen[s] {
                    continue;
                }
                comps += 1;
                seen[s] = true;
                let mut stack = vec![s];
                while let Some(u) = stack.pop() {
                    for &w in g.neighbors(u) {
                        if keep[w] && !seen[w] {
                            seen[w] = true;
                            stack.push(w);
                        }
                    }
                }
            }
            let edges = g.edges().filter(|&(u, v)| keep[u] && keep[v]).count();
            (comps, edges, verts)
        }

        proptest! {
            #[test]
            fn adjacency_is_symmetric(g in arb_graph()) {
                for u in g.vertices() {
                    for &v in g.neighbors(u) {
                        prop_assert!(g.neighbors(v).contains(&u));
                        prop_assert_ne!(u, v);
                    }
                    prop_assert!(g.neighbors(u).windows(2).all(|w| w[0] < w[1]));
                }
            }

            #[test]
            fn forest_check_matches_counting(g in arb_graph(), seed in any::<u64>()) {
                let keep: Vec<bool> = g.vertices().map(|v| (seed >> (v % 64)) & 1 == 1).collect();
                let (c, m, v) = components_and_edges(&g, &keep);
                match g.induced_subgraph_is_forest(&keep) {
                    ForestCheck::Forest => prop_assert_eq!(m + c, v),
                    ForestCheck::Cycle(cycle) => {
                        prop_assert!(m + c > v);
                        prop_assert!(cycle.is_valid_in(&g));
                        prop_assert!(cycle.vertices.iter().all(|&x| keep[x]));
                    }
                }
            }

            #[test]
            fn girth_matches_edge_removal(g in arb_graph()) {
                prop_assert_eq!(g.girth().finite(), girth_by_edge_removal(&g));
            }

            #[test]
            fn shortest_cycle_is_valid(g in arb_graph(), s in 0usize..12) {
                let s = s % g.order();
                if let Some(c) = g.shortest_cycle_through(s, |_| true) {
                    prop_assert!(c.is_valid_in(&g));
                    prop_assert_eq!(c.vertices[0], s);
                    prop_assert_eq!(Some(c.len()), g.shortest_cycle_len_through(s, |_| true));
                }
            }
        }
    }
}
