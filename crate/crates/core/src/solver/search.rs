use std::time::Instant;

use crate::coloring::{class_step, Color};
use crate::forest::{PairForests, UNCOLORED};
use crate::graph::{Graph, Vertex};

use super::SearchBudget;

/// Node and wall-clock accounting shared by every search in one solve.
pub(crate) struct Meter {
    pub nodes: u64,
    max_nodes: u64,
    deadline: Option<Instant>,
    pub exhausted: bool,
}

impl Meter {
    pub fn new(budget: &SearchBudget) -> Self {
        Meter {
            nodes: 0,
            max_nodes: budget.max_nodes.unwrap_or(u64::MAX),
            deadline: budget.max_millis.map(|ms| Instant::now() + std::time::Duration::from_millis(ms)),
            exhausted: false,
        }
    }

    /// Counts one node; false once the budget is spent.
    #[inline]
    pub fn tick(&mut self) -> bool {
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            self.exhausted = true;
        } else if self.nodes % 1024 == 0 {
            if let Some(d) = self.deadline {
                self.exhausted = Instant::now() >= d;
            }
        }
        !self.exhausted
    }
}

/// Highest-degree vertex first (smallest id on ties), then breadth-first,
/// neighbors by descending degree. Remaining components follow the same rule.
pub(crate) fn search_order(g: &Graph) -> Vec<Vertex> {
    let n = g.order();
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    while order.len() < n {
        let start = g
            .vertices()
            .filter(|&v| !seen[v])
            .min_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v))
            .unwrap();
        seen[start] = true;
        order.push(start);
        let mut head = order.len() - 1;
        while head < order.len() {
            let u = order[head];
            head += 1;
            let mut next: Vec<Vertex> = g.neighbors(u).iter().copied().filter(|&w| !seen[w]).collect();
            next.sort_by_key(|&w| (std::cmp::Reverse(g.degree(w)), w));
            for w in next {
                seen[w] = true;
                order.push(w);
            }
        }
    }
    order
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Leaf {
    /// Any proper coloring with at most `k` colors.
    Any,
    /// Every class holds a b-vertex.
    BColoring,
    /// No class admits an acyclic recoloring step.
    Minimal,
}

#[derive(Debug, Clone, Copy)]
pub(crate) struct Spec {
    pub k: Color,
    pub acyclic: bool,
    pub exact_k: bool,
    pub symmetry: bool,
    pub leaf: Leaf,
}

pub(crate) enum Found {
    Coloring(Vec<Color>),
    None,
    Aborted,
}

pub(crate) fn find(g: &Graph, spec: Spec, meter: &mut Meter) -> Found {
    let n = g.order();
    let mut s = Dfs {
        g,
        spec,
        order: search_order(g),
        colors: vec![UNCOLORED; n],
        count: vec![0; spec.k as usize + 1],
        distinct: 0,
        forests: PairForests::new(n, spec.k as usize),
        meter,
    };
    match s.go(0) {
        Flow::Found => Found::Coloring(s.colors),
        Flow::Exhausted => Found::None,
        Flow::Abort => Found::Aborted,
    }
}

enum Flow {
    Found,
    Exhausted,
    Abort,
}

struct Dfs<'a, 'm> {
    g: &'a Graph,
    spec: Spec,
    order: Vec<Vertex>,
    colors: Vec<Color>,
    count: Vec<usize>,
    distinct: usize,
    forests: PairForests,
    meter: &'m mut Meter,
}

impl Dfs<'_, '_> {
    fn go(&mut self, depth: usize) -> Flow {
        let k = self.spec.k as usize;
        let n = self.order.len();
        if self.spec.exact_k && n - depth < k - self.distinct {
            return Flow::Exhausted;
        }
        if depth == n {
            return if self.leaf_ok() { Flow::Found } else { Flow::Exhausted };
        }
        let v = self.order[depth];
        let limit = if self.spec.symmetry { (self.distinct + 1).min(k) } else { k };
        for c in 1..=limit as Color {
            if self.g.neighbors(v).iter().any(|&u| self.colors[u] == c) {
                continue;
            }
            if self.spec.acyclic && self.forests.closes_cycle(self.g, &self.colors, v, c) {
                continue;
            }
            if !self.meter.tick() {
                return Flow::Abort;
            }
            let mark = self.forests.checkpoint();
            if self.spec.acyclic {
                self.forests.insert(self.g, &self.colors, v, c);
            }
            self.colors[v] = c;
            self.count[c as usize] += 1;
            if self.count[c as usize] == 1 {
                self.distinct += 1;
            }
            let flow = self.go(depth + 1);
            if matches!(flow, Flow::Found) {
                return flow;
            }
            if self.count[c as usize] == 1 {
                self.distinct -= 1;
            }
            self.count[c as usize] -= 1;
            self.colors[v] = UNCOLORED;
            self.forests.rollback(mark);
            if matches!(flow, Flow::Abort) {
                return flow;
            }
        }
        Flow::Exhausted
    }

    fn leaf_ok(&mut self) -> bool {
        match self.spec.leaf {
            Leaf::Any => true,
            Leaf::BColoring => has_b_vertex_everywhere(self.g, &self.colors, self.spec.k),
            Leaf::Minimal => {
                let k = self.spec.k;
                let mut classes = vec![Vec::new(); k as usize + 1];
                for (v, &c) in self.colors.iter().enumerate() {
                    classes[c as usize].push(v);
                }
                // smaller classes first: they are the likeliest to admit a step
                let mut ids: Vec<usize> = (1..=k as usize).filter(|&i| !classes[i].is_empty()).collect();
                ids.sort_by_key(|&i| classes[i].len());
                ids.into_iter().all(|i| {
                    self.meter.tick();
                    class_step(self.g, &self.colors, k, &mut self.forests, &classes[i]).is_err()
                })
            }
        }
    }
}

pub(crate) fn has_b_vertex_everywhere(g: &Graph, colors: &[Color], k: Color) -> bool {
    let mut has = vec![false; k as usize + 1];
    for v in g.vertices() {
        let c = colors[v] as usize;
        if has[c] || g.degree(v) + 1 < k as usize {
            continue;
        }
        let mut seen = vec![false; k as usize + 1];
        seen[c] = true;
        for &u in g.neighbors(v) {
            seen[colors[u] as usize] = true;
        }
        if seen[1..].iter().all(|&s| s) {
            has[c] = true;
        }
    }
    has[1..].iter().all(|&h| h)
}
