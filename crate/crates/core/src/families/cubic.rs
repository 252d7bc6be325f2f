//! Connected cubic graphs of small order, one per isomorphism class.

use std::collections::HashMap;

use crate::graph::Graph;

/// Every connected cubic graph on `n` vertices up to isomorphism, for even
/// `n` with `4 <= n <= 12`. Odd or out-of-range `n` gives an empty list.
///
/// Candidates come from lazy labeling (each vertex is completed in turn and
/// may only open the next unused id), which reaches every class; repeats
/// are then removed with a degree-constrained isomorphism test.
pub fn connected_cubic_graphs(n: usize) -> Vec<Graph> {
    if n < 4 || n % 2 == 1 || n > 12 {
        return Vec::new();
    }
    let mut raw = Vec::new();
    let mut adj = vec![Vec::with_capacity(3); n];
    extend(&mut adj, 0, 1, 1, &mut raw);

    let mut buckets: HashMap<Vec<Vec<usize>>, Vec<usize>> = HashMap::new();
    let mut reps: Vec<Graph> = Vec::new();
    for adj in raw {
        let g = Graph::new(n, edges_of(&adj)).expect("generator keeps graphs simple");
        let inv = invariant(&g);
        let bucket = buckets.entry(inv.multiset()).or_default();
        if bucket.iter().all(|&r| !isomorphic(&reps[r], &g)) {
            bucket.push(reps.len());
            reps.push(g);
        }
    }
    reps
}

fn edges_of(adj: &[Vec<usize>]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for (u, nbrs) in adj.iter().enumerate() {
        out.extend(nbrs.iter().filter(|&&v| u < v).map(|&v| (u, v)));
    }
    out
}

/// Completes vertex `v`; candidate partners are `>= lo`, below `touched`,
/// or exactly the first untouched id.
fn extend(adj: &mut Vec<Vec<usize>>, v: usize, lo: usize, touched: usize, out: &mut Vec<Vec<Vec<usize>>>) {
    let n = adj.len();
    if v == n {
        out.push(adj.clone());
        return;
    }
    if v >= touched {
        return;
    }
    if adj[v].len() == 3 {
        extend(adj, v + 1, v + 2, touched, out);
        return;
    }
    let hi = touched.min(n - 1);
    for w in lo.max(v + 1)..=hi {
        if adj[w].len() == 3 || adj[v].contains(&w) {
            continue;
        }
        adj[v].push(w);
        adj[w].push(v);
        extend(adj, v, w + 1, touched.max(w + 1), out);
        adj[v].pop();
        adj[w].pop();
    }
}

struct Invariant {
    per_vertex: Vec<Vec<usize>>,
}

impl Invariant {
    fn multiset(&self) -> Vec<Vec<usize>> {
        let mut all = self.per_vertex.clone();
        all.sort();
        all
    }
}

/// BFS layer sizes from each vertex, prefixed by its triangle count.
fn invariant(g: &Graph) -> Invariant {
    let n = g.order();
    let per_vertex = g
        .vertices()
        .map(|s| {
            let triangles = g
                .neighbors(s)
                .iter()
                .enumerate()
                .flat_map(|(i, &a)| g.neighbors(s)[i + 1..].iter().map(move |&b| (a, b)))
                .filter(|&(a, b)| g.has_edge(a, b))
                .count();
            let mut dist = vec![usize::MAX; n];
            dist[s] = 0;
            let mut queue = std::collections::VecDeque::from([s]);
            let mut layers = vec![triangles];
            while let Some(u) = queue.pop_front() {
                if dist[u] + 1 >= layers.len() {
                    layers.push(0);
                }
                for &w in g.neighbors(u) {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        layers[dist[w]] += 1;
                        queue.push_back(w);
                    }
                }
            }
            layers
        })
        .collect();
    Invariant { per_vertex }
}

pub(crate) fn isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.order() != h.order() || g.size() != h.size() {
        return false;
    }
    let (ig, ih) = (invariant(g), invariant(h));
    if ig.multiset() != ih.multiset() {
        return false;
    }
    // BFS order of g so that every later vertex has an earlier neighbor.
    let n = g.order();
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    for s in g.vertices() {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        order.push(s);
        let mut head = order.len() - 1;
        while head < order.len() {
            let u = order[head];
            head += 1;
            for &w in g.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    order.push(w);
                }
            }
        }
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    match_from(g, h, &ig, &ih, &order, 0, &mut map, &mut used)
}

#[allow(clippy::too_many_arguments)]
fn match_from(
    g: &Graph,
    h: &Graph,
    ig: &Invariant,
    ih: &Invariant,
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    let Some(&v) = order.get(depth) else {
        return true;
    };
    let anchor = g.neighbors(v).iter().copied().find(|&u| map[u] != usize::MAX);
    let candidates: Vec<usize> = match anchor {
        Some(u) => h.neighbors(map[u]).to_vec(),
        None => h.vertices().collect(),
    };
    for x in candidates {
        if used[x] || ig.per_vertex[v] != ih.per_vertex[x] {
            continue;
        }
        let consistent = g.vertices().filter(|&u| map[u] != usize::MAX).all(|u| g.has_edge(u, v) == h.has_edge(map[u], x));
        if !consistent {
            continue;
        }
        map[v] = x;
        used[x] = true;
        if match_from(g, h, ig, ih, order, depth + 1, map, used) {
            return true;
        }
        map[v] = usize::MAX;
        used[x] = false;
    }
    false
}
