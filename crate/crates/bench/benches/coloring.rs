use abchrome::coloring::{is_ab_minimal, is_acyclic};
use abchrome::constructions::{color_0j_prism5, color_gp5};
use abchrome::families::{self, CubicTree};
use abchrome::solver::{decycle_4coloring, greedy_acyclic};
use abchrome::Coloring;
use criterion::{criterion_group, criterion_main, Criterion};

fn checks(c: &mut Criterion) {
    let fixture = families::example48();
    let (g, col) = (&fixture.graph.graph, &fixture.coloring);
    c.bench_function("is_acyclic/example48", |b| b.iter(|| is_acyclic(g, col).unwrap()));
    c.bench_function("is_ab_minimal/example48", |b| b.iter(|| is_ab_minimal(g, col).unwrap()));
}

fn decycler(c: &mut Criterion) {
    let g = families::gen_petersen(30, 7).unwrap().graph;
    let order: Vec<usize> = g.vertices().collect();
    let mut colors = vec![0; g.order()];
    for &v in &order {
        colors[v] = (1..=4).find(|&x| g.neighbors(v).iter().all(|&u| colors[u] != x)).unwrap();
    }
    let proper = Coloring::new(4, colors).unwrap();
    c.bench_function("decycle/G(30,7)", |b| b.iter(|| decycle_4coloring(&g, &proper).unwrap()));
    c.bench_function("greedy_acyclic/G(30,7)", |b| b.iter(|| greedy_acyclic(&g, &order)));
}

fn constructions(c: &mut Criterion) {
    c.bench_function("color_gp5/G(25,3)", |b| b.iter(|| color_gp5(25, 3).unwrap()));
    c.bench_function("color_gp5/G(45,4)", |b| b.iter(|| color_gp5(45, 4).unwrap()));
    c.bench_function("color_0j_prism5/(20,2)", |b| b.iter(|| color_0j_prism5(20, 2).unwrap()));
    let tree = CubicTree::star();
    c.bench_function("color_c_of_t4/star", |b| b.iter(|| abchrome::constructions::color_c_of_t4(&tree).unwrap()));
}

criterion_group!(benches, checks, decycler, constructions);
criterion_main!(benches);
