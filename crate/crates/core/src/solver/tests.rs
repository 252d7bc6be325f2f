use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::coloring::{is_acyclic, AcyclicCheck};
use crate::families::{self, gen_petersen};

fn unlimited() -> SearchBudget {
    SearchBudget::unlimited()
}

fn gp(n: usize, k: usize) -> Graph {
    gen_petersen(n, k).unwrap().graph
}

/// Pairing-model cubic graph; retries until simple.
fn random_cubic(n: usize, rng: &mut ChaCha8Rng) -> Graph {
    loop {
        let mut points: Vec<usize> = (0..3 * n).collect();
        points.shuffle(rng);
        let edges: Vec<_> = points.chunks(2).map(|p| (p[0] / 3, p[1] / 3)).collect();
        if let Ok(g) = Graph::new(n, edges) {
            return g;
        }
    }
}

fn random_proper4(g: &Graph, rng: &mut ChaCha8Rng) -> Option<Coloring> {
    let mut colors = vec![0; g.order()];
    let mut order: Vec<Vertex> = g.vertices().collect();
    order.shuffle(rng);
    for v in order {
        let mut pal = [1, 2, 3, 4];
        pal.shuffle(rng);
        colors[v] = pal.into_iter().find(|&c| g.neighbors(v).iter().all(|&u| colors[u] != c))?;
    }
    Some(Coloring::new(4, colors).unwrap())
}

/// Every proper coloring with exactly `k` colors, no symmetry breaking,
/// filtered by the definitional checks.
fn naive_ab(g: &Graph) -> usize {
    let n = g.order();
    for k in (1..=ab_upper_bound(g)).rev() {
        let mut colors = vec![1u32; n];
        loop {
            let used = colors.iter().collect::<std::collections::BTreeSet<_>>().len();
            if used == k && g.edges().all(|(u, v)| colors[u] != colors[v]) {
                let c = Coloring::new(k as Color, colors.clone()).unwrap();
                if is_acyclic(g, &c).unwrap() == AcyclicCheck::Acyclic && is_ab_minimal(g, &c).unwrap().is_minimal() {
                    return k;
                }
            }
            let mut p = 0;
            while p < n && colors[p] == k as Color {
                colors[p] = 1;
                p += 1;
            }
            if p == n {
                break;
            }
            colors[p] += 1;
        }
    }
    unreachable!()
}

fn small_fixtures() -> Vec<(&'static str, Graph)> {
    vec![
        ("K4", families::complete(4)),
        ("K33", families::k33().graph),
        ("prism3", gp(3, 1)),
        ("G(4,1)", gp(4, 1)),
        ("cube", families::cube()),
        ("C6", families::cycle(6)),
    ]
}

fn verify_minimal(g: &Graph, s: &Solved) {
    assert_eq!(s.witness.used_count(), s.value);
    assert_eq!(is_acyclic(g, &s.witness).unwrap(), AcyclicCheck::Acyclic);
    assert!(is_ab_minimal(g, &s.witness).unwrap().is_minimal());
}

#[test]
fn acyclic_chromatic_numbers() {
    // K3,3: the sides need disjoint color sets, so with 3 colors one side is
    // monochromatic and two equal colors on the other close a 4-cycle.
    // The Petersen graph has no acyclic 3-coloring (checked by brute force).
    for (g, want) in [(families::complete(4), 4), (families::cycle(6), 3), (gp(5, 2), 4), (families::k33().graph, 4)] {
        let s = compute_a(&g, &unlimited()).unwrap();
        assert_eq!(s.value, want);
        assert_eq!(is_acyclic(&g, &s.witness).unwrap(), AcyclicCheck::Acyclic);
        assert!(s.witness.used_count() <= want);
    }
}

#[test]
fn b_chromatic_numbers() {
    let cases = [
        (gp(5, 2), 3),
        (families::k33().graph, 2),
        (families::complete(4), 4),
        (gp(3, 1), 3),
        (families::g1().graph, 3),
    ];
    for (g, want) in cases {
        let s = compute_phi(&g, &unlimited()).unwrap();
        assert_eq!(s.value, want);
        assert!(search::has_b_vertex_everywhere(&g, s.witness.as_slice(), want as Color));
    }
}

#[test]
fn acyclic_b_chromatic_small() {
    for (g, want) in [(gp(3, 1), 3), (gp(5, 2), 4), (gp(4, 1), 4), (families::complete(4), 4)] {
        let s = compute_ab(&g, &unlimited()).unwrap();
        assert_eq!(s.value, want);
        verify_minimal(&g, &s);
    }
}

#[test]
fn ab_matches_naive_oracle() {
    for (name, g) in small_fixtures() {
        let fast = compute_ab(&g, &unlimited()).unwrap();
        assert_eq!(fast.value, naive_ab(&g), "{name}");
        verify_minimal(&g, &fast);
    }
}

#[test]
fn symmetry_breaking_is_sound() {
    for (name, g) in small_fixtures() {
        let with = compute_ab_with(&g, &unlimited(), true).unwrap().value;
        let without = compute_ab_with(&g, &unlimited(), false).unwrap().value;
        assert_eq!(with, without, "{name}");
    }
}

#[test]
fn budget_exhaustion_reports_bounds() {
    let g = gp(5, 2);
    match compute_ab(&g, &SearchBudget::nodes(10)) {
        Err(SolveError::BudgetExhausted(b)) => {
            let lower = b.lower.unwrap();
            assert!(lower <= 4 && b.upper >= 4);
            let w = b.witness.unwrap();
            assert_eq!(w.used_count(), lower);
            assert!(is_ab_minimal(&g, &w).unwrap().is_minimal());
        }
        other => panic!("{other:?}"),
    }
    assert!(matches!(compute_phi(&g, &SearchBudget::nodes(5)), Err(SolveError::BudgetExhausted(_))));
    let zero_ms = SearchBudget { max_millis: Some(0), ..SearchBudget::default() };
    assert!(matches!(compute_ab(&gp(7, 1), &zero_ms), Err(SolveError::BudgetExhausted(_))));
}

#[test]
fn recoloring_from_trivial_reaches_minimal() {
    for (_, g) in small_fixtures() {
        let c = recoloring_algorithm(&g, &Coloring::trivial(g.order()));
        assert!(is_ab_minimal(&g, &c).unwrap().is_minimal());
        assert!(c.used_count() <= compute_ab(&g, &unlimited()).unwrap().value);
    }
}

#[test]
fn four_colorings() {
    assert_eq!(find_acyclic_b4(&gp(3, 1), &unlimited()).unwrap(), None);
    for g in [families::k33().graph, gp(6, 1), gp(5, 2), families::cube()] {
        let c = find_acyclic_b4(&g, &unlimited()).unwrap().unwrap();
        assert_eq!(c.used_count(), 4);
        assert!(is_ab_minimal(&g, &c).unwrap().is_minimal());
    }
    assert!(matches!(find_acyclic_b4(&families::cycle(5), &unlimited()), Err(SolveError::NotCubic)));
}

#[test]
fn conjecture_probe() {
    let k4 = probe_conjecture(&families::complete(4), &unlimited());
    assert_eq!((k4.phi, k4.hypothesis, k4.verdict), (Some(4), Some(false), ConjectureVerdict::Vacuous));
    let p = probe_conjecture(&gp(5, 2), &unlimited());
    assert_eq!((p.girth, p.phi, p.verdict), (Girth::Finite(5), Some(3), ConjectureVerdict::Vacuous));
    // a long even cycle: girth 12 > 2·φ = 6, and Ab(C12) = 3
    let c = probe_conjecture(&families::cycle(12), &unlimited());
    assert_eq!((c.hypothesis, c.ab, c.verdict), (Some(true), Some(3), ConjectureVerdict::Holds));
    let tight = probe_conjecture(&gp(5, 2), &SearchBudget::nodes(1));
    assert_eq!(tight.verdict, ConjectureVerdict::Inconclusive);
}

#[test]
fn solve_report_json() {
    let r = solve(&gp(3, 1), &[Target::A, Target::Phi, Target::Ab], &unlimited()).unwrap();
    let v = serde_json::to_value(&r).unwrap();
    assert_eq!(v["A"]["value"], 3);
    assert_eq!(v["phi"]["value"], 3);
    assert_eq!(v["Ab"]["value"], 3);
    assert_eq!(v["girth"], 3);
    assert_eq!(v["graph6"], "E{Sw");
    assert!(v.get("conjecture").is_none());
    assert!(!r.budget_exhausted());
    assert_eq!("ab".parse::<Target>(), Ok(Target::Ab));
}

#[test]
fn search_order_is_bfs_from_zero_on_regular_graphs() {
    let order = search_order(&gp(5, 2));
    assert_eq!(order[..4], [0, 1, 4, 5]);
    let star = Graph::new(4, [(3, 0), (3, 1), (3, 2)]).unwrap();
    assert_eq!(search_order(&star)[0], 3);
}

#[test]
fn decycler_leaves_acyclic_input_alone() {
    let f = families::gen_sporadic(families::Sporadic::K33);
    let (out, trace) = decycle_4coloring_traced(&f.graph.graph, &f.coloring).unwrap();
    assert_eq!(out, f.coloring);
    assert!(trace.steps.is_empty());
}

#[test]
fn decycler_on_k33() {
    let g = families::k33().graph;
    let c = Coloring::new(4, vec![1, 1, 3, 2, 2, 4]).unwrap();
    assert!(matches!(is_acyclic(&g, &c).unwrap(), AcyclicCheck::Cycle { pair: (1, 2), .. }));
    let out = decycle_4coloring(&g, &c).unwrap();
    assert_eq!(is_acyclic(&g, &out).unwrap(), AcyclicCheck::Acyclic);
    assert!(out.used_count() <= 4);
}

#[test]
fn decycler_rejects_bad_input() {
    let g = families::k33().graph;
    let c5 = Coloring::new(5, vec![1, 1, 1, 5, 2, 2]).unwrap();
    assert!(matches!(decycle_4coloring(&g, &c5), Err(SolveError::TooManyColors { .. })));
    let improper = Coloring::new(4, vec![1, 2, 3, 1, 2, 3]).unwrap();
    assert!(matches!(decycle_4coloring(&g, &improper), Err(SolveError::Coloring(ColoringError::Improper(..)))));
    let c4 = families::cycle(4);
    assert!(decycle_4coloring(&c4, &Coloring::trivial(4)).is_err());
}

#[test]
fn measure_counts_independent_cycles() {
    let q = families::cube();
    let bip: Vec<Color> = (0..8u32).map(|v| 1 + v.count_ones() % 2).collect();
    // the whole cube is bi-colored: 12 - 8 + 1
    assert_eq!(cycle_measure(&q, &bip), 5);
    assert_eq!(cycle_measure(&q, Coloring::trivial(8).as_slice()), 0);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn decycler_terminates_with_strict_progress(half in 2usize..=10, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_cubic(2 * half, &mut rng);
        let Some(c) = random_proper4(&g, &mut rng) else { return Ok(()) };
        let (out, trace) = decycle_4coloring_traced(&g, &c).unwrap();
        prop_assert_eq!(is_acyclic(&g, &out).unwrap(), AcyclicCheck::Acyclic);
        prop_assert!(out.as_slice().iter().all(|&x| x <= 4));
        prop_assert!(trace.measures.windows(2).all(|w| w[1] < w[0]));
        prop_assert_eq!(*trace.measures.last().unwrap(), 0);
    }
}
