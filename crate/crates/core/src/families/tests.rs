use std::collections::BTreeSet;

use proptest::prelude::*;

use super::cubic::isomorphic;
use super::*;
use crate::graph::Girth;

fn edge_set(g: &Graph) -> BTreeSet<(Vertex, Vertex)> {
    g.edges().collect()
}

#[test]
fn petersen_has_girth_five() {
    let p = gen_petersen(5, 2).unwrap().graph;
    assert!(p.is_cubic());
    assert_eq!(p.girth(), Girth::Finite(5));
}

#[test]
fn gp_6_2_adjacency() {
    let g = gen_petersen(6, 2).unwrap();
    let id = |s: &str| g.id_of(s).unwrap();
    for (a, b) in [("y0", "y2"), ("y0", "y4"), ("x0", "y0"), ("x0", "x1"), ("x5", "x0")] {
        assert!(g.graph.has_edge(id(a), id(b)), "{a}-{b}");
    }
    assert!(!g.graph.has_edge(id("y0"), id("y1")));
    assert!(g.graph.is_cubic());
}

#[test]
fn gp_parameter_range() {
    assert_eq!(gen_petersen(4, 2), Err(FamilyError::KOutOfRange { n: 4, k: 2 }));
    assert!(gen_petersen(5, 0).is_err());
    assert!(gen_petersen(3, 1).is_ok());
}

#[test]
fn prism_rotation_is_automorphism() {
    for n in 3..12 {
        let g = gen_petersen(n, 1).unwrap().graph;
        let rot = |v: Vertex| if v < n { (v + 1) % n } else { n + (v - n + 1) % n };
        for (u, v) in g.edges() {
            assert!(g.has_edge(rot(u), rot(v)));
        }
    }
}

#[test]
fn zero_offset_prism_is_ordinary_prism() {
    for rim in [4, 6, 10] {
        let a = gen_0j_prism(rim, 0).unwrap();
        let b = gen_petersen(rim, 1).unwrap();
        assert_eq!(edge_set(&a.graph), edge_set(&b.graph));
        assert_eq!(a.name(rim + 1), "v_1^2");
    }
}

#[test]
fn prism_0j_shapes_and_errors() {
    let g = gen_0j_prism(10, 2).unwrap().graph;
    assert!(g.is_cubic());
    assert_eq!((g.order(), g.size()), (20, 30));
    assert_eq!(gen_0j_prism(7, 2), Err(FamilyError::RimLength(7)));
    assert_eq!(gen_0j_prism(10, 3), Err(FamilyError::OddJ(3)));
    assert_eq!(gen_0j_prism(10, 6), Err(FamilyError::JOutOfRange { rim: 10, j: 6 }));
}

#[test]
fn prism_reflection() {
    // i -> -i maps the (0,j) spokes onto the (0,rim-j) spokes
    for rim in (4..=16).step_by(2) {
        for j in (0..rim).step_by(2) {
            let a = Graph::new(2 * rim, prism_edges(rim, j)).unwrap();
            let b = Graph::new(2 * rim, prism_edges(rim, (rim - j) % rim)).unwrap();
            let refl = |v: Vertex| if v < rim { (rim - v) % rim } else { rim + (2 * rim - v) % rim };
            for (u, v) in a.edges() {
                assert!(b.has_edge(refl(u), refl(v)), "rim {rim} j {j}");
            }
        }
    }
}

#[test]
fn h3_shape() {
    let h = gen_h3();
    let mut degrees: Vec<usize> = h.graph.vertices().map(|v| h.graph.degree(v)).collect();
    degrees.sort();
    assert_eq!(degrees, [2, 3, 3, 3, 3, 3, 3]);
    assert_eq!(h.graph.degree(h.id_of("w").unwrap()), 2);
    assert_eq!(gen_h3(), h);
}

#[test]
fn h3_rows_have_perfect_matching() {
    let h = gen_h3();
    let top = ["t0", "t1", "t2"].map(|s| h.id_of(s).unwrap());
    let bottom = ["b0", "b1", "b2"].map(|s| h.id_of(s).unwrap());
    let perms = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let found: Vec<_> = perms
        .iter()
        .filter(|p| (0..3).all(|i| h.graph.has_edge(top[i], bottom[p[i]])))
        .collect();
    assert_eq!(found, [&[0, 2, 1]]);
}

#[test]
fn c_of_t_small_cases() {
    let g = gen_c_of_t(&CubicTree::k2());
    assert_eq!(g.graph.order(), 14);
    assert!(g.graph.is_cubic());
    assert!(g.graph.has_edge(g.id_of("w#0").unwrap(), g.id_of("w#1").unwrap()));

    let g = gen_c_of_t(&CubicTree::star());
    assert_eq!(g.graph.order(), 24);
    assert!(g.graph.is_cubic() && g.graph.is_connected());
    // corners follow the sorted neighbor order of the center
    for (corner, leaf) in [("a#0", "w#1"), ("b#0", "w#2"), ("c#0", "w#3")] {
        assert!(g.graph.has_edge(g.id_of(corner).unwrap(), g.id_of(leaf).unwrap()));
    }
}

#[test]
fn invalid_trees() {
    // path on 3 vertices: the middle vertex has degree 2
    assert!(matches!(CubicTree::new(3, [(0, 1), (1, 2)]), Err(FamilyError::InvalidTree(_))));
    assert!(matches!(CubicTree::new(1, []), Err(FamilyError::InvalidTree(_))));
    assert!(matches!(
        CubicTree::new(4, [(0, 1), (2, 3)]),
        Err(FamilyError::InvalidTree(_))
    ));
}

#[test]
fn sporadic_fixtures() {
    let p3 = gen_sporadic(Sporadic::Prism3);
    assert_eq!(p3.coloring.as_slice(), [1, 2, 3, 3, 1, 2]);
    let k = gen_sporadic(Sporadic::K33);
    assert_eq!(k.coloring.as_slice(), [1, 2, 3, 4, 4, 4]);
    for s in Sporadic::ALL {
        let f = gen_sporadic(s);
        assert!(f.graph.graph.is_cubic(), "{s}");
        assert_eq!(s.name().parse::<Sporadic>().unwrap(), s);
    }
    assert_eq!(gen_sporadic(Sporadic::G1).graph.graph.order(), 10);
    assert!("cube".parse::<Sporadic>().is_err());
}

#[test]
fn example48_is_cubic() {
    let f = example48();
    assert_eq!((f.graph.graph.order(), f.graph.graph.size()), (48, 72));
    assert!(f.graph.graph.is_cubic() && f.graph.graph.is_connected());
    assert_eq!(f.coloring.palette(), 5);
    assert_eq!(f.graph.name(f.designated[0]), "c1");
}

#[test]
fn named_small_graphs() {
    assert!(complete(4).is_cubic());
    assert_eq!(cycle(6).size(), 6);
    assert!(cube().is_cubic());
    assert_eq!(cube().girth(), Girth::Finite(4));
}

#[test]
fn cubic_class_counts() {
    let counts: Vec<usize> = [4, 6, 8, 10].iter().map(|&n| connected_cubic_graphs(n).len()).collect();
    assert_eq!(counts, [1, 2, 5, 19]);
    assert!(connected_cubic_graphs(7).is_empty());
}

#[test]
fn cubic_lists_are_connected_cubic_and_distinct() {
    for n in [4, 6, 8, 10] {
        let gs = connected_cubic_graphs(n);
        for (i, g) in gs.iter().enumerate() {
            assert!(g.is_cubic() && g.is_connected());
            for h in &gs[..i] {
                assert!(!isomorphic(g, h));
            }
        }
    }
}

#[test]
fn isomorphism_detects_relabeling() {
    let p = gen_petersen(5, 2).unwrap().graph;
    let perm = [7, 2, 9, 0, 4, 1, 8, 3, 6, 5];
    let q = Graph::new(10, p.edges().map(|(u, v)| (perm[u], perm[v]))).unwrap();
    assert!(isomorphic(&p, &q));
    assert!(!isomorphic(&p, &gen_petersen(5, 1).unwrap().graph));
}

/// Grows a cubic tree by turning leaves into inner vertices.
fn random_tree(choices: &[usize]) -> CubicTree {
    let mut edges = vec![(0, 1)];
    let mut n = 2;
    for &c in choices {
        let mut deg = vec![0; n];
        for &(u, v) in &edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        let leaves: Vec<usize> = (0..n).filter(|&v| deg[v] == 1).collect();
        let leaf = leaves[c % leaves.len()];
        edges.push((leaf, n));
        edges.push((leaf, n + 1));
        n += 2;
    }
    CubicTree::new(n, edges).unwrap()
}

proptest! {
    #[test]
    fn c_of_t_vertex_count(choices in prop::collection::vec(any::<usize>(), 0..9)) {
        let t = random_tree(&choices);
        prop_assert!(t.leaves().len() <= 10);
        let g = gen_c_of_t(&t);
        prop_assert_eq!(g.graph.order(), 3 * t.inner().len() + 7 * t.leaves().len());
        prop_assert!(g.graph.is_cubic());
        prop_assert!(g.graph.is_connected());
    }

    #[test]
    fn generators_are_cubic(n in 3usize..30, k in 1usize..14) {
        prop_assume!(2 * k < n);
        let g = gen_petersen(n, k).unwrap();
        prop_assert!(g.graph.is_cubic());
        prop_assert_eq!(g.names.iter().collect::<BTreeSet<_>>().len(), 2 * n);
    }
}
