//! Property tests over randomly generated graphs.

use std::collections::BTreeSet;

use proptest::prelude::*;
use twodom_core::graph::Graph;
use twodom_core::harness::{random_cactus, random_connected_graph, random_tree, scan, GraphClass, ScanSpec};
use twodom_core::reductions::{try_engine_rule, Rule};
use twodom_core::invariants::{
    annihilation, gamma2, gamma2_branch_and_bound, gamma2_bruteforce, gamma2_cactus, is_2_dominating,
};

/// A connected graph on `n` vertices with edge density `p`, from `seed`.
fn connected(n: usize, p: f64, seed: u64) -> Graph {
    random_connected_graph(n, p, seed).unwrap()
}

fn edge_at(g: &Graph, i: usize) -> (u32, u32) {
    let edges: Vec<_> = g.edges().collect();
    edges[i % edges.len()]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn handshake(n in 2usize..30, p in 0.0f64..0.5, seed in any::<u64>()) {
        let g = connected(n, p, seed);
        prop_assert_eq!(g.degree_sequence().sum(), 2 * g.m());
    }

    #[test]
    fn edge_list_round_trip(n in 2usize..30, p in 0.0f64..0.5, seed in any::<u64>()) {
        let g = connected(n, p, seed);
        let text = g.to_edge_list();
        let back = Graph::parse_edge_list(&text).unwrap();
        prop_assert_eq!(&back, &g.relabeled());
        prop_assert_eq!(back.to_edge_list(), text);
    }

    #[test]
    fn operations_keep_graph_valid(n in 3usize..25, p in 0.0f64..0.4, seed in any::<u64>(), i in any::<usize>()) {
        let g = connected(n, p, seed);
        let v = g.vertices().nth(i % g.n()).unwrap();
        g.delete_vertex(v).unwrap().validate().unwrap();
        let e = edge_at(&g, i);
        let h = g.delete_edges(&[e]).unwrap();
        h.validate().unwrap();
        h.add_edges(&[e]).unwrap().validate().unwrap();
        prop_assert_eq!(h.add_edges(&[e]).unwrap(), g);
    }

    #[test]
    fn potential_drops_under_vertex_deletion(n in 3usize..25, p in 0.0f64..0.4, seed in any::<u64>(), i in any::<usize>()) {
        let g = connected(n, p, seed);
        let v = g.vertices().nth(i % g.n()).unwrap();
        let h = g.delete_vertex(v).unwrap();
        prop_assert!(h.potential() < g.potential());
        prop_assert_eq!(g.potential(), g.n() + 3 * g.m() + g.leaf_count());
    }

    #[test]
    fn leaves_lie_in_canonical_set(n in 3usize..30, p in 0.0f64..0.3, seed in any::<u64>()) {
        let g = connected(n, p, seed);
        let cert = annihilation(&g);
        for leaf in g.leaves() {
            prop_assert!(cert.canonical_set.contains(&leaf));
        }
        prop_assert!(cert.degree_sum <= g.m());
        prop_assert_eq!(cert.canonical_set.len(), cert.a);
    }

    // Stated as an invariant by the specification; it is false in general
    // (see `annihilation_can_drop_when_an_edge_is_removed`) and left red.
    #[test]
    fn annihilation_grows_when_edges_removed(n in 3usize..30, p in 0.0f64..0.4, seed in any::<u64>(), i in any::<usize>()) {
        let g = connected(n, p, seed);
        let h = g.delete_edges(&[edge_at(&g, i)]).unwrap();
        prop_assert!(annihilation(&h).a >= annihilation(&g).a);
    }

    #[test]
    fn cycle_edge_removal_keeps_annihilation(n in 4usize..30, seed in any::<u64>()) {
        // the setting in which edge removal is safe: d* ≤ 2 and the removed
        // edge lies on a cycle at a vertex of degree at least 3
        let g = random_cactus(n, 0.7, seed).unwrap();
        if let Some(r) = try_engine_rule(&g, Rule::CycleEdge) {
            prop_assert!(annihilation(&g).a >= annihilation(&r.graph).a);
        }
    }

    #[test]
    fn gamma2_shrinks_when_edges_added(n in 3usize..13, p in 0.0f64..0.4, seed in any::<u64>(), i in any::<usize>()) {
        let g = connected(n, p, seed);
        let h = g.delete_edges(&[edge_at(&g, i)]).unwrap();
        prop_assert!(gamma2_bruteforce(&g).unwrap().gamma2 <= gamma2_bruteforce(&h).unwrap().gamma2);
    }

    #[test]
    fn witnesses_are_valid(n in 2usize..40, p in 0.0f64..0.15, seed in any::<u64>()) {
        let g = connected(n, p, seed);
        let c = gamma2(&g).unwrap();
        prop_assert_eq!(c.witness.len(), c.gamma2);
        prop_assert!(is_2_dominating(&g, &c.witness).unwrap());
        let all: BTreeSet<u32> = g.vertices().collect();
        prop_assert!(is_2_dominating(&g, &all).unwrap());
    }

    #[test]
    fn solvers_agree_on_cacti(n in 2usize..18, seed in any::<u64>()) {
        let g = random_cactus(n, 0.6, seed).unwrap();
        let oracle = gamma2_bruteforce(&g).unwrap().gamma2;
        prop_assert_eq!(gamma2_cactus(&g).unwrap().gamma2, oracle);
        prop_assert_eq!(gamma2_branch_and_bound(&g).unwrap().gamma2, oracle);
    }

    #[test]
    fn solvers_agree_on_general_graphs(n in 2usize..14, p in 0.0f64..0.6, seed in any::<u64>()) {
        let g = connected(n, p, seed);
        let oracle = gamma2_bruteforce(&g).unwrap();
        let bb = gamma2_branch_and_bound(&g).unwrap();
        prop_assert_eq!(bb.gamma2, oracle.gamma2);
        prop_assert!(is_2_dominating(&g, &bb.witness).unwrap());
    }

    #[test]
    fn trees_are_trees(n in 1usize..40, seed in any::<u64>()) {
        let t = random_tree(n, seed).unwrap();
        prop_assert_eq!(t.n(), n);
        prop_assert!(t.is_connected());
        prop_assert_eq!(t.m(), n - 1);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn scans_are_deterministic(seed in any::<u64>(), class_index in 0usize..3) {
        let class = [GraphClass::Tree, GraphClass::Cactus, GraphClass::BipartiteCactus][class_index];
        let spec = ScanSpec::new(class, class.min_n().max(4), 14, 12, seed);
        let a = scan(&spec).unwrap();
        let b = scan(&spec).unwrap();
        prop_assert_eq!(a.to_json(), b.to_json());
        prop_assert_eq!(a.to_csv(), b.to_csv());
    }
}

#[test]
fn annihilation_can_drop_when_an_edge_is_removed() {
    // the 11 smallest degrees sum to exactly m = 32; the removed edge joins
    // two degree-5 vertices outside that prefix, so m drops and the sum does not
    let g = random_connected_graph(17, 0.1176909874837435, 6451622455944814358).unwrap();
    assert_eq!((g.m(), g.degree(2), g.degree(9)), (32, 5, 5));
    assert_eq!(annihilation(&g).a, 11);
    let h = g.delete_edges(&[(2, 9)]).unwrap();
    assert!(h.is_connected());
    assert_eq!(annihilation(&h).a, 10);
}
