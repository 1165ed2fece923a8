mod common;

use packcrit::independence::independence_number;
use packcrit::io::{emit_graph6, parse_graph6};
use packcrit::iso::is_isomorphic;
use packcrit::packing::chi_rho;
use packcrit::Graph;
use proptest::prelude::*;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let edges: Vec<(usize, usize)> = (0..n)
                .flat_map(|j| (0..j).map(move |i| (i, j)))
                .zip(bits)
                .filter(|&(_, b)| b)
                .map(|(e, _)| e)
                .collect();
            Graph::new(n, &edges).unwrap()
        })
    })
}

fn relabelled(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    graph(max_n).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn invariants_survive_relabelling((g, perm) in relabelled(9)) {
        let h = g.relabel(&perm);
        prop_assert!(is_isomorphic(&g, &h));
        prop_assert_eq!(chi_rho(&g).unwrap().value, chi_rho(&h).unwrap().value);
        prop_assert_eq!(independence_number(&g), independence_number(&h));
        prop_assert_eq!(g.radius().ok(), h.radius().ok());
        prop_assert_eq!(g.diameter().ok(), h.diameter().ok());
    }

    #[test]
    fn graph6_round_trip(g in graph(70)) {
        let s = emit_graph6(&g).unwrap();
        prop_assert_eq!(&parse_graph6(s.as_bytes()).unwrap(), &g);
        prop_assert_eq!(emit_graph6(&parse_graph6(s.as_bytes()).unwrap()).unwrap(), s);
    }

    #[test]
    fn alpha_under_edge_deletion(g in graph(12)) {
        let a = independence_number(&g);
        prop_assert_eq!(a, common::alpha(&g));
        for (u, v) in g.edges() {
            let b = independence_number(&g.delete_edge(u, v).unwrap());
            prop_assert!(a <= b && b <= a + 1);
        }
    }

    #[test]
    fn chi_rho_matches_dp(g in graph(10)) {
        prop_assert_eq!(chi_rho(&g).unwrap().value, common::chi_rho(&g));
    }

    #[test]
    fn chi_rho_is_monotone(g in graph(9)) {
        let base = chi_rho(&g).unwrap().value;
        for (u, v) in g.edges() {
            prop_assert!(chi_rho(&g.delete_edge(u, v).unwrap()).unwrap().value <= base);
        }
        if g.n() > 1 {
            for v in g.vertices() {
                prop_assert!(chi_rho(&g.delete_vertex(v).unwrap().0).unwrap().value <= base);
            }
        }
    }
}
