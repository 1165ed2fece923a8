mod common;

use packcrit::canon::canonical_form;
use packcrit::enumeration::{enumerate_graphs, EnumerationFilter, StructuralClass};
use packcrit::independence::independence_number;
use packcrit::packing::{chi_rho, verify_packing_coloring};
use packcrit::Graph;

fn all_graphs(max_n: usize, connected: bool) -> Vec<Graph> {
    let mut f = EnumerationFilter::new(StructuralClass::All, 1, max_n);
    f.connected = connected;
    enumerate_graphs(&f).unwrap()
}

#[test]
fn enumeration_matches_labelled_brute_force() {
    for n in 1..=6 {
        for connected in [false, true] {
            let mut f = EnumerationFilter::new(StructuralClass::All, n, n);
            f.connected = connected;
            let ours = enumerate_graphs(&f).unwrap();
            let brute = common::labelled_classes(n, connected);
            assert_eq!(ours.len(), brute.len(), "n={n} connected={connected}");
            let mapped: std::collections::BTreeSet<Vec<bool>> = ours
                .iter()
                .map(|g| common::brute_canonical(n, &g.edges().collect::<Vec<_>>()))
                .collect();
            assert_eq!(mapped, brute);
        }
    }
    let seven =
        enumerate_graphs(&EnumerationFilter::new(StructuralClass::All, 7, 7).connected()).unwrap();
    assert_eq!(seven.len(), common::CONNECTED_ON_SEVEN);
}

#[test]
fn structured_classes_match_filtered_general_enumeration() {
    let general = all_graphs(8, true);
    for (class, pred) in [
        (StructuralClass::Tree, Graph::is_tree as fn(&Graph) -> bool),
        (StructuralClass::Cactus, Graph::is_cactus),
        (StructuralClass::BlockGraph, Graph::is_block_graph),
    ] {
        let direct = enumerate_graphs(&EnumerationFilter::new(class, 1, 8)).unwrap();
        let filtered: Vec<&Graph> = general.iter().filter(|g| pred(g)).collect();
        assert_eq!(direct.len(), filtered.len(), "{class:?}");
        let certs = |gs: &mut dyn Iterator<Item = &Graph>| {
            gs.map(|g| canonical_form(g).unwrap().certificate)
                .collect::<std::collections::BTreeSet<_>>()
        };
        assert_eq!(certs(&mut direct.iter()), certs(&mut filtered.into_iter()));
    }
}

#[test]
fn chi_rho_and_alpha_match_brute_force() {
    for g in all_graphs(7, false) {
        let r = chi_rho(&g).unwrap();
        assert_eq!(
            r.value,
            common::chi_rho(&g),
            "{:?}",
            g.edges().collect::<Vec<_>>()
        );
        assert!(verify_packing_coloring(&g, r.witness.colors())
            .unwrap()
            .is_valid());
        assert!(common::is_packing_coloring(&g, r.witness.colors()));
        assert_eq!(independence_number(&g), common::alpha(&g));
    }
}

#[test]
fn metrics_match_bfs() {
    for g in all_graphs(7, true) {
        assert_eq!(g.radius().unwrap() as usize, common::radius(&g).unwrap());
        assert_eq!(
            g.diameter().unwrap() as usize,
            common::diameter(&g).unwrap()
        );
    }
}

#[test]
fn edge_criticality_matches_brute_force() {
    for g in all_graphs(6, true).into_iter().filter(|g| g.n() >= 2) {
        assert_eq!(
            packcrit::criticality::is_edge_critical(&g)
                .unwrap()
                .critical,
            common::is_edge_critical(&g)
        );
    }
}
