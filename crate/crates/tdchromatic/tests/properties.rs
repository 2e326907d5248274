//! Property tests: operation invariants, solver/oracle agreement, and
//! certificate soundness over randomized small graphs.

use proptest::prelude::*;

use tdchromatic::analysis::is_connected;
use tdchromatic::coloring::{is_proper, is_td_coloring, validate_certificate, Coloring};
use tdchromatic::io::{read_edge_list, write_edge_list};
use tdchromatic::solver::{
    chromatic_number, td_chromatic_number, td_chromatic_oracle, total_domination_number, Witness,
};
use tdchromatic::{build_family, is_isomorphic, ops, FamilySpec, Graph};

fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    let mut bit = 0;
    for u in 0..n {
        for w in u + 1..n {
            if mask & (1 << bit) != 0 {
                edges.push((u, w));
            }
            bit += 1;
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| {
        let bits = n * (n - 1) / 2;
        (Just(n), 0u64..(1u64 << bits)).prop_map(|(n, mask)| graph_from_mask(n, mask))
    })
}

fn arb_connected_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    arb_graph(max_n).prop_filter("connected", is_connected)
}

proptest! {
    #[test]
    fn operations_preserve_graph_invariants(g in arb_graph(7), pick in 0usize..64) {
        let v = pick % g.order();
        ops::remove_vertex(&g, v).unwrap().check_invariants().unwrap();
        ops::odot(&g, v).unwrap().check_invariants().unwrap();
        let contracted = ops::contract_vertex(&g, v).unwrap();
        contracted.check_invariants().unwrap();
        prop_assert_eq!(contracted.order(), g.order() - 1);

        let edges = g.edges();
        if !edges.is_empty() {
            let (u, w) = edges[pick % edges.len()];
            ops::remove_edge(&g, u, w).unwrap().check_invariants().unwrap();
            let merged = ops::contract_edge(&g, u, w).unwrap();
            merged.check_invariants().unwrap();
            prop_assert_eq!(merged.order(), g.order() - 1);
        }
    }

    #[test]
    fn remove_then_readd_edge_restores_graph(g in arb_graph(7), pick in 0usize..64) {
        let edges = g.edges();
        prop_assume!(!edges.is_empty());
        let (u, w) = edges[pick % edges.len()];
        let removed = ops::remove_edge(&g, u, w).unwrap();
        let mut back = removed.edges();
        back.push((u, w));
        let restored = Graph::from_edges(g.order(), back).unwrap();
        prop_assert_eq!(restored, g);
    }

    #[test]
    fn join_apex_removal_restores_graph(g in arb_graph(6)) {
        let k1 = build_family(FamilySpec::Complete(1)).unwrap();
        let joined = ops::join(&k1, &g).unwrap();
        prop_assert_eq!(
            joined.edge_count(),
            g.edge_count() + g.order()
        );
        let stripped = ops::remove_vertex(&joined, 0).unwrap();
        prop_assert_eq!(stripped, g);
    }

    #[test]
    fn odot_keeps_order_and_never_adds_edges(g in arb_graph(7), pick in 0usize..64) {
        let v = pick % g.order();
        let once = ops::odot(&g, v).unwrap();
        prop_assert_eq!(once.order(), g.order());
        prop_assert!(once.edge_count() <= g.edge_count());
        let twice = ops::odot(&once, v).unwrap();
        prop_assert_eq!(once, twice);
    }

    #[test]
    fn contractions_and_odot_preserve_connectivity(
        g in arb_connected_graph(7),
        pick in 0usize..64,
    ) {
        let v = pick % g.order();
        prop_assert!(is_connected(&ops::odot(&g, v).unwrap()));
        if g.order() >= 2 {
            prop_assert!(is_connected(&ops::contract_vertex(&g, v).unwrap()));
            let edges = g.edges();
            let (u, w) = edges[pick % edges.len()];
            prop_assert!(is_connected(&ops::contract_edge(&g, u, w).unwrap()));
        }
    }

    #[test]
    fn removal_then_readd_is_isomorphic_to_input(g in arb_connected_graph(6)) {
        // relabeled copies stay isomorphic through a removal round trip
        let edges = g.edges();
        prop_assume!(!edges.is_empty());
        let (u, w) = edges[0];
        let removed = ops::remove_edge(&g, u, w).unwrap();
        let mut back = removed.edges();
        back.push((u, w));
        let restored = Graph::from_edges(g.order(), back).unwrap();
        prop_assert!(is_isomorphic(&restored, &g));
    }

    #[test]
    fn edge_list_round_trips(g in arb_graph(8)) {
        let text = write_edge_list(&g);
        let back = read_edge_list(&text).unwrap();
        prop_assert_eq!(back, g);
    }

    #[test]
    fn sandwich_bounds_hold(g in arb_connected_graph(6)) {
        let chi = chromatic_number(&g).unwrap().value;
        let gamma = total_domination_number(&g).unwrap().value;
        let chidt = td_chromatic_number(&g).unwrap().value;
        prop_assert!(chi.max(gamma) <= chidt);
        prop_assert!(chidt <= gamma + chi);
    }

    #[test]
    fn solver_matches_oracle(g in arb_connected_graph(6)) {
        let solver = td_chromatic_number(&g).unwrap().value;
        let oracle = td_chromatic_oracle(&g).unwrap();
        prop_assert_eq!(solver, oracle);
    }

    #[test]
    fn certificates_revalidate(g in arb_connected_graph(6)) {
        let result = td_chromatic_number(&g).unwrap();
        let Witness::TotalDominator(cert) = &result.witness else {
            return Err(TestCaseError::fail("expected a TD certificate"));
        };
        validate_certificate(&g, cert).unwrap();
        prop_assert_eq!(cert.coloring.k(), result.value);
        prop_assert!(is_td_coloring(&g, &cert.coloring).unwrap().is_some());
    }

    #[test]
    fn td_coloring_implies_proper(
        g in arb_connected_graph(5),
        raw in proptest::collection::vec(1u32..=4, 5),
    ) {
        // normalize an arbitrary color vector into a surjective coloring
        let n = g.order();
        let mut mapping = std::collections::BTreeMap::new();
        let mut colors = Vec::with_capacity(n);
        for &c in raw.iter().take(n) {
            let next = mapping.len() as u32 + 1;
            colors.push(*mapping.entry(c).or_insert(next));
        }
        let coloring = Coloring::new(colors).unwrap();
        if is_td_coloring(&g, &coloring).unwrap().is_some() {
            prop_assert!(is_proper(&g, &coloring).unwrap());
        }
    }
}
