mod common;

use num_bigint::BigUint;
use proptest::prelude::*;
use symdist::graph::{
    canonical_form, from_graph6, parse_edge_list, to_edge_list, to_graph6, Graph,
};
use symdist::symmetry::{automorphism_group, orbit_structure_of, uniformity_of};

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        prop::collection::vec(any::<bool>(), pairs.len()).prop_map(move |keep| {
            let edges: Vec<(usize, usize)> = pairs.iter().zip(&keep).filter(|(_, &k)| k).map(|(&e, _)| e).collect();
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

fn graph_and_relabeling(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    graph(max_n).prop_flat_map(|g| {
        let n = g.vertex_count();
        (Just(g), Just((0..n).collect::<Vec<usize>>()).prop_shuffle())
    })
}

proptest! {
    #[test]
    fn graph6_round_trip(g in graph(40)) {
        prop_assert_eq!(from_graph6(&to_graph6(&g)).unwrap(), g);
    }

    #[test]
    fn edge_list_round_trip(g in graph(20)) {
        prop_assert_eq!(parse_edge_list(&to_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn canonical_form_ignores_labels((g, relabel) in graph_and_relabeling(8)) {
        prop_assert_eq!(canonical_form(&g), canonical_form(&g.relabeled(&relabel)));
    }

    #[test]
    fn automorphisms_match_brute_force(g in graph(8)) {
        let aut = automorphism_group(&g).unwrap();
        prop_assert_eq!(aut.order(), BigUint::from(common::brute_force_automorphism_count(&g)));
        for p in aut.generators() {
            prop_assert!(g.is_automorphism(p.images()));
        }
    }

    #[test]
    fn complement_has_the_same_automorphisms(g in graph(12)) {
        prop_assert!(automorphism_group(&g).unwrap() == automorphism_group(&g.complement()).unwrap());
    }

    #[test]
    fn relabeled_graph_has_conjugate_group((g, relabel) in graph_and_relabeling(12)) {
        let a = automorphism_group(&g).unwrap();
        let b = automorphism_group(&g.relabeled(&relabel)).unwrap();
        prop_assert_eq!(a.order(), b.order());
    }

    #[test]
    fn orbits_partition_vertices_and_edges(g in graph(10)) {
        let aut = automorphism_group(&g).unwrap();
        let s = orbit_structure_of(&g, &aut);
        let vertices: usize = s.vertex_orbits.iter().map(Vec::len).sum();
        let edges: usize = s.edge_orbits.iter().map(Vec::len).sum();
        let pairs: usize = s.orbitals.iter().map(Vec::len).sum();
        let n = g.vertex_count();
        prop_assert_eq!(vertices, n);
        prop_assert_eq!(edges, g.edge_count());
        prop_assert_eq!(pairs, n * n.saturating_sub(1) / 2);
        let u = uniformity_of(&g, &s);
        if let Some(k) = u.strict {
            prop_assert_eq!(u.relaxed, Some(k));
        }
    }
}

#[test]
fn known_graph6_encodings() {
    assert_eq!(to_graph6(&Graph::cycle(5).unwrap()), "Dhc");
    assert_eq!(to_graph6(&Graph::complete(2)), "A_");
    assert!(from_graph6("D?~~").is_err());
}
