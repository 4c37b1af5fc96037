//! Automorphism groups and canonical labelings.

use symdist::graph::{canonical_labeling, Graph};
use symdist::symmetry::{automorphism_group, orbit_structure};

fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((i + 5, 5 + (i + 2) % 5));
    }
    Graph::from_edges(10, &edges).unwrap()
}

fn main() {
    let graphs = [
        ("Petersen", petersen()),
        ("C6", Graph::cycle(6).unwrap()),
        ("K_1,5", Graph::star(5)),
        ("P5", Graph::path(5)),
    ];
    for (name, g) in &graphs {
        let aut = automorphism_group(g).unwrap();
        let s = orbit_structure(g).unwrap();
        println!(
            "{name:<9} |Aut| = {:>4}  vertex orbits {}  edge-orbits {}",
            aut.order(),
            s.vertex_orbits.len(),
            s.edge_orbits.len()
        );
    }

    // relabel a 7-vertex graph and recover the same canonical form
    let g = Graph::from_edges(7, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (1, 5), (0, 3)]).unwrap();
    let shuffle = [3, 6, 1, 0, 4, 2, 5];
    let h = g.relabeled(&shuffle);
    println!(
        "canonical forms agree after relabeling: {}",
        canonical_labeling(&g).0 == canonical_labeling(&h).0
    );
}
