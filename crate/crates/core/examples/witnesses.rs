//! Asymmetric graphs and the cyclic-automorphism construction.

use symdist::analysis::is_simple;
use symdist::distinguish::{graph_distinguishing_index, graph_distinguishing_number, DistinguishBudget};
use symdist::graph::{asymmetric_witness, construct_example1, to_graph6};
use symdist::symmetry::automorphism_group;

fn main() {
    let budget = DistinguishBudget::default();
    for m in [6, 7, 9] {
        let g = asymmetric_witness(m).unwrap();
        println!("asymmetric on {m}: {} |Aut| = {}", to_graph6(&g), automorphism_group(&g).unwrap().order());
    }
    for (r, m) in [(2, 6), (3, 6), (5, 7)] {
        let g = construct_example1(r, m).unwrap();
        let aut = automorphism_group(&g).unwrap();
        println!(
            "example1({r},{m}): {} vertices, |Aut| = {}, simple {}, D = {}, D' = {}",
            g.vertex_count(),
            aut.order(),
            is_simple(&aut).unwrap(),
            graph_distinguishing_number(&g, &budget).unwrap().value,
            graph_distinguishing_index(&g, &budget).unwrap().verdict.value
        );
    }
}
