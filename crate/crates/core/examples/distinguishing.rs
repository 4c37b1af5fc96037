//! Distinguishing numbers of groups and distinguishing indices of graphs.

use symdist::analysis::named_group;
use symdist::distinguish::{
    distinguishing_number, graph_distinguishing_index, graph_distinguishing_number,
    predicted_distinguishing_number, DistinguishBudget,
};
use symdist::graph::Graph;

fn main() {
    for name in ["A5", "A5^(2)", "A6on10", "L3(2)", "M11"] {
        let named = named_group(name).unwrap();
        let v = distinguishing_number(&named.group);
        println!(
            "D({name}) = {}  predicted {:?}  witness {:?}  {} colorings checked",
            v.value,
            predicted_distinguishing_number(&named.classification).ok(),
            v.witness.colors(),
            v.colorings_checked
        );
    }

    let budget = DistinguishBudget::default();
    for n in 4..=8 {
        let k = graph_distinguishing_index(&Graph::complete(n), &budget).unwrap();
        let s = graph_distinguishing_index(&Graph::star(n), &budget).unwrap();
        println!("D'(K_{n}) = {}  D'(K_1,{n}) = {}", k.verdict.value, s.verdict.value);
    }
    let c5 = Graph::cycle(5).unwrap();
    println!(
        "C5: D = {}, D' = {}",
        graph_distinguishing_number(&c5, &budget).unwrap().value,
        graph_distinguishing_index(&c5, &budget).unwrap().verdict.value
    );
}
