//! Enumerating small graphs and reading and writing graph6.

use symdist::graph::{from_graph6, nonisomorphic_graphs, parse_graph6_file, to_graph6};

fn main() {
    for n in 1..=7 {
        let graphs = nonisomorphic_graphs(n).unwrap();
        let round_trip = graphs.iter().all(|g| from_graph6(&to_graph6(g)).unwrap() == *g);
        println!("{n} vertices: {:>4} graphs, graph6 round-trip {}", graphs.len(), round_trip);
    }

    let text = ">>graph6<<Dhc\nA_\n";
    for g in parse_graph6_file(text).unwrap() {
        println!("{} vertices, edges {:?}", g.vertex_count(), g.edges());
    }
    println!("rejected: {}", from_graph6("D?~~").unwrap_err());
}
