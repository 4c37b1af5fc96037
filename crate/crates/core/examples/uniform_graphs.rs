//! Orbit structure and decomposition of uniform graphs.

use symdist::analysis::is_simple;
use symdist::graph::{construct_figure1, construct_figure1_variant};
use symdist::symmetry::{automorphism_group, is_n_uniform, uniform_decomposition};

fn main() {
    for n in [5, 6] {
        let g = construct_figure1(n).unwrap();
        let aut = automorphism_group(&g).unwrap();
        let u = is_n_uniform(&g).unwrap();
        let d = uniform_decomposition(&g).unwrap();
        println!(
            "figure1({n}): |Aut| = {}, uniform strict {:?} relaxed {:?}, {} (matches Aut: {}), simple {}",
            aut.order(),
            u.strict,
            u.relaxed,
            d,
            d.matches_automorphism_group,
            is_simple(&aut).unwrap()
        );
    }
    let plain = construct_figure1_variant(5, false).unwrap();
    let u = is_n_uniform(&plain).unwrap();
    println!("without the x-y edge: strict {:?} relaxed {:?}", u.strict, u.relaxed);
}
