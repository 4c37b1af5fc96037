//! Orders, bases and membership for a few permutation groups.

use symdist::analysis::named_group;
use symdist::perm::{Permutation, PermutationGroup};

fn main() {
    for name in ["S7", "A8", "L3(2)", "M11", "M12", "M24"] {
        let g = named_group(name).unwrap().group;
        let chain = g.chain();
        let orbits: Vec<usize> = chain.levels().iter().map(|l| l.orbit().len()).collect();
        println!(
            "{name:<6} degree {:>2}  order {:>12}  base {:?}  basic orbits {:?}",
            g.degree(),
            g.order(),
            chain.base(),
            orbits
        );
    }

    let a5 = PermutationGroup::alternating(5);
    for cycles in ["(0 1 2)", "(0 1)(2 3)", "(0 1)", "(0 1 2 3)"] {
        let p = Permutation::parse_cycles(5, cycles).unwrap();
        println!("{cycles} in A5: {}", a5.contains(&p).unwrap());
    }
}
