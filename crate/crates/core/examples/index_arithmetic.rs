//! The index-2n conditions for subgroups of `A_n`, with their trace.

use symdist::analysis::{an_index_2n_feasible, subgroup_of_index_exists, SubgroupSearchBudget};
use symdist::perm::PermutationGroup;

fn main() {
    for n in [5, 6, 7, 9, 12] {
        let f = an_index_2n_feasible(n);
        println!("n = {n}: feasible {} (premise {})", f.feasible, f.premise_holds);
        for line in &f.trace {
            println!("    {line}");
        }
    }
    let budget = SubgroupSearchBudget::extended();
    for n in [5u64, 6, 7, 8] {
        let s = subgroup_of_index_exists(&PermutationGroup::alternating(n as usize), 2 * n, &budget);
        println!("A{n} has a subgroup of index {}: {:?}", 2 * n, s.exists());
    }
}
