//! Simplicity tests and subgroup searches over the catalog.

use num_bigint::BigUint;
use symdist::analysis::{
    is_simple, lemma_divisor_check, subgroup_of_index_exists, subgroup_of_order_exists,
    Catalog, SubgroupSearchBudget,
};
use symdist::perm::PermutationGroup;

fn main() {
    for e in &Catalog::builtin().entries {
        if !e.within_budget {
            println!("{:<12} skipped", e.name);
            continue;
        }
        let g = e.group().unwrap();
        println!("{:<12} order {:>6}  simple {}", e.name, g.order(), is_simple(&g).unwrap());
    }
    println!("S5 simple: {}", is_simple(&PermutationGroup::symmetric(5)).unwrap());

    let budget = SubgroupSearchBudget::default();
    let a6 = PermutationGroup::alternating(6);
    for order in [180u32, 90, 72, 60, 36] {
        let found = subgroup_of_order_exists(&a6, &BigUint::from(order), &budget);
        println!("A6 subgroup of order {order}: {:?}", found.exists());
    }
    let a5 = PermutationGroup::alternating(5);
    for index in [2, 5, 6, 10] {
        println!("A5 index {index}: {:?}", subgroup_of_index_exists(&a5, index, &budget).exists());
    }

    let report = lemma_divisor_check("A6on10", 10, &budget).unwrap();
    for v in &report.divisors {
        println!("(A6,10) d = {:>2}: transitive action {:?}", v.d, v.action_exists);
    }
}
