mod common;

use num_bigint::BigUint;
use symdist::analysis::{
    subgroup_of_index_exists, subgroup_of_order_exists, transitive_action_exists, SubgroupSearch,
    SubgroupSearchBudget,
};
use symdist::perm::PermutationGroup;

#[test]
fn search_agrees_with_the_lattice_oracle() {
    let budget = SubgroupSearchBudget::default();
    for (name, g) in common::small_groups() {
        let m = g.order_u64().unwrap();
        let orders = common::subgroup_orders(&g);
        assert_eq!(common::closure(g.degree(), g.generators()).len() as u64, m, "{name}");
        for d in (1..=m).filter(|d| m % d == 0) {
            let found = subgroup_of_order_exists(&g, &BigUint::from(d), &budget);
            assert_eq!(found.exists(), Some(orders.contains(&(d as usize))), "{name}, order {d}");
            if let SubgroupSearch::Found { generators } = found {
                let h = PermutationGroup::new(g.degree(), generators).unwrap();
                assert_eq!(h.order(), BigUint::from(d), "{name}, order {d}");
                assert!(h.is_subgroup_of(&g));
            }
        }
    }
}

#[test]
fn alternating_group_facts() {
    let budget = SubgroupSearchBudget::default();
    let a6 = PermutationGroup::alternating(6);
    for order in [180u32, 90, 72] {
        assert_eq!(subgroup_of_order_exists(&a6, &BigUint::from(order), &budget).exists(), Some(false));
    }
    assert_eq!(subgroup_of_index_exists(&a6, 12, &budget).exists(), Some(false));
    let a5 = PermutationGroup::alternating(5);
    assert_eq!(subgroup_of_index_exists(&a5, 2, &budget).exists(), Some(false));
    assert_eq!(subgroup_of_index_exists(&a5, 5, &budget).exists(), Some(true));
    assert_eq!(transitive_action_exists(&a5, 6, &budget).exists(), Some(true));
}

#[test]
fn large_groups_are_unknown_not_absent() {
    let s8 = PermutationGroup::symmetric(8);
    let r = subgroup_of_index_exists(&s8, 16, &SubgroupSearchBudget::default());
    assert!(matches!(r, SubgroupSearch::Unknown { .. }));
}
