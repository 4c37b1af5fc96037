mod common;

use std::collections::HashSet;

use num_bigint::BigUint;
use proptest::prelude::*;
use symdist::analysis::named_group;
use symdist::perm::{are_permutation_isomorphic, parallel_sum, IsomorphismSpec, Permutation, PermutationGroup};

fn perm(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_images(v).unwrap())
}

fn group() -> impl Strategy<Value = PermutationGroup> {
    (1usize..=6).prop_flat_map(|n| {
        prop::collection::vec(perm(n), 1..=3).prop_map(move |gens| PermutationGroup::new(n, gens).unwrap())
    })
}

fn group_with_element() -> impl Strategy<Value = (PermutationGroup, Permutation)> {
    group().prop_flat_map(|g| {
        let n = g.degree();
        (Just(g), perm(n))
    })
}

proptest! {
    #[test]
    fn chain_order_matches_closure(g in group()) {
        let elements = common::closure(g.degree(), g.generators());
        prop_assert_eq!(g.order(), BigUint::from(elements.len()));
        let listed: HashSet<Permutation> = g.elements().collect();
        prop_assert_eq!(listed.len(), elements.len());
        prop_assert!(elements.iter().all(|e| listed.contains(e)));
    }

    #[test]
    fn membership_matches_closure((g, p) in group_with_element()) {
        let elements: HashSet<Permutation> = common::closure(g.degree(), g.generators()).into_iter().collect();
        prop_assert_eq!(g.contains(&p).unwrap(), elements.contains(&p));
    }

    #[test]
    fn composition_laws(p in perm(7), q in perm(7), r in perm(7)) {
        prop_assert_eq!(p.compose(&q).compose(&r), p.compose(&q.compose(&r)));
        prop_assert!(p.compose(&p.inverse()).is_identity());
        // right action: x (pq) = (x p) q
        for x in 0..7 {
            prop_assert_eq!(p.compose(&q).image(x), q.image(p.image(x)));
        }
        prop_assert_eq!(p.order(), p.cycle_type().iter().fold(1u64, |a, &c| num_lcm(a, c as u64)));
    }

    #[test]
    fn literal_round_trip(g in group()) {
        let back = PermutationGroup::parse_literal(&g.to_literal()).unwrap();
        prop_assert!(back == g);
    }

    #[test]
    fn direct_sum_order_multiplies(g in group(), h in group()) {
        let s = g.direct_sum(&h);
        prop_assert_eq!(s.order(), g.order() * h.order());
        prop_assert_eq!(s.degree(), g.degree() + h.degree());
    }

    #[test]
    fn parallel_multiple_is_faithful(g in group(), k in 1usize..=3) {
        let m = g.parallel_multiple(k).unwrap();
        prop_assert_eq!(m.order(), g.order());
        prop_assert_eq!(m.degree(), k * g.degree());
    }

    #[test]
    fn parallel_sum_is_symmetric(g in group()) {
        // the identity map gives G || G; swapping halves gives a permutation-isomorphic group
        let sum = parallel_sum(&IsomorphismSpec::identity(&g)).unwrap();
        let n = g.degree();
        let swap: Vec<usize> = (0..2 * n).map(|x| (x + n) % (2 * n)).collect();
        let gens: Vec<Permutation> = sum.generators().iter().map(|p| p.relabeled(&swap)).collect();
        let swapped = PermutationGroup::new(2 * n, gens).unwrap();
        prop_assert!(swapped == sum);
        prop_assert!(are_permutation_isomorphic(&sum, &g.parallel_multiple(2).unwrap(), 100_000).unwrap());
    }

    #[test]
    fn relabeled_groups_are_isomorphic((g, lambda) in group_with_element()) {
        let gens: Vec<Permutation> = g.generators().iter().map(|p| p.relabeled(lambda.images())).collect();
        let h = PermutationGroup::new(g.degree(), gens).unwrap();
        prop_assert!(are_permutation_isomorphic(&g, &h, 100_000).unwrap());
    }
}

fn num_lcm(a: u64, b: u64) -> u64 {
    fn gcd(a: u64, b: u64) -> u64 {
        if b == 0 { a } else { gcd(b, a % b) }
    }
    a / gcd(a, b) * b
}

#[test]
fn parallel_sum_is_associative() {
    let a5 = PermutationGroup::alternating(5);
    let two = parallel_sum(&IsomorphismSpec::identity(&a5)).unwrap();
    let left = parallel_sum(&IsomorphismSpec::new(
        two.clone(),
        a5.clone(),
        a5.generators().to_vec(),
    ))
    .unwrap();
    let right = parallel_sum(&IsomorphismSpec::new(a5.clone(), two.clone(), two.generators().to_vec())).unwrap();
    assert_eq!(left.order(), BigUint::from(60u32));
    assert!(left == a5.parallel_multiple(3).unwrap());
    assert!(right == a5.parallel_multiple(3).unwrap());
}

/// The twisted parallel sum is not a relabeled copy of `A_6^(2)`: no element of
/// `S_6` conjugates the first half onto the second generator by generator.
#[test]
fn twisted_a6_is_not_induced_by_a_relabeling() {
    let twisted = named_group("A6||A6").unwrap().group;
    let left: Vec<Permutation> = twisted
        .generators()
        .iter()
        .map(|g| g.restricted(&(0..6).collect::<Vec<_>>()).unwrap())
        .collect();
    let right: Vec<Permutation> = twisted
        .generators()
        .iter()
        .map(|g| g.restricted(&(6..12).collect::<Vec<_>>()).unwrap())
        .collect();
    let s6: Vec<Permutation> = PermutationGroup::symmetric(6).elements().collect();
    assert_eq!(s6.len(), 720);
    let induced = s6
        .iter()
        .filter(|s| left.iter().zip(&right).all(|(l, r)| l.conjugate_by(s) == *r))
        .count();
    assert_eq!(induced, 0);
    assert!(!are_permutation_isomorphic(&twisted, &PermutationGroup::alternating(6).parallel_multiple(2).unwrap(), 1_000_000).unwrap());
}
