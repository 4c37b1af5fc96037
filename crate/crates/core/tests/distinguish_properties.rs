mod common;

use proptest::prelude::*;
use symdist::distinguish::{
    distinguishing_number, is_distinguishing, is_distinguishing_by_enumeration, Coloring, Minimality,
};
use symdist::perm::{Permutation, PermutationGroup};

fn perm(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_images(v).unwrap())
}

fn group(max_n: usize) -> impl Strategy<Value = PermutationGroup> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(perm(n), 1..=2).prop_map(move |gens| PermutationGroup::new(n, gens).unwrap())
    })
}

fn group_and_coloring() -> impl Strategy<Value = (PermutationGroup, Coloring)> {
    group(7).prop_flat_map(|g| {
        let n = g.degree();
        (1u32..=3).prop_flat_map(move |d| {
            let g = g.clone();
            prop::collection::vec(1..=d, n).prop_map(move |c| (g.clone(), Coloring::new(c, d).unwrap()))
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn search_matches_exhaustive_oracle(g in group(6)) {
        let v = distinguishing_number(&g);
        prop_assert_eq!(v.minimality, Minimality::Exhausted);
        prop_assert_eq!(v.value, common::exhaustive_distinguishing_number(&g));
    }

    #[test]
    fn witness_is_distinguishing(g in group(8)) {
        let v = distinguishing_number(&g);
        prop_assert!(v.certificate_checked);
        prop_assert!(is_distinguishing_by_enumeration(&g, &v.witness, 100_000).unwrap());
        prop_assert!(v.witness.colors().iter().all(|&c| 1 <= c && c <= v.value));
    }

    #[test]
    fn backtracking_matches_enumeration((g, c) in group_and_coloring()) {
        prop_assert_eq!(
            is_distinguishing(&g, &c).unwrap(),
            is_distinguishing_by_enumeration(&g, &c, 100_000).unwrap()
        );
    }

    #[test]
    fn fixed_points_do_not_change_the_value(g in group(6), k in 1usize..=3) {
        let padded = g.direct_sum(&PermutationGroup::trivial(k));
        prop_assert_eq!(distinguishing_number(&padded).value, distinguishing_number(&g).value);
    }
}

#[test]
fn a5_on_five_points_has_no_distinguishing_3_coloring() {
    let a5 = PermutationGroup::alternating(5);
    for code in 0..3u32.pow(5) {
        let colors: Vec<u32> = (0..5).map(|i| code / 3u32.pow(i) % 3 + 1).collect();
        assert!(!is_distinguishing(&a5, &Coloring::new(colors, 3).unwrap()).unwrap());
    }
}

#[test]
fn degree_mismatch_is_an_error() {
    let a5 = PermutationGroup::alternating(5);
    assert!(is_distinguishing(&a5, &Coloring::constant(4)).is_err());
    assert!(Coloring::new(vec![1, 4], 3).is_err());
}
