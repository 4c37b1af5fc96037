//! Parallel sums `G ||_ψ H` and permutation isomorphism.

use symdist::analysis::named_group;
use symdist::perm::{
    are_permutation_isomorphic, parallel_sum, IsomorphismSpec, PermutationGroup,
};

fn main() {
    let a5 = PermutationGroup::alternating(5);
    let diagonal = parallel_sum(&IsomorphismSpec::identity(&a5)).unwrap();
    let multiple = a5.parallel_multiple(2).unwrap();
    println!(
        "A5 || A5: degree {}, order {}, equals A5^(2): {}",
        diagonal.degree(),
        diagonal.order(),
        diagonal == multiple
    );

    // A6 on 6 points against A6 on the cosets of a transitive A5
    let twisted = named_group("A6||A6").unwrap().group;
    let (first, second) = (
        twisted.restricted_to(&(0..6).collect::<Vec<_>>()).unwrap(),
        twisted.restricted_to(&(6..12).collect::<Vec<_>>()).unwrap(),
    );
    let a6 = PermutationGroup::alternating(6);
    println!(
        "A6||A6: order {}, halves are A6: {} {}, permutation isomorphic to A6^(2): {}",
        twisted.order(),
        first == a6,
        are_permutation_isomorphic(&second, &a6, 1_000_000).unwrap(),
        are_permutation_isomorphic(&twisted, &a6.parallel_multiple(2).unwrap(), 1_000_000).unwrap()
    );

    let s3 = PermutationGroup::symmetric(3);
    let relabeled = PermutationGroup::from_cycle_strings(3, &["(0 2)", "(0 1 2)"]).unwrap();
    println!("S3 vs relabeled S3: {}", are_permutation_isomorphic(&s3, &relabeled, 1000).unwrap());
}
