//! Normal closures and the simplicity test.

use num_bigint::BigUint;
use num_traits::One;

use crate::perm::{PermError, Permutation, PermutationGroup, StabilizerChain};

/// Default element budget for the conjugacy-class pass of [`is_simple`].
pub const SIMPLICITY_LIMIT: u64 = 100_000;

/// The smallest normal subgroup of `g` containing all of `elements`.
pub fn normal_closure_of(
    group: &PermutationGroup,
    elements: &[Permutation],
) -> Result<PermutationGroup, PermError> {
    for e in elements {
        if !group.contains(e)? {
            return Err(PermError::NotASubgroup);
        }
    }
    let n = group.degree();
    let mut chain = StabilizerChain::new(n, &[]);
    let mut gens: Vec<Permutation> = Vec::new();
    let mut queue: Vec<Permutation> = Vec::new();
    for e in elements {
        if chain.add_generator(e.clone()) {
            gens.push(e.clone());
            queue.push(e.clone());
        }
    }
    let full = group.order();
    while let Some(x) = queue.pop() {
        if chain.order() == full {
            break;
        }
        for s in group.generators() {
            let c = x.conjugate_by(s);
            if chain.add_generator(c.clone()) {
                gens.push(c.clone());
                queue.push(c);
            }
        }
    }
    PermutationGroup::new(n, gens)
}

pub fn normal_closure(group: &PermutationGroup, g: &Permutation) -> Result<PermutationGroup, PermError> {
    normal_closure_of(group, std::slice::from_ref(g))
}

/// The commutator subgroup, as the normal closure of generator commutators.
pub fn derived_subgroup(group: &PermutationGroup) -> PermutationGroup {
    let gens = group.generators();
    let mut comms = Vec::new();
    for (i, a) in gens.iter().enumerate() {
        for b in &gens[i + 1..] {
            let c = a.inverse().compose(&b.inverse()).compose(a).compose(b);
            if !c.is_identity() {
                comms.push(c);
            }
        }
    }
    normal_closure_of(group, &comms).expect("commutators lie in the group")
}

fn is_prime(n: &BigUint) -> bool {
    let two = BigUint::from(2u32);
    if *n < two {
        return false;
    }
    let mut d = two;
    while &d * &d <= *n {
        if n % &d == BigUint::ZERO {
            return false;
        }
        d += 1u32;
    }
    true
}

/// Whether `g` is simple. The trivial group is reported as not simple.
///
/// Cheap certificates come first (normal closures of generators, the derived
/// subgroup); otherwise every conjugacy class is checked, which needs
/// `|G| <= limit`.
pub fn is_simple_with_limit(group: &PermutationGroup, limit: u64) -> Result<bool, PermError> {
    let order = group.order();
    if order.is_one() {
        return Ok(false);
    }
    if group.is_abelian() {
        return Ok(is_prime(&order));
    }
    for s in group.generators() {
        if normal_closure(group, s)?.order() != order {
            return Ok(false);
        }
    }
    if derived_subgroup(group).order() != order {
        return Ok(false);
    }
    for class in group.conjugacy_classes(limit)? {
        let rep = &class[0];
        if rep.is_identity() {
            continue;
        }
        if normal_closure(group, rep)?.order() != order {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn is_simple(group: &PermutationGroup) -> Result<bool, PermError> {
    is_simple_with_limit(group, SIMPLICITY_LIMIT)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_groups() {
        assert!(is_simple(&PermutationGroup::alternating(5)).unwrap());
        assert!(is_simple(&PermutationGroup::alternating(6)).unwrap());
        assert!(!is_simple(&PermutationGroup::symmetric(4)).unwrap());
        assert!(!is_simple(&PermutationGroup::symmetric(5)).unwrap());
        assert!(!is_simple(&PermutationGroup::alternating(4)).unwrap());
        assert!(!is_simple(&PermutationGroup::trivial(3)).unwrap());
        assert!(is_simple(&PermutationGroup::symmetric(2)).unwrap());
        assert!(is_simple(&PermutationGroup::from_cycle_strings(5, &["(0 1 2 3 4)"]).unwrap()).unwrap());
        let c4 = PermutationGroup::from_cycle_strings(4, &["(0 1 2 3)"]).unwrap();
        assert!(!is_simple(&c4).unwrap());
    }

    #[test]
    fn sums_are_not_simple() {
        for n in 4..=6 {
            for r in 1..=2 {
                for m in 0..=2 {
                    let g = PermutationGroup::symmetric(n)
                        .parallel_multiple(r)
                        .unwrap()
                        .direct_sum(&PermutationGroup::trivial(m));
                    assert!(!is_simple(&g).unwrap(), "n={n} r={r} m={m}");
                }
            }
        }
        let a5 = PermutationGroup::alternating(5);
        assert!(!is_simple(&a5.direct_sum(&a5)).unwrap());
        assert!(is_simple(&a5.parallel_multiple(3).unwrap()).unwrap());
    }

    #[test]
    fn closures() {
        let s4 = PermutationGroup::symmetric(4);
        let v = normal_closure(&s4, &Permutation::parse_cycles(4, "(0 1)(2 3)").unwrap()).unwrap();
        assert_eq!(v.order(), BigUint::from(4u32));
        assert!(normal_closure(&s4, &Permutation::identity(4)).unwrap().is_trivial());
        for n in 5..=7 {
            let s = PermutationGroup::symmetric(n);
            let c = normal_closure(&s, &Permutation::parse_cycles(n, "(0 1 2)").unwrap()).unwrap();
            assert_eq!(c, PermutationGroup::alternating(n));
        }
        let a5 = PermutationGroup::alternating(5);
        assert!(matches!(
            normal_closure(&a5, &Permutation::parse_cycles(5, "(0 1)").unwrap()),
            Err(PermError::NotASubgroup)
        ));
        assert_eq!(derived_subgroup(&PermutationGroup::symmetric(5)), a5);
    }
}
