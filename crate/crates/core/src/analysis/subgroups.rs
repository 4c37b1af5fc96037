//! Existence of subgroups of a given order or index.

use std::collections::{HashMap, HashSet};
use std::time::Instant;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::perm::{Permutation, PermutationGroup, StabilizerChain};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SubgroupSearchBudget {
    pub max_group_order: u64,
    pub max_subgroups_explored: u64,
    pub time_limit_secs: f64,
}

impl Default for SubgroupSearchBudget {
    fn default() -> Self {
        SubgroupSearchBudget {
            max_group_order: 10_000,
            max_subgroups_explored: 1_000_000,
            time_limit_secs: 600.0,
        }
    }
}

impl SubgroupSearchBudget {
    /// Large enough for `A_8`.
    pub fn extended() -> Self {
        SubgroupSearchBudget {
            max_group_order: 25_000,
            ..Self::default()
        }
    }
}

/// Outcome of a subgroup search. `Unknown` is returned whenever the search
/// could not be completed; it never stands in for `Absent`.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum SubgroupSearch {
    Found { generators: Vec<Permutation> },
    Absent { subgroups_explored: u64 },
    Unknown { reason: String },
}

impl SubgroupSearch {
    pub fn exists(&self) -> Option<bool> {
        match self {
            SubgroupSearch::Found { .. } => Some(true),
            SubgroupSearch::Absent { .. } => Some(false),
            SubgroupSearch::Unknown { .. } => None,
        }
    }
}

struct Bits(Vec<u64>);

impl Bits {
    fn new(n: usize) -> Self {
        Bits(vec![0; n.div_ceil(64)])
    }
    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }
    fn get(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }
}

struct Node {
    chain: StabilizerChain,
    generators: Vec<Permutation>,
    members: Bits,
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn is_prime_power(n: u64) -> bool {
    n > 1 && prime_factors(n).len() == 1
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Decides whether `group` has a subgroup of order `m`.
///
/// Any such subgroup `K` contains an element of each prime order `p | m`, so
/// up to conjugacy it contains one of a few seed cyclic subgroups of order `p`.
/// From each seed the search adds cyclic subgroups of prime-power order one at
/// a time, keeping only subgroups whose order divides `m`. Every subgroup of
/// `K` containing the seed is reachable that way, so exhausting the search
/// proves absence.
pub fn subgroup_of_order_exists(
    group: &PermutationGroup,
    m: &BigUint,
    budget: &SubgroupSearchBudget,
) -> SubgroupSearch {
    let order = group.order();
    let n = group.degree();
    if *m == BigUint::ZERO || &order % m != BigUint::ZERO {
        return SubgroupSearch::Absent { subgroups_explored: 0 };
    }
    if *m == BigUint::from(1u32) {
        return SubgroupSearch::Found { generators: vec![] };
    }
    if *m == order {
        return SubgroupSearch::Found {
            generators: group.generators().to_vec(),
        };
    }
    let Some(total) = order.to_u64().filter(|&o| o <= budget.max_group_order) else {
        return SubgroupSearch::Unknown {
            reason: format!("group order {order} exceeds budget {}", budget.max_group_order),
        };
    };
    let m = m.to_u64().unwrap();
    let start = Instant::now();

    let elements: Vec<Permutation> = group.elements().collect();
    let index: HashMap<&Permutation, usize> = elements.iter().enumerate().map(|(i, e)| (e, i)).collect();
    let orders: Vec<u64> = elements.iter().map(Permutation::order).collect();

    // One canonical generator per cyclic subgroup of prime-power order dividing m.
    let canonical = |i: usize| -> usize {
        let o = orders[i];
        (1..=o)
            .filter(|&k| gcd(k, o) == 1)
            .map(|k| index[&elements[i].pow(k)])
            .min()
            .unwrap()
    };
    let candidates: Vec<usize> = (0..elements.len())
        .filter(|&i| is_prime_power(orders[i]) && m.is_multiple_of(orders[i]) && canonical(i) == i)
        .collect();

    let classes = match group.conjugacy_classes(total) {
        Ok(c) => c,
        Err(e) => return SubgroupSearch::Unknown { reason: e.to_string() },
    };
    let mut class_of = vec![0usize; elements.len()];
    for (c, class) in classes.iter().enumerate() {
        for x in class {
            class_of[index[x]] = c;
        }
    }
    // Seeds for prime p: class reps of order p, dropping reps whose class
    // contains a power of an earlier rep (they generate conjugate subgroups).
    let seeds_for = |p: u64| -> Vec<usize> {
        let mut kept: Vec<usize> = Vec::new();
        let mut covered: HashSet<usize> = HashSet::new();
        for class in &classes {
            let r = index[&class[0]];
            if orders[r] != p || covered.contains(&class_of[r]) {
                continue;
            }
            for k in 1..p {
                covered.insert(class_of[index[&elements[r].pow(k)]]);
            }
            kept.push(r);
        }
        kept
    };
    let seeds = prime_factors(m)
        .into_iter()
        .map(seeds_for)
        .min_by_key(|s| s.len())
        .unwrap();

    let members_of = |chain: &StabilizerChain| -> Bits {
        let mut bits = Bits::new(elements.len());
        for e in chain.elements() {
            bits.set(index[&e]);
        }
        bits
    };

    let mut seen: HashSet<Vec<u64>> = HashSet::new();
    let mut queue: Vec<Node> = Vec::new();
    for s in seeds {
        let g = elements[s].clone();
        if orders[s] == m {
            return SubgroupSearch::Found { generators: vec![g] };
        }
        let chain = StabilizerChain::new(n, std::slice::from_ref(&g));
        let members = members_of(&chain);
        if seen.insert(members.0.clone()) {
            queue.push(Node { chain, generators: vec![g], members });
        }
    }
    let mut explored: u64 = 0;
    while let Some(node) = queue.pop() {
        for &c in &candidates {
            if node.members.get(c) {
                continue;
            }
            explored += 1;
            if explored > budget.max_subgroups_explored {
                return SubgroupSearch::Unknown {
                    reason: format!("explored more than {} subgroups", budget.max_subgroups_explored),
                };
            }
            if explored.is_multiple_of(1024) && start.elapsed().as_secs_f64() > budget.time_limit_secs {
                return SubgroupSearch::Unknown {
                    reason: format!("time limit of {}s reached", budget.time_limit_secs),
                };
            }
            let mut chain = node.chain.clone();
            chain.add_generator(elements[c].clone());
            let k = chain.order().to_u64().unwrap();
            if !m.is_multiple_of(k) {
                continue;
            }
            let mut generators = node.generators.clone();
            generators.push(elements[c].clone());
            if k == m {
                return SubgroupSearch::Found { generators };
            }
            let members = members_of(&chain);
            if seen.insert(members.0.clone()) {
                queue.push(Node { chain, generators, members });
            }
        }
    }
    SubgroupSearch::Absent { subgroups_explored: explored }
}

/// Whether `group` has a subgroup of index `d`.
pub fn subgroup_of_index_exists(
    group: &PermutationGroup,
    d: u64,
    budget: &SubgroupSearchBudget,
) -> SubgroupSearch {
    let order = group.order();
    let d = BigUint::from(d);
    if d == BigUint::ZERO || &order % &d != BigUint::ZERO {
        return SubgroupSearch::Absent { subgroups_explored: 0 };
    }
    subgroup_of_order_exists(group, &(order / d), budget)
}

/// Transitive actions on `d` points correspond to subgroups of index `d`
/// (the action on their cosets), so this is [`subgroup_of_index_exists`].
pub fn transitive_action_exists(
    group: &PermutationGroup,
    d: u64,
    budget: &SubgroupSearchBudget,
) -> SubgroupSearch {
    subgroup_of_index_exists(group, d, budget)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(g: &PermutationGroup, index: u64) -> Option<bool> {
        subgroup_of_index_exists(g, index, &SubgroupSearchBudget::default()).exists()
    }

    #[test]
    fn alternating_five() {
        let a5 = PermutationGroup::alternating(5);
        assert_eq!(check(&a5, 2), Some(false));
        assert_eq!(check(&a5, 5), Some(true));
        assert_eq!(check(&a5, 10), Some(true));
        assert_eq!(check(&a5, 4), Some(false));
        assert_eq!(check(&a5, 1), Some(true));
        assert_eq!(check(&a5, 7), Some(false));
    }

    #[test]
    fn found_witness_has_the_right_order() {
        let a5 = PermutationGroup::alternating(5);
        if let SubgroupSearch::Found { generators } =
            subgroup_of_index_exists(&a5, 6, &SubgroupSearchBudget::default())
        {
            let h = PermutationGroup::new(5, generators).unwrap();
            assert_eq!(h.order(), BigUint::from(10u32));
            assert!(h.is_subgroup_of(&a5));
        } else {
            panic!("A5 has dihedral subgroups of order 10");
        }
    }

    #[test]
    fn over_budget_is_unknown() {
        let budget = SubgroupSearchBudget {
            max_group_order: 100,
            ..Default::default()
        };
        let a6 = PermutationGroup::alternating(6);
        assert_eq!(subgroup_of_index_exists(&a6, 2, &budget).exists(), None);
    }
}
