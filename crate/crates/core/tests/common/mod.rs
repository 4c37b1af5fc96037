//! Brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap, HashSet};

use symdist::distinguish::{preserves, Coloring};
use symdist::graph::Graph;
use symdist::perm::{Permutation, PermutationGroup};

/// Every element, closed under multiplication starting from the generators.
pub fn closure(degree: usize, gens: &[Permutation]) -> Vec<Permutation> {
    let id = Permutation::identity(degree);
    let mut seen: HashSet<Permutation> = HashSet::from([id.clone()]);
    let mut out = vec![id];
    let mut k = 0;
    while k < out.len() {
        let g = out[k].clone();
        for s in gens {
            let h = g.compose(s);
            if seen.insert(h.clone()) {
                out.push(h);
            }
        }
        k += 1;
    }
    out
}

/// Orders of all subgroups, found by joining cyclic subgroups pairwise until
/// nothing new appears. Each subgroup is a set of element indices.
pub fn subgroup_orders(group: &PermutationGroup) -> BTreeSet<usize> {
    let elements = closure(group.degree(), group.generators());
    let index: HashMap<&Permutation, usize> = elements.iter().enumerate().map(|(i, g)| (g, i)).collect();
    let m = elements.len();
    let table: Vec<Vec<usize>> = elements
        .iter()
        .map(|a| elements.iter().map(|b| index[&a.compose(b)]).collect())
        .collect();
    let close = |seed: &BTreeSet<usize>| -> BTreeSet<usize> {
        let mut set = seed.clone();
        set.insert(index[&Permutation::identity(group.degree())]);
        loop {
            let mut grown = set.clone();
            for &a in &set {
                for &b in seed {
                    grown.insert(table[a][b]);
                }
            }
            if grown.len() == set.len() {
                return set;
            }
            set = grown;
        }
    };
    let mut all: HashSet<BTreeSet<usize>> = HashSet::new();
    let cyclic: Vec<BTreeSet<usize>> = (0..m).map(|i| close(&BTreeSet::from([i]))).collect();
    all.extend(cyclic.iter().cloned());
    let mut frontier: Vec<BTreeSet<usize>> = all.iter().cloned().collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for h in &frontier {
            for c in &cyclic {
                if c.is_subset(h) {
                    continue;
                }
                let joined = close(&h.union(c).copied().collect());
                if all.insert(joined.clone()) {
                    next.push(joined);
                }
            }
        }
        frontier = next;
    }
    all.iter().map(BTreeSet::len).collect()
}

/// Least `d` admitting a coloring in `[d]^n` that only the identity preserves.
pub fn exhaustive_distinguishing_number(group: &PermutationGroup) -> u32 {
    let n = group.degree();
    let elements: Vec<Permutation> = closure(n, group.generators())
        .into_iter()
        .filter(|g| !g.is_identity())
        .collect();
    for d in 1..=n.max(1) as u32 {
        let total = (d as u64).pow(n as u32);
        for code in 0..total {
            let mut c = code;
            let colors: Vec<u32> = (0..n)
                .map(|_| {
                    let v = (c % d as u64) as u32 + 1;
                    c /= d as u64;
                    v
                })
                .collect();
            let coloring = Coloring::new(colors, d).unwrap();
            if elements.iter().all(|g| !preserves(g, &coloring).unwrap()) {
                return d;
            }
        }
    }
    n as u32
}

/// `|Aut(Γ)|` by testing every vertex permutation.
pub fn brute_force_automorphism_count(g: &Graph) -> usize {
    let n = g.vertex_count();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut count = 0;
    permute(&mut perm, 0, &mut |p| {
        if g.is_automorphism(p) {
            count += 1;
        }
    });
    count
}

fn permute(p: &mut Vec<usize>, k: usize, f: &mut dyn FnMut(&[usize])) {
    if k == p.len() {
        f(p);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permute(p, k + 1, f);
        p.swap(k, i);
    }
}

/// Small groups for subgroup-lattice cross-checks, all of order at most 200.
pub fn small_groups() -> Vec<(&'static str, PermutationGroup)> {
    let g = |n, gens: &[&str]| PermutationGroup::from_cycle_strings(n, gens).unwrap();
    vec![
        ("A4", PermutationGroup::alternating(4)),
        ("S4", PermutationGroup::symmetric(4)),
        ("A5", PermutationGroup::alternating(5)),
        ("S5", PermutationGroup::symmetric(5)),
        ("D6", g(6, &["(0 1 2 3 4 5)", "(1 5)(2 4)"])),
        ("C2^3", g(6, &["(0 1)", "(2 3)", "(4 5)"])),
        ("S3xS3", g(6, &["(0 1 2)", "(0 1)", "(3 4 5)", "(3 4)"])),
        ("AGL(1,7)", g(7, &["(0 1 2 3 4 5 6)", "(1 3 2 6 4 5)"])),
        ("F21", g(7, &["(0 1 2 3 4 5 6)", "(1 2 4)(3 6 5)"])),
        ("Q8", g(8, &["(0 1 2 3)(4 5 6 7)", "(0 4 2 6)(1 7 3 5)"])),
        ("L3(2)", symdist::analysis::named_group("L3(2)").unwrap().group),
    ]
}
