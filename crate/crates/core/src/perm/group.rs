use std::collections::{BTreeMap, HashSet};
use std::sync::OnceLock;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use super::bsgs::StabilizerChain;
use super::{PermError, Permutation};

/// A permutation group given by generators on the points `0..degree`.
///
/// The stabilizer chain is computed on first use and cached; the cache is
/// write-once, so groups can be shared across threads.
#[derive(Clone, Debug)]
pub struct PermutationGroup {
    degree: usize,
    generators: Vec<Permutation>,
    chain: OnceLock<StabilizerChain>,
}

impl PermutationGroup {
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self, PermError> {
        for g in &generators {
            if g.degree() != degree {
                return Err(PermError::DegreeMismatch {
                    left: degree,
                    right: g.degree(),
                });
            }
        }
        let generators = generators.into_iter().filter(|g| !g.is_identity()).collect();
        Ok(PermutationGroup {
            degree,
            generators,
            chain: OnceLock::new(),
        })
    }

    /// `I_n`: the identity group on `n` points.
    pub fn trivial(n: usize) -> Self {
        PermutationGroup::new(n, Vec::new()).unwrap()
    }

    /// `S_n` in its natural action.
    pub fn symmetric(n: usize) -> Self {
        let mut gens = Vec::new();
        if n >= 2 {
            gens.push(Permutation::from_cycles(n, &[vec![0, 1]]).unwrap());
        }
        if n >= 3 {
            gens.push(Permutation::from_cycles(n, &[(0..n).collect()]).unwrap());
        }
        PermutationGroup::new(n, gens).unwrap()
    }

    /// `A_n` in its natural action, generated by `(0 1 2)` and an even long cycle.
    pub fn alternating(n: usize) -> Self {
        let mut gens = Vec::new();
        if n >= 3 {
            gens.push(Permutation::from_cycles(n, &[vec![0, 1, 2]]).unwrap());
        }
        if n >= 4 {
            let cycle: Vec<usize> = if n % 2 == 1 { (0..n).collect() } else { (1..n).collect() };
            gens.push(Permutation::from_cycles(n, &[cycle]).unwrap());
        }
        PermutationGroup::new(n, gens).unwrap()
    }

    /// Convenience constructor from cycle-notation strings.
    pub fn from_cycle_strings(degree: usize, gens: &[&str]) -> Result<Self, PermError> {
        let gens = gens
            .iter()
            .map(|s| Permutation::parse_cycles(degree, s))
            .collect::<Result<Vec<_>, _>>()?;
        PermutationGroup::new(degree, gens)
    }

    /// Parses a group literal: a `degree=N` header, then one generator per line in
    /// cycle notation. Blank lines and lines starting with `#` are ignored.
    pub fn parse_literal(text: &str) -> Result<Self, PermError> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines
            .next()
            .ok_or_else(|| PermError::Parse("empty group literal".into()))?;
        let degree = header
            .strip_prefix("degree=")
            .and_then(|d| d.trim().parse::<usize>().ok())
            .ok_or_else(|| PermError::Parse(format!("expected 'degree=N' header, got {header:?}")))?;
        let gens = lines
            .map(|l| Permutation::parse_cycles(degree, l))
            .collect::<Result<Vec<_>, _>>()?;
        PermutationGroup::new(degree, gens)
    }

    pub fn to_literal(&self) -> String {
        let mut out = format!("degree={}\n", self.degree);
        for g in &self.generators {
            out.push_str(&g.to_string());
            out.push('\n');
        }
        out
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn chain(&self) -> &StabilizerChain {
        self.chain
            .get_or_init(|| StabilizerChain::new(self.degree, &self.generators))
    }

    /// A fresh stabilizer chain whose base begins with `prefix`.
    pub fn chain_with_base(&self, prefix: &[usize]) -> StabilizerChain {
        StabilizerChain::with_base_prefix(self.degree, &self.generators, prefix)
    }

    pub fn order(&self) -> BigUint {
        self.chain().order()
    }

    /// The order as a `u64`, or `None` if it does not fit.
    pub fn order_u64(&self) -> Option<u64> {
        self.order().to_u64()
    }

    pub fn is_trivial(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn contains(&self, p: &Permutation) -> Result<bool, PermError> {
        if p.degree() != self.degree {
            return Err(PermError::DegreeMismatch {
                left: self.degree,
                right: p.degree(),
            });
        }
        Ok(self.chain().contains(p))
    }

    pub fn elements(&self) -> impl Iterator<Item = Permutation> + '_ {
        self.chain().elements()
    }

    /// All elements, provided the order does not exceed `limit`.
    pub fn enumerate(&self, limit: u64) -> Result<Vec<Permutation>, PermError> {
        match self.order_u64() {
            Some(n) if n <= limit => Ok(self.elements().collect()),
            _ => Err(PermError::BudgetExceeded {
                order: self.order().to_string(),
                limit,
            }),
        }
    }

    /// Orbits of the group, each sorted, listed by least point.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        orbits_of(self.degree, &self.generators)
    }

    pub fn orbit_of(&self, x: usize) -> Vec<usize> {
        let mut seen = vec![false; self.degree];
        seen[x] = true;
        let mut orbit = vec![x];
        let mut k = 0;
        while k < orbit.len() {
            let y = orbit[k];
            for g in &self.generators {
                let z = g.image(y);
                if !seen[z] {
                    seen[z] = true;
                    orbit.push(z);
                }
            }
            k += 1;
        }
        orbit.sort_unstable();
        orbit
    }

    pub fn fixed_points(&self) -> Vec<usize> {
        (0..self.degree)
            .filter(|&x| self.generators.iter().all(|g| g.fixes(x)))
            .collect()
    }

    /// Splits off the fixed points: returns `G_0` acting on the moved points
    /// (renumbered in increasing order) and the number of fixed points.
    pub fn strip_fixed_points(&self) -> (PermutationGroup, usize) {
        let fixed = self.fixed_points();
        let moved: Vec<usize> = (0..self.degree).filter(|x| !fixed.contains(x)).collect();
        let gens = self
            .generators
            .iter()
            .map(|g| g.restricted(&moved).expect("moved points are invariant"))
            .collect();
        (PermutationGroup::new(moved.len(), gens).unwrap(), fixed.len())
    }

    /// The action on an invariant subset of points; `points[i]` becomes point `i`.
    pub fn restricted_to(&self, points: &[usize]) -> Result<PermutationGroup, PermError> {
        let gens = self
            .generators
            .iter()
            .map(|g| g.restricted(points).ok_or(PermError::NotInvariant))
            .collect::<Result<Vec<_>, _>>()?;
        PermutationGroup::new(points.len(), gens)
    }

    pub fn is_transitive(&self) -> bool {
        self.degree <= 1 || self.orbit_of(0).len() == self.degree
    }

    /// Transitive, and the stabilizer of point 0 is transitive on the other points.
    pub fn is_2_transitive(&self) -> bool {
        if self.degree < 2 || !self.is_transitive() {
            return false;
        }
        let chain = self.chain_with_base(&[0]);
        let stab = PermutationGroup::new(self.degree, chain.stabilizer_generators(1)).unwrap();
        stab.orbit_of(1).len() == self.degree - 1
    }

    /// `G ⊕ H`: the product acting componentwise on the disjoint union, `G`'s points first.
    pub fn direct_sum(&self, other: &PermutationGroup) -> PermutationGroup {
        let total = self.degree + other.degree;
        let gens = self
            .generators
            .iter()
            .map(|g| g.shifted(0, total))
            .chain(other.generators.iter().map(|h| h.shifted(self.degree, total)))
            .collect();
        PermutationGroup::new(total, gens).unwrap()
    }

    /// `G^(k)`: `k` parallel copies of `G` linked by the identity isomorphism.
    pub fn parallel_multiple(&self, k: usize) -> Result<PermutationGroup, PermError> {
        if k == 0 {
            return Err(PermError::ZeroMultiplicity);
        }
        let gens = self
            .generators
            .iter()
            .map(|g| {
                let mut acc = g.clone();
                for _ in 1..k {
                    acc = acc.juxtapose(g);
                }
                acc
            })
            .collect();
        PermutationGroup::new(self.degree * k, gens)
    }

    /// Induced action on unordered pairs `{i, j}`, `i < j`, indexed lexicographically.
    pub fn on_pairs(&self) -> (PermutationGroup, Vec<(usize, usize)>) {
        let pairs: Vec<(usize, usize)> = (0..self.degree)
            .flat_map(|i| (i + 1..self.degree).map(move |j| (i, j)))
            .collect();
        let index: BTreeMap<(usize, usize), usize> =
            pairs.iter().enumerate().map(|(k, &p)| (p, k)).collect();
        let gens = self
            .generators
            .iter()
            .map(|g| {
                let images = pairs
                    .iter()
                    .map(|&(i, j)| {
                        let (a, b) = (g.image(i), g.image(j));
                        index[&(a.min(b), a.max(b))]
                    })
                    .collect();
                Permutation::from_images_unchecked(images)
            })
            .collect();
        (PermutationGroup::new(pairs.len(), gens).unwrap(), pairs)
    }

    /// Right-coset action of the group on the cosets of `subgroup`.
    ///
    /// Cosets are numbered in breadth-first order from the subgroup itself.
    pub fn coset_action(&self, subgroup: &PermutationGroup) -> Result<PermutationGroup, PermError> {
        if subgroup.degree != self.degree {
            return Err(PermError::DegreeMismatch {
                left: self.degree,
                right: subgroup.degree,
            });
        }
        for h in subgroup.generators() {
            if !self.chain().contains(h) {
                return Err(PermError::NotASubgroup);
            }
        }
        let index = (self.order() / subgroup.order())
            .to_usize()
            .ok_or(PermError::NotASubgroup)?;
        let sub = subgroup.chain();
        let find = |reps: &[Permutation], x: &Permutation| {
            reps.iter().position(|r| sub.contains(&x.compose(&r.inverse())))
        };
        let mut reps = vec![Permutation::identity(self.degree)];
        let mut table: Vec<Vec<usize>> = vec![Vec::new(); self.generators.len()];
        let mut k = 0;
        while k < reps.len() {
            for (gi, g) in self.generators.iter().enumerate() {
                let x = reps[k].compose(g);
                let j = match find(&reps, &x) {
                    Some(j) => j,
                    None => {
                        reps.push(x);
                        reps.len() - 1
                    }
                };
                table[gi].push(j);
            }
            k += 1;
        }
        debug_assert_eq!(reps.len(), index);
        let gens = table
            .into_iter()
            .map(Permutation::from_images)
            .collect::<Result<Vec<_>, _>>()?;
        PermutationGroup::new(reps.len(), gens)
    }

    /// A random element as a product of `length` generators, for tests and sampling.
    pub fn random_word<R: rand::Rng>(&self, rng: &mut R, length: usize) -> Permutation {
        let mut acc = Permutation::identity(self.degree);
        if self.generators.is_empty() {
            return acc;
        }
        for _ in 0..length {
            let g = &self.generators[rng.gen_range(0..self.generators.len())];
            acc = acc.compose(g);
        }
        acc
    }

    /// Group equality as sets of permutations.
    pub fn same_elements(&self, other: &PermutationGroup) -> bool {
        self.degree == other.degree
            && self.order() == other.order()
            && other.generators.iter().all(|g| self.chain().contains(g))
    }

    pub fn is_subgroup_of(&self, other: &PermutationGroup) -> bool {
        self.degree == other.degree && self.generators.iter().all(|g| other.chain().contains(g))
    }

    /// Multiset of element cycle types, as a sorted map (requires enumeration).
    pub fn cycle_type_census(&self, limit: u64) -> Result<BTreeMap<Vec<usize>, u64>, PermError> {
        let mut census = BTreeMap::new();
        for g in self.enumerate(limit)? {
            *census.entry(g.cycle_type()).or_insert(0) += 1;
        }
        Ok(census)
    }

    /// Conjugacy classes, each led by its first element in enumeration order.
    pub fn conjugacy_classes(&self, limit: u64) -> Result<Vec<Vec<Permutation>>, PermError> {
        let elements = self.enumerate(limit)?;
        let mut seen: HashSet<Permutation> = HashSet::with_capacity(elements.len());
        let inverses: Vec<Permutation> = self.generators.iter().map(Permutation::inverse).collect();
        let mut classes = Vec::new();
        for x in elements {
            if seen.contains(&x) {
                continue;
            }
            seen.insert(x.clone());
            let mut class = vec![x];
            let mut k = 0;
            while k < class.len() {
                for (s, s_inv) in self.generators.iter().zip(&inverses) {
                    let y = s_inv.compose(&class[k]).compose(s);
                    if seen.insert(y.clone()) {
                        class.push(y);
                    }
                }
                k += 1;
            }
            classes.push(class);
        }
        Ok(classes)
    }

    pub fn is_abelian(&self) -> bool {
        self.generators.iter().enumerate().all(|(i, a)| {
            self.generators[i + 1..]
                .iter()
                .all(|b| a.compose(b) == b.compose(a))
        })
    }
}

/// Orbits of the group generated by `gens`, each sorted, ordered by least point.
pub fn orbits_of(degree: usize, gens: &[Permutation]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; degree];
    let mut out = Vec::new();
    for start in 0..degree {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut orbit = vec![start];
        let mut k = 0;
        while k < orbit.len() {
            let y = orbit[k];
            for g in gens {
                let z = g.image(y);
                if !seen[z] {
                    seen[z] = true;
                    orbit.push(z);
                }
            }
            k += 1;
        }
        orbit.sort_unstable();
        out.push(orbit);
    }
    out
}

impl PartialEq for PermutationGroup {
    fn eq(&self, other: &Self) -> bool {
        self.same_elements(other)
    }
}
