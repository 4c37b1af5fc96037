//! Parallel sums and permutation isomorphism.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{PermError, Permutation, PermutationGroup};

/// Pairs `(x, λ(x))` of a partial relabeling.
type PointMap = Vec<(usize, usize)>;

/// An abstract isomorphism `ψ: source -> target`, given by the images of the
/// source generators.
#[derive(Clone, Debug)]
pub struct IsomorphismSpec {
    pub source: PermutationGroup,
    pub target: PermutationGroup,
    pub generator_images: Vec<Permutation>,
}

impl IsomorphismSpec {
    pub fn new(
        source: PermutationGroup,
        target: PermutationGroup,
        generator_images: Vec<Permutation>,
    ) -> Self {
        IsomorphismSpec {
            source,
            target,
            generator_images,
        }
    }

    /// The identity isomorphism of `G` onto itself.
    pub fn identity(group: &PermutationGroup) -> Self {
        IsomorphismSpec::new(group.clone(), group.clone(), group.generators().to_vec())
    }

    /// The diagonal group `{(g, ψ(g))}` on the disjoint union, before validation.
    fn diagonal(&self) -> Result<PermutationGroup, PermError> {
        let gens = self.source.generators();
        if gens.len() != self.generator_images.len() {
            return Err(PermError::GeneratorCountMismatch {
                generators: gens.len(),
                images: self.generator_images.len(),
            });
        }
        let mut pairs = Vec::with_capacity(gens.len());
        for (g, h) in gens.iter().zip(&self.generator_images) {
            if h.degree() != self.target.degree() {
                return Err(PermError::DegreeMismatch {
                    left: self.target.degree(),
                    right: h.degree(),
                });
            }
            pairs.push(g.juxtapose(h));
        }
        PermutationGroup::new(self.source.degree() + self.target.degree(), pairs)
    }

    /// Checks that the generator images extend to an isomorphism.
    ///
    /// The diagonal group `D` projects onto `<images>` and onto the source; the
    /// map is a well-defined injective homomorphism onto the target exactly when
    /// `|D| = |source| = |<images>| = |target|` and every image lies in the target.
    /// Orders come from exact stabilizer chains, so the check is complete at any size.
    pub fn validate(&self) -> Result<PermutationGroup, PermError> {
        let diagonal = self.diagonal()?;
        for h in &self.generator_images {
            if !self.target.contains(h)? {
                return Err(PermError::HomomorphismViolation(format!(
                    "image {h} is not in the target group"
                )));
            }
        }
        let image_group =
            PermutationGroup::new(self.target.degree(), self.generator_images.clone())?;
        let (d, s, i, t) = (
            diagonal.order(),
            self.source.order(),
            image_group.order(),
            self.target.order(),
        );
        if d != s {
            return Err(PermError::HomomorphismViolation(format!(
                "generator images do not define a homomorphism (diagonal order {d}, source order {s})"
            )));
        }
        if d != i || i != t {
            return Err(PermError::HomomorphismViolation(format!(
                "map is not bijective onto the target (image order {i}, target order {t})"
            )));
        }
        Ok(diagonal)
    }

    /// `ψ(g)` for an element of the source group.
    pub fn apply(&self, g: &Permutation) -> Result<Permutation, PermError> {
        let diagonal = self.validate()?;
        let n = self.source.degree();
        let source_points: Vec<usize> = (0..n).collect();
        let target_points: Vec<usize> = (n..n + self.target.degree()).collect();
        // Find the diagonal element whose first component is g by sifting on a
        // base made of the source points.
        let chain = diagonal.chain_with_base(&source_points);
        let mut residue = Permutation::identity(diagonal.degree());
        let lifted_target = g.juxtapose(&Permutation::identity(self.target.degree()));
        let mut x = lifted_target;
        for level in chain.levels() {
            let b = level.base_point();
            if b >= n {
                break;
            }
            let beta = x.image(b);
            let u = level
                .representative(beta)
                .ok_or_else(|| PermError::HomomorphismViolation(format!("{g} is not in the source")))?;
            x = x.compose(level.representative_inverse(beta).unwrap());
            residue = u.compose(&residue);
        }
        if !x.restricted(&source_points).map(|p| p.is_identity()).unwrap_or(false) {
            return Err(PermError::HomomorphismViolation(format!("{g} is not in the source")));
        }
        Ok(residue.restricted(&target_points).expect("diagonal preserves blocks"))
    }
}

/// `G ||_ψ H`: the diagonal subgroup `{(g, ψ(g))}` of `G ⊕ H`.
pub fn parallel_sum(spec: &IsomorphismSpec) -> Result<PermutationGroup, PermError> {
    spec.validate()
}

/// Searches for a relabeling `λ` with `λ⁻¹ G λ = H`; returns `λ` as an image array.
///
/// Pruning: order, orbit-size multiset and element cycle-type census must
/// agree. The search then fixes a small generating tuple `(g_1..g_r)` of `G`,
/// tries every tuple of candidate images in `H` (the first up to conjugacy),
/// and propagates `λ(x g_i) = λ(x) h_i` orbit by orbit.
pub fn permutation_isomorphism(
    g: &PermutationGroup,
    h: &PermutationGroup,
    limit: u64,
) -> Result<Option<Vec<usize>>, PermError> {
    if g.degree() != h.degree() || g.order() != h.order() {
        return Ok(None);
    }
    let n = g.degree();
    let mut g_sizes: Vec<usize> = g.orbits().iter().map(Vec::len).collect();
    let mut h_sizes: Vec<usize> = h.orbits().iter().map(Vec::len).collect();
    g_sizes.sort_unstable();
    h_sizes.sort_unstable();
    if g_sizes != h_sizes {
        return Ok(None);
    }
    if g.is_trivial() {
        return Ok(Some((0..n).collect()));
    }
    if g.cycle_type_census(limit)? != h.cycle_type_census(limit)? {
        return Ok(None);
    }

    let tuple = small_generating_tuple(g);
    let h_elements = h.enumerate(limit)?;
    let classes = h.conjugacy_classes(limit)?;
    let first: Vec<&Permutation> = classes
        .iter()
        .map(|c| &c[0])
        .filter(|r| r.cycle_type() == tuple[0].cycle_type())
        .collect();
    let candidates: Vec<Vec<&Permutation>> = tuple
        .iter()
        .skip(1)
        .map(|gi| {
            let ct = gi.cycle_type();
            h_elements.iter().filter(|x| x.cycle_type() == ct).collect()
        })
        .collect();

    let g_orbits = g.orbits();
    let h_orbits = h.orbits();
    let mut images: Vec<&Permutation> = Vec::with_capacity(tuple.len());
    let mut budget = limit.saturating_mul(64).max(1 << 16);
    for r in first {
        images.clear();
        images.push(r);
        if let Some(lambda) =
            extend_tuple(&tuple, &candidates, &mut images, &g_orbits, &h_orbits, h, &mut budget)?
        {
            return Ok(Some(lambda));
        }
    }
    Ok(None)
}

pub fn are_permutation_isomorphic(
    g: &PermutationGroup,
    h: &PermutationGroup,
    limit: u64,
) -> Result<bool, PermError> {
    Ok(permutation_isomorphism(g, h, limit)?.is_some())
}

fn extend_tuple<'a>(
    tuple: &[Permutation],
    candidates: &[Vec<&'a Permutation>],
    images: &mut Vec<&'a Permutation>,
    g_orbits: &[Vec<usize>],
    h_orbits: &[Vec<usize>],
    h: &PermutationGroup,
    budget: &mut u64,
) -> Result<Option<Vec<usize>>, PermError> {
    let k = images.len();
    if k == tuple.len() {
        if *budget == 0 {
            return Err(PermError::BudgetExceeded {
                order: h.order().to_string(),
                limit: 0,
            });
        }
        *budget -= 1;
        let generated = PermutationGroup::new(h.degree(), images.iter().map(|p| (*p).clone()).collect())?;
        if generated.order() != h.order() {
            return Ok(None);
        }
        return Ok(propagate(tuple, images, g_orbits, h_orbits));
    }
    for &cand in &candidates[k - 1] {
        let consistent = (0..k).all(|i| {
            tuple[i].compose(&tuple[k]).cycle_type() == images[i].compose(cand).cycle_type()
        });
        if !consistent {
            continue;
        }
        images.push(cand);
        let found = extend_tuple(tuple, candidates, images, g_orbits, h_orbits, h, budget)?;
        images.pop();
        if found.is_some() {
            return Ok(found);
        }
    }
    Ok(None)
}

/// Given images `h_i` of the generating tuple, builds `λ` orbit by orbit.
fn propagate(
    tuple: &[Permutation],
    images: &[&Permutation],
    g_orbits: &[Vec<usize>],
    h_orbits: &[Vec<usize>],
) -> Option<Vec<usize>> {
    let n = tuple[0].degree();
    // compatible[a][b] = the partial map sending G-orbit a onto H-orbit b, if any
    let mut compatible: Vec<Vec<Option<PointMap>>> = Vec::new();
    for orbit in g_orbits {
        let mut row = Vec::new();
        for target in h_orbits {
            if target.len() != orbit.len() {
                row.push(None);
                continue;
            }
            let found = target
                .iter()
                .find_map(|&y| propagate_from(orbit[0], y, tuple, images, n));
            row.push(found);
        }
        compatible.push(row);
    }
    // Bipartite matching of G-orbits to H-orbits.
    let mut matched_to: Vec<Option<usize>> = vec![None; h_orbits.len()];
    for a in 0..g_orbits.len() {
        let mut visited = vec![false; h_orbits.len()];
        if !augment(a, &compatible, &mut matched_to, &mut visited) {
            return None;
        }
    }
    let mut lambda = vec![usize::MAX; n];
    for (b, a) in matched_to.iter().enumerate() {
        if let Some(a) = a {
            for &(x, y) in compatible[*a][b].as_ref().unwrap() {
                lambda[x] = y;
            }
        }
    }
    Some(lambda)
}

fn augment(
    a: usize,
    compatible: &[Vec<Option<PointMap>>],
    matched_to: &mut [Option<usize>],
    visited: &mut [bool],
) -> bool {
    for b in 0..matched_to.len() {
        if compatible[a][b].is_none() || visited[b] {
            continue;
        }
        visited[b] = true;
        if matched_to[b].is_none() || augment(matched_to[b].unwrap(), compatible, matched_to, visited) {
            matched_to[b] = Some(a);
            return true;
        }
    }
    false
}

fn propagate_from(
    x0: usize,
    y0: usize,
    tuple: &[Permutation],
    images: &[&Permutation],
    n: usize,
) -> Option<Vec<(usize, usize)>> {
    let mut map: HashMap<usize, usize> = HashMap::new();
    let mut used: HashMap<usize, usize> = HashMap::new();
    map.insert(x0, y0);
    used.insert(y0, x0);
    let mut queue = vec![x0];
    while let Some(x) = queue.pop() {
        let y = map[&x];
        for (g, h) in tuple.iter().zip(images) {
            let (xg, yh) = (g.image(x), h.image(y));
            match map.get(&xg) {
                Some(&prev) if prev != yh => return None,
                Some(_) => {}
                None => {
                    if used.contains_key(&yh) {
                        return None;
                    }
                    map.insert(xg, yh);
                    used.insert(yh, xg);
                    queue.push(xg);
                }
            }
        }
    }
    debug_assert!(map.len() <= n);
    let mut pairs: Vec<(usize, usize)> = map.into_iter().collect();
    pairs.sort_unstable();
    Some(pairs)
}

/// A few elements generating `g`: a greedy subset of the given generators, or
/// a pseudo-random pair when that is shorter.
fn small_generating_tuple(g: &PermutationGroup) -> Vec<Permutation> {
    let target = g.order();
    let mut chosen: Vec<Permutation> = Vec::new();
    let mut chain = super::StabilizerChain::new(g.degree(), &[]);
    for s in g.generators() {
        if chain.add_generator(s.clone()) {
            chosen.push(s.clone());
        }
        if chain.order() == target {
            break;
        }
    }
    if chosen.len() <= 2 {
        return chosen;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..256 {
        let (la, lb) = (12 + rng.gen_range(0..8), 12 + rng.gen_range(0..8));
        let a = g.random_word(&mut rng, la);
        let b = g.random_word(&mut rng, lb);
        let pair = PermutationGroup::new(g.degree(), vec![a.clone(), b.clone()]).unwrap();
        if pair.order() == target {
            return vec![a, b];
        }
    }
    chosen
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    fn p(n: usize, s: &str) -> Permutation {
        Permutation::parse_cycles(n, s).unwrap()
    }

    #[test]
    fn parallel_sum_of_s2_with_itself() {
        let s2 = PermutationGroup::symmetric(2);
        let sum = parallel_sum(&IsomorphismSpec::identity(&s2)).unwrap();
        assert_eq!(sum.order(), BigUint::from(2u32));
        let direct = s2.direct_sum(&s2);
        assert!(sum.is_subgroup_of(&direct));
    }

    #[test]
    fn parallel_sum_orbits_match_multiple() {
        let a5 = PermutationGroup::alternating(5);
        let sum = parallel_sum(&IsomorphismSpec::identity(&a5)).unwrap();
        let sizes: Vec<usize> = sum.orbits().iter().map(Vec::len).collect();
        assert_eq!(sizes, vec![5, 5]);
        assert_eq!(sum, a5.parallel_multiple(2).unwrap());
    }

    #[test]
    fn rejects_bad_specs() {
        let s3 = PermutationGroup::symmetric(3);
        let missing = IsomorphismSpec::new(s3.clone(), s3.clone(), vec![p(3, "(0 1)")]);
        assert!(matches!(
            parallel_sum(&missing),
            Err(PermError::GeneratorCountMismatch { .. })
        ));
        // (0 1) -> (0 1 2) does not respect element orders.
        let bad = IsomorphismSpec::new(s3.clone(), s3.clone(), vec![p(3, "(0 1 2)"), p(3, "(0 1 2)")]);
        assert!(matches!(parallel_sum(&bad), Err(PermError::HomomorphismViolation(_))));
        // Not surjective: everything to a single transposition.
        let c2 = PermutationGroup::new(3, vec![p(3, "(0 1)")]).unwrap();
        let onto_c2 = IsomorphismSpec::new(s3.clone(), s3, vec![p(3, "(0 1)"), Permutation::identity(3)]);
        assert!(parallel_sum(&onto_c2).is_err());
        let _ = c2;
    }

    #[test]
    fn apply_evaluates_the_isomorphism() {
        let s3 = PermutationGroup::symmetric(3);
        // Conjugation by (0 1) is an automorphism of S_3.
        let c = p(3, "(0 1)");
        let images = s3.generators().iter().map(|g| g.conjugate_by(&c)).collect();
        let spec = IsomorphismSpec::new(s3.clone(), s3.clone(), images);
        for g in s3.elements() {
            assert_eq!(spec.apply(&g).unwrap(), g.conjugate_by(&c));
        }
    }

    #[test]
    fn isomorphism_basics() {
        let a5 = PermutationGroup::alternating(5);
        assert!(are_permutation_isomorphic(&a5, &a5, 10_000).unwrap());
        let s22 = PermutationGroup::symmetric(2).parallel_multiple(2).unwrap();
        let klein = PermutationGroup::from_cycle_strings(4, &["(0 1)(2 3)", "(0 2)(1 3)"]).unwrap();
        assert!(!are_permutation_isomorphic(&s22, &klein, 10_000).unwrap());
        // Same abstract group Z_2, different actions.
        let swap = PermutationGroup::from_cycle_strings(4, &["(0 1)"]).unwrap().direct_sum(&PermutationGroup::trivial(0));
        assert!(!are_permutation_isomorphic(&s22, &swap, 10_000).unwrap());
    }

    #[test]
    fn relabeled_groups_are_isomorphic() {
        let g = PermutationGroup::from_cycle_strings(6, &["(0 1 2)(3 4)", "(1 2)"]).unwrap();
        let relabel = [4, 2, 0, 5, 1, 3];
        let h = PermutationGroup::new(
            6,
            g.generators().iter().map(|x| x.relabeled(&relabel)).collect(),
        )
        .unwrap();
        let lambda = permutation_isomorphism(&g, &h, 10_000).unwrap().unwrap();
        for x in g.generators() {
            assert!(h.contains(&x.relabeled(&lambda)).unwrap());
        }
    }
}
