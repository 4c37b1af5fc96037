//! Structure of uniform graphs: `Aut = S_n^(r_1) ⊕ ... ⊕ S_n^(r_s) ⊕ I_m`.

use std::fmt;

use serde::Serialize;

use crate::graph::Graph;
use crate::perm::{Permutation, PermutationGroup};

use super::orbits::{orbit_structure_of, uniformity_of};
use super::{automorphism_group, SymmetryError};

#[derive(Clone, Debug, Serialize)]
pub struct UniformDecomposition {
    pub n: usize,
    /// `r_1 >= ... >= r_s`: how many orbits each essential-edge component links.
    pub multiplicities: Vec<usize>,
    pub fixed_count: usize,
    /// Nontrivial orbits grouped by component, as vertex lists.
    pub components: Vec<Vec<Vec<usize>>>,
    /// Whether the strict reading (no exempt edge-orbits) also holds.
    pub strict_uniform: bool,
    /// `Aut(Γ)` equals the group predicted from the components, as a set.
    pub matches_automorphism_group: bool,
}

impl UniformDecomposition {
    pub fn shape(&self) -> String {
        let mut parts: Vec<String> = self
            .multiplicities
            .iter()
            .map(|&r| {
                if r == 1 {
                    format!("S_{}", self.n)
                } else {
                    format!("S_{}^({})", self.n, r)
                }
            })
            .collect();
        if self.fixed_count > 0 {
            parts.push(format!("I_{}", self.fixed_count));
        }
        parts.join(" ⊕ ")
    }
}

impl fmt::Display for UniformDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.shape())
    }
}

/// Decomposes a uniform graph whose automorphism group is 2-transitive on
/// every nontrivial orbit.
///
/// Fixed points are deleted; nontrivial orbits joined by essential edges
/// (edges between two different nontrivial orbits) form components. Within a
/// component, following essential edges from a vertex must reach exactly one
/// vertex of every other orbit, and those bijections predict `S_n^(r)`.
pub fn uniform_decomposition(g: &Graph) -> Result<UniformDecomposition, SymmetryError> {
    let aut = automorphism_group(g)?;
    let structure = orbit_structure_of(g, &aut);
    let uniformity = uniformity_of(g, &structure);
    let n = uniformity
        .relaxed
        .ok_or_else(|| SymmetryError::Precondition("graph is not uniform".into()))?;
    let orbits: Vec<Vec<usize>> = structure
        .vertex_orbits
        .iter()
        .filter(|o| o.len() > 1)
        .cloned()
        .collect();
    for o in &orbits {
        let restricted = aut.restricted_to(o).expect("orbits are invariant");
        if !restricted.is_2_transitive() {
            return Err(SymmetryError::Precondition(format!(
                "action on orbit {o:?} is not 2-transitive"
            )));
        }
    }
    let total = g.vertex_count();
    let mut orbit_of = vec![usize::MAX; total];
    for (i, o) in orbits.iter().enumerate() {
        for &v in o {
            orbit_of[v] = i;
        }
    }
    let essential: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .copied()
        .filter(|&(u, v)| {
            orbit_of[u] != usize::MAX && orbit_of[v] != usize::MAX && orbit_of[u] != orbit_of[v]
        })
        .collect();

    // Components of the orbit graph.
    let mut parent: Vec<usize> = (0..orbits.len()).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        if parent[x] != x {
            let r = find(parent, parent[x]);
            parent[x] = r;
        }
        parent[x]
    }
    for &(u, v) in &essential {
        let (a, b) = (find(&mut parent, orbit_of[u]), find(&mut parent, orbit_of[v]));
        if a != b {
            parent[a.max(b)] = a.min(b);
        }
    }
    let mut by_root: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for i in 0..orbits.len() {
        by_root.entry(find(&mut parent, i)).or_default().push(i);
    }
    let groups: Vec<Vec<usize>> = by_root.into_values().collect();

    let mut adjacency: Vec<Vec<usize>> = vec![Vec::new(); total];
    for &(u, v) in &essential {
        adjacency[u].push(v);
        adjacency[v].push(u);
    }
    let mut generators: Vec<Permutation> = Vec::new();
    for grp in &groups {
        let base = &orbits[grp[0]];
        // aligned[k][j] = vertex of orbit grp[k] matched with base[j]
        let mut aligned: Vec<Vec<usize>> = vec![vec![usize::MAX; n]; grp.len()];
        for (j, &y) in base.iter().enumerate() {
            let mut seen = vec![false; total];
            seen[y] = true;
            let mut reached = vec![y];
            let mut k = 0;
            while k < reached.len() {
                for &w in &adjacency[reached[k]] {
                    if !seen[w] {
                        seen[w] = true;
                        reached.push(w);
                    }
                }
                k += 1;
            }
            for (slot, &o) in grp.iter().enumerate() {
                let hits: Vec<usize> = reached.iter().copied().filter(|&w| orbit_of[w] == o).collect();
                if hits.len() != 1 {
                    return Err(SymmetryError::Precondition(format!(
                        "essential edges do not give a bijection onto orbit {:?}",
                        orbits[o]
                    )));
                }
                aligned[slot][j] = hits[0];
            }
        }
        for slot in &aligned {
            let mut sorted = slot.clone();
            sorted.sort_unstable();
            sorted.dedup();
            if sorted.len() != n {
                return Err(SymmetryError::Precondition("essential-edge relation is not injective".into()));
            }
        }
        // S_n on the base positions, copied to every aligned orbit.
        let position_gens: Vec<Vec<usize>> = vec![
            (0..n).map(|j| if j < 2 { 1 - j } else { j }).collect(),
            (0..n).map(|j| (j + 1) % n).collect(),
        ];
        for pg in position_gens {
            let mut images: Vec<usize> = (0..total).collect();
            for slot in &aligned {
                for j in 0..n {
                    images[slot[j]] = slot[pg[j]];
                }
            }
            generators.push(Permutation::from_images(images).unwrap());
        }
    }
    let predicted = PermutationGroup::new(total, generators).unwrap();
    let mut components: Vec<Vec<Vec<usize>>> = groups
        .iter()
        .map(|grp| grp.iter().map(|&o| orbits[o].clone()).collect())
        .collect();
    components.sort_by(|a, b| b.len().cmp(&a.len()).then(a.cmp(b)));
    let mut multiplicities: Vec<usize> = components.iter().map(Vec::len).collect();
    multiplicities.sort_unstable_by(|a, b| b.cmp(a));
    Ok(UniformDecomposition {
        n,
        multiplicities,
        fixed_count: structure.fixed_vertices.len(),
        components,
        strict_uniform: uniformity.strict.is_some(),
        matches_automorphism_group: predicted.same_elements(&aut),
    })
}
