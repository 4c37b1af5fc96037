//! Edge action, orbits, edge-orbits and orbitals.

use num_bigint::BigUint;
use serde::Serialize;

use crate::graph::Graph;
use crate::perm::{Permutation, PermutationGroup};

use super::{automorphism_group, SymmetryError};

/// `Aut(Γ)` acting on the edge labeling of `Γ`.
#[derive(Clone, Debug)]
pub struct EdgeAction {
    /// The image group, on points `0..|E|`.
    pub group: PermutationGroup,
    /// Number of automorphisms that fix every edge.
    pub kernel_order: BigUint,
    pub edge_index: Vec<(usize, usize)>,
    pub automorphism_order: BigUint,
}

/// The permutation of edge indices induced by a vertex automorphism.
pub fn induced_edge_permutation(g: &Graph, p: &Permutation) -> Permutation {
    let images = g
        .edges()
        .iter()
        .map(|&(u, v)| {
            g.edge_index(p.image(u), p.image(v))
                .expect("automorphisms map edges to edges")
        })
        .collect();
    Permutation::from_images(images).expect("an automorphism permutes the edges")
}

pub fn edge_action(g: &Graph) -> Result<EdgeAction, SymmetryError> {
    let aut = automorphism_group(g)?;
    edge_action_of(g, &aut)
}

pub fn edge_action_of(g: &Graph, aut: &PermutationGroup) -> Result<EdgeAction, SymmetryError> {
    if g.edge_count() == 0 {
        return Err(SymmetryError::EmptyEdgeSet);
    }
    let gens = aut
        .generators()
        .iter()
        .map(|p| induced_edge_permutation(g, p))
        .collect();
    let group = PermutationGroup::new(g.edge_count(), gens).unwrap();
    let automorphism_order = aut.order();
    let kernel_order = &automorphism_order / group.order();
    Ok(EdgeAction {
        group,
        kernel_order,
        edge_index: g.edges().to_vec(),
        automorphism_order,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct OrbitStructure {
    pub vertex_orbits: Vec<Vec<usize>>,
    pub edge_orbits: Vec<Vec<(usize, usize)>>,
    /// Orbits on all unordered pairs of distinct vertices.
    pub orbitals: Vec<Vec<(usize, usize)>>,
    pub fixed_vertices: Vec<usize>,
    pub automorphism_order: String,
    pub kernel_order: String,
}

/// Orbits of `group` on unordered pairs `{i, j}`, each listed with `i < j`.
pub fn group_orbitals(group: &PermutationGroup) -> Vec<Vec<(usize, usize)>> {
    let (on_pairs, pairs) = group.on_pairs();
    on_pairs
        .orbits()
        .into_iter()
        .map(|o| o.into_iter().map(|k| pairs[k]).collect())
        .collect()
}

pub fn orbit_structure(g: &Graph) -> Result<OrbitStructure, SymmetryError> {
    let aut = automorphism_group(g)?;
    Ok(orbit_structure_of(g, &aut))
}

pub fn orbit_structure_of(g: &Graph, aut: &PermutationGroup) -> OrbitStructure {
    let (edge_orbits, kernel_order) = match edge_action_of(g, aut) {
        Ok(action) => (
            action
                .group
                .orbits()
                .into_iter()
                .map(|o| o.into_iter().map(|k| action.edge_index[k]).collect())
                .collect(),
            action.kernel_order,
        ),
        Err(_) => (Vec::new(), aut.order()),
    };
    OrbitStructure {
        vertex_orbits: aut.orbits(),
        edge_orbits,
        orbitals: group_orbitals(aut),
        fixed_vertices: aut.fixed_points(),
        automorphism_order: aut.order().to_string(),
        kernel_order: kernel_order.to_string(),
    }
}

/// Both readings of n-uniformity.
///
/// `strict` requires every edge-orbit to have size `n`; `relaxed` exempts
/// edges whose endpoints are both fixed, which are singleton edge-orbits.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Uniformity {
    pub strict: Option<usize>,
    pub relaxed: Option<usize>,
    pub fixed_edges: usize,
}

impl Uniformity {
    /// The readings disagree.
    pub fn discrepancy(&self) -> bool {
        self.strict != self.relaxed
    }
}

pub fn is_n_uniform(g: &Graph) -> Result<Uniformity, SymmetryError> {
    let aut = automorphism_group(g)?;
    Ok(uniformity_of(g, &orbit_structure_of(g, &aut)))
}

pub fn uniformity_of(g: &Graph, s: &OrbitStructure) -> Uniformity {
    let sizes: Vec<usize> = s.vertex_orbits.iter().map(Vec::len).filter(|&k| k > 1).collect();
    let fixed = |v: usize| s.fixed_vertices.binary_search(&v).is_ok();
    let fixed_edges = g.edges().iter().filter(|&&(u, v)| fixed(u) && fixed(v)).count();
    let n = match sizes.first() {
        Some(&n) if n > 2 && sizes.iter().all(|&k| k == n) => n,
        _ => {
            return Uniformity { strict: None, relaxed: None, fixed_edges };
        }
    };
    let strict = s.edge_orbits.iter().all(|o| o.len() == n);
    let relaxed = s
        .edge_orbits
        .iter()
        .filter(|o| !(o.len() == 1 && fixed(o[0].0) && fixed(o[0].1)))
        .all(|o| o.len() == n);
    Uniformity {
        strict: strict.then_some(n),
        relaxed: relaxed.then_some(n),
        fixed_edges,
    }
}
