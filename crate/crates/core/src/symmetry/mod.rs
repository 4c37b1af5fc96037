//! Automorphism groups, the induced edge action, and orbit analysis.

mod automorphism;
mod orbits;
mod uniform;

pub use automorphism::{
    automorphism_group, automorphism_group_with_limit, brute_force_automorphisms,
    colored_automorphism_group, DEFAULT_VERTEX_LIMIT,
};
pub use orbits::{
    edge_action, edge_action_of, group_orbitals, induced_edge_permutation, is_n_uniform,
    orbit_structure, orbit_structure_of, uniformity_of, EdgeAction, OrbitStructure, Uniformity,
};
pub use uniform::{uniform_decomposition, UniformDecomposition};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SymmetryError {
    #[error("{n} vertices exceeds the limit of {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("graph has no edges")]
    EmptyEdgeSet,
    #[error("precondition violated: {0}")]
    Precondition(String),
}
