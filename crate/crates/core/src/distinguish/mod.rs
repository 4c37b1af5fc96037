//! Distinguishing numbers of permutation groups and graphs.

mod coloring;
mod search;

use num_bigint::BigUint;
use num_traits::One;
use serde::Serialize;

use crate::analysis::Classification;
use crate::graph::Graph;
use crate::perm::{PermError, PermutationGroup};
use crate::symmetry::{automorphism_group, edge_action_of, SymmetryError};

pub use coloring::{is_distinguishing, is_distinguishing_by_enumeration, preserves, Coloring};
pub use search::{
    distinguishing_number, distinguishing_number_with, DistinguishBudget, DistinguishingVerdict,
    Minimality,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DistinguishError {
    #[error("color {color} outside 1..={d}")]
    ColorOutOfRange { color: u32, d: u32 },
    #[error("group of degree {group} against a coloring of {coloring} points")]
    DegreeMismatch { group: usize, coloring: usize },
    #[error("no prediction for an unclassified group")]
    Unclassified,
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error(transparent)]
    Symmetry(#[from] SymmetryError),
}

/// `D(Γ)`: the distinguishing number of `Aut(Γ)` on the vertices.
pub fn graph_distinguishing_number(
    g: &Graph,
    budget: &DistinguishBudget,
) -> Result<DistinguishingVerdict, DistinguishError> {
    let aut = automorphism_group(g)?;
    Ok(distinguishing_number_with(&aut, budget))
}

#[derive(Clone, Debug, Serialize)]
pub struct IndexVerdict {
    #[serde(flatten)]
    pub verdict: DistinguishingVerdict,
    pub automorphism_order: String,
    pub kernel_order: String,
    /// Some non-identity automorphism fixes every edge, so no edge coloring
    /// can break it; the value refers to the image group.
    pub kernel_nontrivial: bool,
    /// A single edge: the image group is trivial and the value is 1.
    pub single_edge: bool,
}

/// `D'(Γ)`: the distinguishing number of the group `Aut(Γ)` induces on the edges.
pub fn graph_distinguishing_index(g: &Graph, budget: &DistinguishBudget) -> Result<IndexVerdict, DistinguishError> {
    let aut = automorphism_group(g)?;
    graph_distinguishing_index_with(g, &aut, budget)
}

/// As [`graph_distinguishing_index`] with `Aut(Γ)` already computed.
pub fn graph_distinguishing_index_with(
    g: &Graph,
    aut: &PermutationGroup,
    budget: &DistinguishBudget,
) -> Result<IndexVerdict, DistinguishError> {
    let action = edge_action_of(g, aut)?;
    let verdict = distinguishing_number_with(&action.group, budget);
    Ok(IndexVerdict {
        verdict,
        automorphism_order: action.automorphism_order.to_string(),
        kernel_nontrivial: action.kernel_order != BigUint::one(),
        kernel_order: action.kernel_order.to_string(),
        single_edge: g.edge_count() == 1,
    })
}

/// The distinguishing number the classification assigns to a simple group
/// without fixed points.
pub fn predicted_distinguishing_number(c: &Classification) -> Result<u32, DistinguishError> {
    match *c {
        Classification::Alternating { n, k } => {
            let target = n - 1;
            let mut d: u64 = 1;
            while !power_at_least(d, k, target) {
                d += 1;
            }
            Ok(d as u32)
        }
        Classification::Listed { d } => Ok(d),
        Classification::Generic => Ok(2),
        Classification::Unclassified => Err(DistinguishError::Unclassified),
    }
}

fn power_at_least(d: u64, k: u64, target: u64) -> bool {
    let mut acc: u64 = 1;
    for _ in 0..k {
        acc = acc.saturating_mul(d);
        if acc >= target {
            return true;
        }
    }
    acc >= target
}
