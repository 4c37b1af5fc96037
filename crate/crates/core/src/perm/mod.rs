//! Permutations, permutation groups and the sum constructions.

mod bsgs;
mod group;
mod isomorphism;
mod permutation;

pub use bsgs::{Level, StabilizerChain};
pub use group::{orbits_of, PermutationGroup};
pub use isomorphism::{
    are_permutation_isomorphic, parallel_sum, permutation_isomorphism, IsomorphismSpec,
};
pub use permutation::Permutation;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PermError {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("image list is not a bijection")]
    NotABijection,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("group of order {order} exceeds the enumeration limit {limit}")]
    BudgetExceeded { order: String, limit: u64 },
    #[error("point set is not invariant under the group")]
    NotInvariant,
    #[error("parallel multiple needs k >= 1")]
    ZeroMultiplicity,
    #[error("not a subgroup")]
    NotASubgroup,
    #[error("{generators} generators but {images} images")]
    GeneratorCountMismatch { generators: usize, images: usize },
    #[error("not an isomorphism: {0}")]
    HomomorphismViolation(String),
}
