//! Structural tests on permutation groups and the named-group catalog.

mod arith;
mod catalog;
mod divisor;
mod field;
mod simple;
mod subgroups;

pub use arith::{an_index_2n_feasible, binomial, IndexFeasibility, EXCEPTIONAL_PAIRS};
pub use catalog::{
    generator_strings, named_group, Catalog, CatalogEntry, CatalogError, Classification, NamedGroup,
};
pub use divisor::{lemma_divisor_check, proper_divisors, DivisorReport, DivisorVerdict};
pub use field::{projective_line_group, projective_space_group, FiniteField};
pub use simple::{derived_subgroup, is_simple, is_simple_with_limit, normal_closure, normal_closure_of, SIMPLICITY_LIMIT};
pub use subgroups::{
    subgroup_of_index_exists, subgroup_of_order_exists, transitive_action_exists, SubgroupSearch,
    SubgroupSearchBudget,
};
