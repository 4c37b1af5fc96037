pub mod analysis;
pub mod distinguish;
pub mod graph;
pub mod harness;
pub mod perm;
pub mod symmetry;
