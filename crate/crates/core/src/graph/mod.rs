//! Graphs, standard families, witness constructions and text formats.

mod enumerate;
#[allow(clippy::module_inception)]
mod graph;
mod io;
pub mod refine;
mod witness;

pub use enumerate::{
    canonical_form, canonical_labeling, enumerate_all_graphs, graph_from_mask, graph_mask,
    nonisomorphic_graphs, small_graph_corpus, LabeledGraphs, MAX_ENUMERATION_ORDER,
};
pub use graph::Graph;
pub use io::{from_graph6, parse_edge_list, parse_graph6_file, to_edge_list, to_graph6};
pub use witness::{
    asymmetric_witness, construct_example1, construct_figure1, construct_figure1_variant,
    Figure1Layout,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("malformed graph6: {0}")]
    Graph6(String),
    #[error("malformed edge list: {0}")]
    EdgeList(String),
    #[error("order {n} exceeds the enumeration limit {limit}")]
    TooLarge { n: usize, limit: usize },
}
