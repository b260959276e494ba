//! Kernelization for k-clique search.
//!
//! The graph is a square bit matrix with soft deletion ([`Graph`]). On top
//! of it sit the reduction rules: color indices ([`coloring`]), three
//! dominance rules with serial and deterministic parallel drivers
//! ([`dominance`]), and the struction transformation ([`struction`]).
//! [`oracle`] provides exact clique numbers for checking all of them on
//! small graphs, and [`generator`] the seeded benchmark instances.

pub mod bitset;
pub mod coloring;
pub mod dominance;
pub mod error;
pub mod generator;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod report;
pub mod struction;

pub use bitset::{intersect_and_subset, BitSet};
pub use coloring::{
    edge_color_index, greedy_color, node_color_index, reduce_by_color_index, Coloring,
};
pub use dominance::{
    dominates_vertex, edge_dominance_disjoint_pass, edge_dominance_shared_pass, run_pass,
    run_to_fixpoint, unrank_tuple, vertex_dominance_pass, DominanceRule, ExecMode,
};
pub use error::{
    ColoringError, GenerateError, GraphError, OracleError, ParseError, StructionError, UnrankError,
};
pub use generator::{default_edge_count, generate, GenSpec};
pub use graph::Graph;
pub use oracle::{enumerate_k_cliques, max_clique, CliqueWitness, Oracle};
pub use report::ReductionReport;
pub use struction::{
    lift_clique, struction, struction_with, NodeOrigin, StructionOptions, StructionResult,
};
