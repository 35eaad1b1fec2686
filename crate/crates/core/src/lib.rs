//! Stable sets that hit every maximum clique.
//!
//! For a connected graph with `3ω ≥ 2(Δ+1)` the [`hitting`] solver returns a
//! stable set meeting every maximum clique, or proves the graph is
//! `C_k ⊠ K_m` with `k` odd, where no such set exists. Supporting pieces:
//! clique enumeration and clique graphs ([`cliques`]), the structure of
//! clique-graph components with small common intersection ([`structure`]),
//! independent transversals of clique partitions ([`transversal`]),
//! exhaustive oracles ([`oracle`]), and a family of graphs in which no stable
//! set hits every large maximal clique ([`counterexample`]).

pub mod cli;
pub mod cliques;
pub mod counterexample;
pub mod error;
pub mod generators;
pub mod graph;
pub mod hitting;
pub mod io;
pub mod oracle;
pub mod small_graphs;
pub mod structure;
pub mod transversal;
pub mod vertex_set;

pub use cliques::{
    clique_graph, enumerate_maximal_cliques, hajnal_check, maximum_cliques, CliqueFamily,
    CliqueGraph, HajnalReport,
};
pub use error::{Error, Result};
pub use graph::{
    complete_graph, cycle_graph, path_graph, petersen_graph, strong_product, Graph, MAX_VERTICES,
};
pub use hitting::{hitting_stable_set, HittingCertificate, Solver};
pub use structure::{
    analyze_component, recognize_hole_product, Classification, ComponentAnalysis,
    HoleProductWitness,
};
pub use transversal::{independent_transversal, PartitionedInstance};
pub use vertex_set::VertexSet;

/// Exact test of `ω ≥ ⅔(Δ+1)` in integers.
#[inline]
pub fn meets_two_thirds_bound(omega: usize, delta: usize) -> bool {
    3 * omega >= 2 * (delta + 1)
}

/// Exact test of `size ≥ (Δ+1)/3` in integers.
#[inline]
#[allow(clippy::int_plus_one)]
pub fn meets_third_bound(size: usize, delta: usize) -> bool {
    3 * size >= delta + 1
}
