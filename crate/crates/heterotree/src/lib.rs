//! Edge-coloured graphs and their heterochromatic spanning trees.
//!
//! A spanning tree is heterochromatic when no two of its edges share a
//! colour. This crate models edge-coloured simple graphs, generates the
//! standard colouring families (graceful, stellar, nice, cute, bipartite
//! nice, unique-tree supergraphs), decides existence via matroid
//! intersection, exhaustively counts and enumerates the trees, checks the
//! classical sufficient conditions, and extracts certified families of
//! distinct heterochromatic spanning trees from nice and beautiful
//! colourings.

mod colourings;
mod constructions;
mod error;
mod graph;
mod matroid;
mod oracle;
mod tree;
mod unionfind;

pub use colourings::{
    bipartite_nice_colouring, graceful_colouring, random_cute_colouring, random_nice_colouring,
    stellar_colouring, unique_tree_graph, unique_tree_graph_with_tree, verify_beautiful,
    Bipartition,
};
pub use constructions::{
    beautiful_subgraph, beautiful_tree_family, cute_tree, free_class_indices, nice_tree_family,
    Part, Provenance, TreeFamily,
};
pub use error::Error;
pub use graph::{ColouringClass, Edge, EdgeColouredGraph, EdgeSet};
pub use matroid::{
    find_heterochromatic_spanning_tree, graphic_rank, lemma1_condition_holds,
    max_common_independent, min_rank_cover, partition_corank, IndependenceOracle,
    IntersectionResult, Lemma1Verdict, MatroidKind, EXHAUSTIVE_EDGE_LIMIT,
};
pub use oracle::{
    akbari_alipour_check, enumerate_heterochromatic_spanning_trees, heterochromatic_embedding,
    suzuki_check, EnumerationReport, DEFAULT_ENUMERATION_BUDGET,
};
pub use tree::{all_trees, Tree};
