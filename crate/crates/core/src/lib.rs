//! Solvers for the minimum labelling spanning bi-connected subgraph problem
//! and the minimum labelling spanning tree problem.
//!
//! Given an undirected graph whose edges each carry one label, both problems
//! ask for the smallest label set whose edges span every vertex with a
//! bi-connected (resp. connected) subgraph. The crate provides an exact
//! branch-and-prune search, the MVCA greedy backed by incremental
//! block/component counting, and a brute-force oracle.

pub mod decomposition;
pub mod dynamic_blocks;
pub mod exact;
pub mod heuristics;
pub mod instance_tools;
pub mod labelled_graph;
pub mod outcome;

pub use decomposition::{bfs_shortest_path, components, decompose, is_biconnected, Decomposition};
pub use dynamic_blocks::{InsertCase, TrackerError, TrackerState};
pub use exact::{brute_force_optimum, exact_solve};
pub use heuristics::{mvca, GreedyTrace};
pub use instance_tools::{generate, GeneratorConfig};
pub use labelled_graph::{
    load_instance, save_instance, EdgeRecord, LabelSet, LabelledGraph, PlainGraph,
};
pub use outcome::{Method, Mode, SolveError, SolverOutcome};
