//! Exact Italian domination on small graphs.
//!
//! The crate computes the Italian, Roman and classic domination numbers of
//! graphs with at most 64 vertices, builds corona products and twin
//! extensions, constructs explicit Italian dominating functions for the
//! standard corona families, and checks the known closed forms against the
//! exact solver.

pub mod error;
pub mod graph;
pub mod labeling;
pub mod operators;
pub mod solver;
pub mod verify;
pub mod witnesses;

pub use error::{Error, Result};
pub use graph::{Family, Graph, TwinRelation, VertexId, MAX_VERTICES};
pub use labeling::Labeling;
pub use operators::CoronaMap;
pub use solver::{SolveResult, SolverConfig};
