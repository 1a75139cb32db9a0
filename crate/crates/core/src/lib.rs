//! Workbench for exact domination-style invariants on middle graphs and
//! related derived graphs.
//!
//! The crate is organized as:
//! - [`graph`]: bitset-backed simple graphs and the domination predicates;
//! - [`iso`]: canonical forms and isomorphism testing for small graphs;
//! - [`transform`]: derived-graph constructors (middle, line, corona, join);
//! - [`families`]: named graph families and exhaustive enumeration of
//!   connected graphs up to isomorphism;
//! - [`solver`]: two independent exact engines (subset oracle and
//!   branch-and-bound) plus maximum matching and edge cover;
//! - [`harness`]: a catalog of executable checks over instance sweeps, with
//!   machine-readable reports and counterexample hunting.

pub mod families;
pub mod graph;
pub mod harness;
pub mod iso;
pub mod solver;
pub mod transform;

pub use graph::{Graph, GraphError, VertexSet, MAX_VERTICES};
pub use solver::{InvariantKind, SolverResult};
pub use transform::LabeledGraph;
