//! Exact computation of the inductive dimension of finite simple graphs.
//!
//! The inductive dimension assigns -1 to the empty graph and otherwise
//! averages, over all vertices, one plus the dimension of the vertex's unit
//! sphere. All values are exact arbitrary-precision rationals. Alongside the
//! dimension itself the crate provides:
//!
//! - graph primitives: induced subgraphs, unit spheres and balls, the Zykov
//!   join, disjoint unions ([`graph`]);
//! - maximal clique enumeration and the clique statistics omega, gamma, and
//!   purity ([`cliques`]);
//! - exact minimum edge clique covers by branch-and-bound set cover ([`ecc`]);
//! - the dimension-from-cover identity, the pure-graph law, and clique-number
//!   bounds on the dimension ([`cover`]);
//! - deterministic constructors for the interesting example families
//!   ([`generators`]);
//! - edge-list and graph6 formats, JSON reports, and a verification suite
//!   ([`formats`], [`report`], [`suite`]).
//!
//! See the crate examples for runnable walkthroughs of each capability; the
//! `graphdim` binary exposes the same operations on graph files.

pub mod cliques;
pub mod cover;
pub mod dim;
pub mod ecc;
pub mod error;
pub mod formats;
pub mod generators;
pub mod graph;
pub mod ratio;
pub mod report;
pub mod suite;

pub use error::{GraphError, Result};
pub use graph::{Graph, VertexSet};
pub use ratio::Rational;
