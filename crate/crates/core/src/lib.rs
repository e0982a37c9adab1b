//! Balanced and balanceable bipartite graphs.
//!
//! Hole enumeration, signings, Truemper configurations, cutsets and joins,
//! decomposition blocks, and executable checks of the structural theorems for
//! linear and subcubic balanceable graphs.

pub mod canon;
pub mod connectivity;
pub mod decomposition;
pub mod edgelist;
pub mod error;
pub mod generators;
pub mod gf2;
pub mod graph;
pub mod holes;
pub mod limits;
pub mod matrix;
pub mod signing;
pub mod theorems;
pub mod truemper;

pub use error::{Error, Result};
pub use graph::{BipartiteGraph, Edge, GraphBuilder, Path, Side, Vertex};
pub use limits::Limits;
