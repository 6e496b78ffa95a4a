//! Exact all-terminal reliability analysis of multigraphs.
//!
//! The crate computes exact unreliability polynomials in Bernstein form,
//! enumerates and classifies cut sets, distills sparse graphs into structure
//! graphs, builds the gamma tables that drive marked-structure comparison,
//! and searches for candidate uniformly most reliable marked structures.

pub mod cutsets;
pub mod db;
pub mod error;
pub mod exact;
pub mod format;
pub mod graph;
pub mod optimizer;
pub mod poly;
pub mod reliability;
pub mod spanning;
pub mod structure;

pub use error::{Error, Result};
pub use graph::{girth6_family, EdgeId, GraphMetrics, Multigraph};
