//! Toolkit for graphs with disjoint dominating and 2-dominating vertex sets.
//!
//! The crate decides membership and minimality for this graph class in
//! linear time with certificates, solves the associated optimization
//! problems exactly at small scale (pair-size minimization, spanning minimal
//! subgraphs, minimum edge additions), computes the minimum number of edge
//! subdivisions in polynomial time through maximum matching, and
//! materializes the hardness reductions from restricted 3-dimensional
//! matching and Set Cover as instance transformers with solution extractors.

pub mod error;
pub mod generators;
pub mod graph;
pub mod matching;
pub mod minimal;
pub mod optimize;
pub mod recognition;
pub mod reductions;

pub use error::{Error, Result};
pub use graph::{Graph, MultiGraph};
