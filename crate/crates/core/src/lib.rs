//! Discrete configuration spaces of graphs, words in graph braid groups and
//! negative-curvature classification of graph braid groups.

pub mod classifier;
pub mod cli;
pub mod config_space;
pub mod diagrams;
pub mod error;
pub mod graph;
pub mod homology;
pub mod hyperplanes;
pub mod limits;
mod util;

pub use error::{Error, Result};
pub use limits::Limits;
