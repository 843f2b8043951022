pub mod certify;
pub mod coloring;
pub mod error;
pub mod graph;
pub mod harness;
pub mod solver;
pub mod structure;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
