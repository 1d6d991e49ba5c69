pub mod canon;
pub mod cli;
pub mod closed;
pub mod error;
pub mod families;
pub mod graph;
pub mod json;
pub mod kirchhoff;
pub mod mc;
pub mod transforms;

pub use error::{Error, Result};
pub use graph::{EdgeId, Marker, Multigraph, VertexId, WeightedEdge};
