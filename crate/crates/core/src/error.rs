use thiserror::Error;

use crate::graph::{EdgeId, VertexId};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {0} is not part of the graph")]
    UnknownVertex(VertexId),

    #[error("vertex {0} is declared twice")]
    DuplicateVertex(VertexId),

    #[error("edge id {0} is used twice")]
    DuplicateEdge(EdgeId),

    #[error("edge {0} is a self-loop")]
    SelfLoop(EdgeId),

    #[error("edge {0} has weight 0")]
    ZeroWeight(EdgeId),

    #[error("invalid rotation at vertex {vertex}: {reason}")]
    InvalidRotation { vertex: VertexId, reason: String },

    #[error("graph is disconnected")]
    Disconnected,

    #[error("edge {edge} has weight {weight}; an ordinary graph (all weights +1) is required")]
    NotOrdinary { edge: EdgeId, weight: i64 },

    #[error("not completable to 4-regular: {0}")]
    NotCompletable(String),

    #[error("negative edge {edge} is not incident to vertex {vertex}")]
    StrayNegativeEdge { edge: EdgeId, vertex: VertexId },

    #[error("graph is not weighted 4-regular: vertex {vertex} has weighted degree {degree}")]
    NotFourRegular { vertex: VertexId, degree: i64 },

    #[error("invalid cut: {0}")]
    InvalidCut(String),

    #[error("cut does not separate the graph")]
    CutNotSeparating,

    #[error("vertex {0} does not lie in a component of the cut")]
    SideNotInComponent(VertexId),

    #[error("graph has no rotation system")]
    MissingRotation,

    #[error("rotation not planar: V - E + F = {0}, expected 2")]
    NotPlanar(i64),

    #[error("edge {0} borders a single face; its dual would be a self-loop")]
    Bridge(EdgeId),

    #[error("graph has {edges} edges, above the limit of {limit}; use psi_eval for larger graphs")]
    TooManyEdges { edges: usize, limit: usize },

    #[error("coordinate for edge {edge} is {value}; all coordinates must be positive")]
    NonPositiveCoordinate { edge: EdgeId, value: f64 },

    #[error("missing coordinate for edge {0}")]
    MissingCoordinate(EdgeId),

    #[error("not primitive log-divergent edge count: E = {edges}, 2h = {twice_loops}")]
    NotLogDivergent { edges: usize, twice_loops: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invariant violation: {0}")]
    Invariant(String),

    #[error("{context}: {source}")]
    Json {
        context: String,
        #[source]
        source: serde_json::Error,
    },

    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    /// True for failures that indicate a bug or malformed intermediate state
    /// rather than bad user input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Invariant(_))
    }
}
