use crate::digraph::{Arc, Vertex};
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("parallel arc {}->{}", .0.0, .0.1)]
    ParallelArc(Arc),
    #[error("parallel edge {}-{}", .0.0, .0.1)]
    ParallelEdge((Vertex, Vertex)),
    #[error("vertex {vertex} out of range for order {n}")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("arc {}->{} is not present", .0.0, .0.1)]
    ArcAbsent(Arc),
    #[error("operation undefined on the empty digraph")]
    EmptyDigraph,
    #[error("invalid anchor set: {0}")]
    InvalidAnchor(String),
    #[error("invalid k = {k} for order {n} (need 2 <= k <= n)")]
    InvalidK { k: usize, n: usize },
    #[error("invalid terminal sequence: {0}")]
    InvalidTerminals(String),
    #[error("packing does not fit the host digraph: {0}")]
    HostMismatch(String),
    #[error("instance of order {n} exceeds the size guard {max_n}; raise the cap or force")]
    SizeGuard { n: usize, max_n: usize },
    #[error("digraph is not semicomplete: {0} and {1} are non-adjacent")]
    NotSemicomplete(Vertex, Vertex),
    #[error("digraph is not symmetric: arc {}->{} has no reverse", .0.0, .0.1)]
    NotSymmetric(Arc),
    #[error("digraph is not strong")]
    NotStrong,
    #[error("extension hypothesis violated: {0} and {1} lie outside the seeds but are non-adjacent")]
    HypothesisViolation(Vertex, Vertex),
    #[error("invalid extension instance: {0}")]
    InvalidExtension(String),
    #[error("arc partition does not match the anchor arcs: {0}")]
    PartitionMismatch(String),
    #[error("anchor set is not independent: edge {}-{}", .0.0, .0.1)]
    NotIndependent((Vertex, Vertex)),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph needs at least 2 vertices")]
    TooSmall,
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("malformed instance: {0}")]
    MalformedInstance(String),
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
}
