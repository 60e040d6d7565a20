use thiserror::Error;

use crate::graph::VertexId;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("graph has no edges")]
    Empty,
    #[error("vertex {0} is outside 1..=n")]
    VertexOutOfRange(VertexId),
    #[error("self-loop at vertex {0}")]
    SelfLoop(VertexId),
    #[error("parallel edge {0}-{1}")]
    ParallelEdge(VertexId, VertexId),
    #[error("vertex {0} is isolated")]
    IsolatedVertex(VertexId),
    #[error("graph is not connected")]
    NotConnected,
    #[error("graph is not biconnected")]
    NotBiconnected,
    #[error("graph is not planar")]
    NotPlanar,
    #[error("element {index} is {value}, bound is {bound}")]
    BoundViolation {
        index: usize,
        value: String,
        bound: String,
    },
    #[error("tuple has {got} elements, expected {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("rank {rank} is out of range (count {count})")]
    RankOutOfRange { rank: String, count: String },
    #[error("not a permutation of 0..{0}")]
    NotAPermutation(usize),
    #[error("malformed tree: {0}")]
    MalformedTree(String),
    #[error("label {0} is out of range")]
    LabelOutOfRange(u64),
    #[error("label {label} does not lie in the interval of component {parent}")]
    LabelIntervalMismatch { parent: usize, label: u64 },
    #[error("index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("embedding does not belong to the graph")]
    GraphMismatch,
    #[error("invalid embedding: {}", .0.join("; "))]
    InvalidEmbedding(Vec<String>),
    #[error("face {0} does not exist")]
    UnknownFace(usize),
    #[error("missing skeleton choice for node {0}")]
    IncompleteChoices(usize),
    #[error("instance too large for brute force: {0}")]
    TooLarge(String),
}
