use alloc::string::String;

use thiserror::Error;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("vertex sets overlap at vertex {0}")]
    OverlappingSets(usize),
    #[error("graph is not bipartite between the given parts (edge {0}-{1})")]
    NotBipartite(usize, usize),
    #[error("instance too large for exact computation: {size} vertices exceeds limit {limit}")]
    TooLarge { size: usize, limit: usize },
    #[error("parameter regime violation: {0}")]
    Regime(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("formula not asserted: {0}")]
    NotAsserted(String),
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
    #[error("{0}")]
    Graph6(#[from] Graph6Error),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("malformed graph6 header")]
    Header,
    #[error("byte {0:#04x} outside the graph6 alphabet")]
    InvalidByte(u8),
    #[error("expected {expected} data bytes, found {found}")]
    Length { expected: usize, found: usize },
    #[error("nonzero padding bits after the adjacency data")]
    TrailingBits,
}
