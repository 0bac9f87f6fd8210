use thiserror::Error;

/// Errors surfaced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range 1..={max}")]
    VertexOutOfRange { vertex: u32, max: u32 },
    #[error("loop edge at vertex {0}")]
    LoopEdge(u32),
    #[error("duplicate edge {{{0},{1}}}")]
    DuplicateEdge(u32, u32),
    #[error("operation requires a connected graph")]
    DisconnectedGraph,
    #[error("graph file: {0}")]
    GraphFormat(String),
    #[error("polynomial text: {0}")]
    PolyFormat(String),
    #[error("({0},{1},{2}) is not an induced path of length 2")]
    NotInducedPath(u32, u32, u32),
    #[error("minor row and column indices must be strictly increasing")]
    InvalidMinor,
    #[error("the zero polynomial has no leading term")]
    ZeroPolynomial,
    #[error("cell set is not admissible for the graph pair")]
    NotAdmissible,
    #[error("admissible sets belong to different graph pairs")]
    PairMismatch,
    #[error("{0}")]
    OutOfRange(String),
}

pub type Result<T> = std::result::Result<T, Error>;
