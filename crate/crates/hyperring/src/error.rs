use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("vertices must be distinct: {0:?}")]
    RepeatedVertex(Vec<usize>),

    #[error("duplicate edge {0:?}")]
    DuplicateEdge(Vec<usize>),

    #[error("rank {rank} out of range ({count} possible)")]
    RankOutOfRange { rank: usize, count: usize },

    #[error("degree is defined for 1- and 2-subsets here, got {0} vertices")]
    UnsupportedDegreeArity(usize),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid ring labeling: {0}")]
    InvalidLabeling(String),

    #[error("{path}: {msg}")]
    Format { path: PathBuf, msg: String },

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },

    #[error("n = {n} exceeds the exhaustive-search cap {cap}; set HYPERRING_BRUTE_CAP to override")]
    SearchCap { n: usize, cap: usize },

    #[error("integrity violation: {0}")]
    Integrity(String),
}

pub type Result<T> = std::result::Result<T, Error>;
