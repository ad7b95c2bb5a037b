use std::io;
use std::path::PathBuf;

use thiserror::Error;

use crate::VertexId;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("i/o error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },

    #[error(transparent)]
    Stream(#[from] io::Error),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("line {line}: edge weight must be a positive integer, got {weight}")]
    NonPositiveWeight { line: usize, weight: i128 },

    #[error("vertex {0} does not exist")]
    UnknownVertex(u64),

    #[error("internal vertex id {0} is out of range")]
    InvalidVertex(VertexId),

    #[error("vertex {0} already exists")]
    DuplicateVertex(u64),

    #[error("sigma must lie in (0, 1], got {0}")]
    InvalidSigma(f64),

    #[error("max_k must be at least 1")]
    InvalidMaxK,

    #[error("level set is not independent: {0} and {1} are adjacent")]
    NotIndependent(VertexId, VertexId),

    #[error("distance accumulator overflowed 64 bits")]
    DistanceOverflow,

    #[error("graph has {0} vertices, more than 32-bit ids allow")]
    TooManyVertices(usize),

    #[error("no path between {0} and {1}")]
    Disconnected(u64, u64),

    #[error("index was built without path data")]
    PathDataUnavailable,

    #[error("index is {index}, but the request is {request}")]
    DirectednessMismatch {
        index: &'static str,
        request: &'static str,
    },

    #[error("operation not supported on directed indexes: {0}")]
    UnsupportedDirected(&'static str),

    #[error("corrupt index: {0}")]
    CorruptIndex(String),

    #[error("index checksum mismatch: stored {stored:#018x}, computed {computed:#018x}")]
    ChecksumMismatch { stored: u64, computed: u64 },
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    pub(crate) fn corrupt(msg: impl Into<String>) -> Self {
        Error::CorruptIndex(msg.into())
    }
}
