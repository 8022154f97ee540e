use thiserror::Error;

use crate::digraph::VertexId;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid permutation word {word:?}: {reason}")]
    InvalidWord { word: String, reason: String },

    #[error("{what} = {value} is out of range (expected {expected})")]
    OutOfRange {
        what: &'static str,
        value: i64,
        expected: String,
    },

    #[error("word {0} is odd; an even permutation is required")]
    OddWord(String),

    #[error("vertex id {id} is not in a graph with {vertex_count} vertices")]
    ForeignVertex { id: VertexId, vertex_count: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(VertexId),

    #[error("arcs ({0},{1}) and ({1},{0}) form a 2-cycle")]
    TwoCycle(VertexId, VertexId),

    #[error("duplicate arc ({0},{1})")]
    DuplicateArc(VertexId, VertexId),

    #[error("duplicate vertex label {0}")]
    DuplicateLabel(String),

    #[error("unsupported format {0:?}")]
    UnsupportedFormat(String),

    #[error("arc ({0},{1}) lies in no directed triangle")]
    ArcWithoutTriangle(VertexId, VertexId),

    #[error("not a path: {0}")]
    NotAPath(String),

    #[error("graph {0} is not flagged undirected")]
    NotUndirected(String),

    #[error("construction check failed: {0}")]
    Construction(String),

    #[error("line {line}: {message}")]
    SetFile { line: usize, message: String },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    pub(crate) fn out_of_range(what: &'static str, value: impl TryInto<i64>, expected: impl Into<String>) -> Self {
        Error::OutOfRange {
            what,
            value: value.try_into().unwrap_or(i64::MAX),
            expected: expected.into(),
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
