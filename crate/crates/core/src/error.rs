use thiserror::Error;

/// Errors produced by graph construction, parsing and the structural searches.
#[derive(Debug, Error)]
pub enum Error {
    #[error("graph is not bipartite: odd cycle through {0}")]
    NotBipartite(String),

    #[error("edge {0}-{1} joins two vertices on the same declared side")]
    SideConflict(String, String),

    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(String, String),

    #[error("self-loop at {0}")]
    SelfLoop(String),

    #[error("side map does not cover vertex {0}")]
    MissingSide(String),

    #[error("vertex names must be nonempty")]
    EmptyName,

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("graph is disconnected")]
    Disconnected,

    #[error("graph is not 2-connected")]
    Not2Connected,

    #[error("graph is a cycle")]
    IsCycle,

    #[error("resource limit: {what} is {actual}, limit {limit}")]
    ResourceLimit {
        what: &'static str,
        limit: usize,
        actual: usize,
    },

    #[error("hole is not a hole of the signing's host graph")]
    ForeignHole,

    #[error("signing belongs to a different graph")]
    ForeignSigning,

    #[error("unknown vertex {0}")]
    UnknownVertex(String),

    #[error("not an edge: {0}-{1}")]
    NotAnEdge(String, String),

    #[error("matrix entry {entry} at ({row}, {col}) is not in {{-1, 0, 1}}")]
    BadEntry { row: usize, col: usize, entry: String },

    #[error("invalid split: {0}")]
    InvalidSplit(String),

    #[error("no path between the special sets on side {0}")]
    NoQPath(usize),

    #[error("invalid cutset: {0}")]
    InvalidCutset(String),

    #[error("input outside the decomposition theorem's hypotheses: {0}")]
    OutOfTheoremScope(String),

    #[error("decomposition theorem violated; reproducer:\n{dump}")]
    TheoremViolation { dump: String },

    #[error("unknown named graph {0}")]
    UnknownName(String),

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("odd subdivision flips the side relation of {0}-{1}")]
    OddParityWarning(String, String, Box<crate::BipartiteGraph>),

    #[error("random corpus starved: {accepted} accepted out of {attempts} attempts")]
    Starvation { accepted: usize, attempts: usize },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn limit(what: &'static str, limit: usize, actual: usize) -> Self {
        Error::ResourceLimit {
            what,
            limit,
            actual,
        }
    }

    pub fn is_resource_limit(&self) -> bool {
        matches!(self, Error::ResourceLimit { .. } | Error::Starvation { .. })
    }
}
