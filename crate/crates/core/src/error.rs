use thiserror::Error;

use crate::family::Op;

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("({0}, {1}) is not an edge")]
    NotAnEdge(usize, usize),
    #[error("graph is not a tree")]
    NotATree,
    #[error("vertex {0} is not in the given set")]
    NotInSet(usize),
    #[error("set universe {set} does not match graph order {graph}")]
    UniverseMismatch { set: usize, graph: usize },
    #[error("the given set is not {0}-dominating")]
    NotPDominating(usize),
    #[error("the minimum {0}-dominating set is not unique")]
    NotUnique(usize),
    #[error("order p must be at least {min}, got {p}")]
    OrderTooSmall { p: usize, min: usize },
    #[error("{what} refused: {n} vertices exceeds the limit of {limit}")]
    GuardExceeded {
        what: &'static str,
        n: usize,
        limit: usize,
    },
    #[error("gamma_{p} = {gamma} <= p, so r_p = 0 by convention; use the dispatcher")]
    BelowThreshold { p: usize, gamma: usize },
    #[error("no reinforcing edge set with at most {budget} edges")]
    BudgetExhausted { budget: usize },
    #[error("invalid block: {0}")]
    InvalidBlock(String),
    #[error("{op} precondition failed: {condition}")]
    Precondition { op: Op, condition: String },
    #[error("trace step {index}: {source}")]
    ReplayStep {
        index: usize,
        #[source]
        source: Box<Error>,
    },
    #[error("malformed trace: {0}")]
    MalformedTrace(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("unknown claim id `{0}`")]
    UnknownClaim(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
