use thiserror::Error;

use crate::tar::SequenceError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    InvalidVertex { vertex: usize, n: usize },
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {0} is not in the dominating set")]
    NotInSet(usize),
    #[error("the given set is not a dominating set")]
    NotDominating,
    #[error("the given set is not a vertex cover")]
    NotVertexCover,
    #[error("start set has {size} vertices, above the bound k = {k}")]
    StartTooLarge { size: usize, k: usize },
    #[error("graph has {n} vertices, above the exhaustive-search cap of {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("graph is not a forest")]
    NotAForest,
    #[error("graph is not a cograph")]
    NotACograph,
    #[error("malformed cotree: {0}")]
    MalformedCotree(String),
    #[error("invalid interval model: {0}")]
    InvalidIntervalModel(String),
    #[error("graph is neither a forest nor a cograph and no class evidence was given")]
    MissingEvidence,
    #[error("evidence does not describe the instance graph")]
    EvidenceMismatch,
    #[error("rule R1 precondition violated: {0}")]
    R1Precondition(String),
    #[error("cannot add a vertex: the set already has k = {0} vertices")]
    CannotAdd(usize),
    #[error("invalid reduction input: {0}")]
    ReductionInput(String),
    #[error("solution is inconsistent with its instance: {0}")]
    InvalidSolution(String),
    #[error("generation failed: {0}")]
    Generation(String),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("invalid sequence: {0}")]
    Sequence(#[from] SequenceError),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse { line, msg: msg.into() }
    }
}
