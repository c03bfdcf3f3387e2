use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            message: message.into(),
        }
    }
}

/// Structural failures of cycles, paths and cycle assembly.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CycleError {
    #[error("invalid cycle: {0}")]
    InvalidCycle(String),
    #[error("invalid path: {0}")]
    InvalidPath(String),
    #[error("invalid two-factor: {0}")]
    InvalidFactor(String),
    #[error("invalid assembly: {0}")]
    InvalidAssembly(String),
    #[error("invalid rotation: {0}")]
    InvalidRotation(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RecognizerError {
    #[error("graph has {n} vertices, exhaustive bound is {bound}")]
    TooLarge { n: usize, bound: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FactorError {
    #[error("vertex {0} has degree below 2")]
    DegreeTooSmall(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("two-factor has a single cycle")]
    SingleCycle,
    #[error("edge {0}-{1} is not an edge of the cycle")]
    NotCycleEdge(usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("n = {n} exceeds the enumeration bound {bound}")]
    TooLarge { n: usize, bound: usize },
    #[error("invalid generator parameter: {0}")]
    InvalidParameter(String),
    #[error("no 2K2-free sample after {0} attempts")]
    Exhausted(usize),
}

/// A rule found a violation but none of its constructions validated.
#[derive(Debug, Clone, PartialEq, Eq, Error, serde::Serialize, serde::Deserialize)]
#[error("{claim}: no construction applies ({detail})")]
pub struct Unavailable {
    pub claim: String,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MergeError {
    #[error(transparent)]
    ConstructionUnavailable(#[from] Unavailable),
    #[error("graph contains the induced 2K2 {0}")]
    InducedTwoK2Found(crate::recognizers::Induced2K2),
    #[error(transparent)]
    Classify(#[from] ClassifyError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("graph is not 2K2-free: induced 2K2 {0}")]
    Not2K2Free(crate::recognizers::Induced2K2),
    #[error("graph has {0} vertices; at least 3 are required")]
    TooSmall(usize),
}
