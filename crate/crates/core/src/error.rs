use thiserror::Error;

/// Errors raised by graph construction and the radio-labeling operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("invalid edge ({0}, {1}): {2}")]
    InvalidEdge(usize, usize, &'static str),
    #[error("not connected")]
    NotConnected,
    #[error("not a block graph: {0}")]
    NotBlockGraph(String),
    #[error("not a tree")]
    NotATree,
    #[error("diameter below 2 (d(G) = {0})")]
    DiameterBelowTwo(usize),
    #[error("geodesic between {0} and {1} is not unique")]
    NonUniqueGeodesic(usize, usize),
    #[error("k must be at least 1")]
    InvalidK,
    #[error("labeling has {got} entries, graph has {expected} vertices")]
    LabelCount { expected: usize, got: usize },
    #[error("ordering is not a permutation of the vertex set: {0}")]
    InvalidOrdering(String),
    #[error("negative label increment between positions {index} and {}", index + 1)]
    NegativeIncrement { index: usize },
    #[error("instance too large for exact solver (p = {p} > max_p = {max_p})")]
    TooLarge { p: usize, max_p: usize },
    #[error("invalid family parameters: {0}")]
    InvalidParameters(String),
    #[error("unsupported family: {0}")]
    Unsupported(String),
    #[error("sufficient-condition hypotheses not met: {0}")]
    SufficiencyHypotheses(String),
    #[error("B(T) undefined for this center configuration: {0}")]
    CenterConfiguration(String),
}

pub type Result<T> = std::result::Result<T, Error>;
