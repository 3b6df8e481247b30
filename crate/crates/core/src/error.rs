use thiserror::Error;

use crate::graph::MAX_VERTICES;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("graph on {n} vertices exceeds the limit of {MAX_VERTICES}")]
    TooLarge { n: usize },

    #[error("the empty graph K_0 is not supported here")]
    EmptyGraph,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("malformed graph6: {0}")]
    Graph6(String),

    #[error("malformed edge list (line {line}): {message}")]
    EdgeList { line: usize, message: String },

    #[error("expected two distinct vertices, got {0} twice")]
    SameVertex(usize),

    #[error("labeling has {found} entries but the graph has {expected} vertices")]
    SizeMismatch { expected: usize, found: usize },

    #[error("invalid labeling text: {0}")]
    LabelingSyntax(String),

    #[error("vertex {0} is not a pendant vertex")]
    NotPendant(usize),

    #[error("vertices {0} and {1} are not {2} twins")]
    NotTwins(usize, usize, &'static str),

    #[error("vertex {0} is not universal")]
    NotUniversal(usize),

    #[error("labeling is not an Italian dominating function")]
    NotAnIdf,

    #[error("cannot normalize: {0}")]
    CannotNormalize(String),

    #[error("{a} is not realizable as the Italian domination number of a corona G o K_1 with |V(G)| = {n}")]
    NotRealizable { n: usize, a: u32 },

    #[error("search budget exceeded (best upper bound found: {upper_bound:?})")]
    BudgetExceeded { upper_bound: Option<u32> },

    #[error("unknown theorem id `{0}`")]
    UnknownTheorem(String),
}

impl Error {
    /// True for the failures that come from the instance size or the time budget rather than from malformed input.
    pub fn is_limit(&self) -> bool {
        matches!(self, Error::TooLarge { .. } | Error::BudgetExceeded { .. })
    }
}
