use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),

    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),

    #[error("graph must have at least one vertex")]
    EmptyGraph,

    #[error("invalid sign matrix: {0}")]
    InvalidSignMatrix(String),

    #[error("not a permutation: {0:?}")]
    InvalidPermutation(Vec<usize>),

    #[error("size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: usize, found: usize },

    #[error("{n} vertices exceeds the enumeration bound {bound}")]
    BoundExceeded { n: usize, bound: usize },

    #[error("operation requires at least {min} vertices, got {n}")]
    TooFewVertices { n: usize, min: usize },

    #[error("zero polynomial")]
    ZeroPolynomial,

    #[error("representation is trivial (c = 0)")]
    TrivialRepresentation,

    #[error("representations belong to different graphs")]
    GraphMismatch,

    #[error("Gram matrices differ (max residual {residual:e})")]
    GramMismatch { residual: f64 },

    #[error("vectors span dimension {rank} but the space has dimension {dim}")]
    DeficientSpan { rank: usize, dim: usize },

    #[error("representation is not reduced (dimension {dim}, Gram rank {rank})")]
    NotReduced { rank: usize, dim: usize },

    #[error("signed permutation violates the sign condition at ({0}, {1})")]
    InvalidElement(usize, usize),

    #[error("group action on line classes is ill-defined: {0}")]
    IllDefinedAction(String),

    #[error("lines are not pairwise distinct")]
    CoincidentLines,

    #[error("invalid number {0:?}")]
    InvalidNumber(String),

    #[error("root index {index} out of range ({count} real roots)")]
    RootIndex { index: usize, count: usize },

    #[error("verification failed: {0}")]
    Verification(String),

    #[error("{0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
