use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Errors raised anywhere in the crate. Vertex ids in messages are 1-based.
#[derive(Debug, Error)]
pub enum Error {
    #[error("edge ({u}, {v}): endpoint out of range 1..={n}")]
    EndpointOutOfRange { u: usize, v: usize, n: usize },

    #[error("edge ({0}, {0}): self-loop")]
    SelfLoop(usize),

    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("edge count mismatch: header declares {expected}, body has {found}")]
    EdgeCountMismatch { expected: usize, found: usize },

    #[error("invalid parameters for {family}: {msg}")]
    InvalidParams { family: String, msg: String },

    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("radius must be at least 1, got {0}")]
    InvalidRadius(usize),

    #[error("graph has {n} vertices, exceeding the exact-search limit {limit}")]
    TooLarge { n: usize, limit: usize },

    #[error("size mismatch: graph has {expected} vertices, got {found}")]
    SizeMismatch { expected: usize, found: usize },

    #[error("invalid ordering: {0}")]
    InvalidOrdering(String),

    #[error("invalid colouring: {0}")]
    InvalidColouring(String),

    #[error("{0}")]
    Usage(String),

    #[error("{context}: {source}")]
    Context {
        context: String,
        #[source]
        source: Box<Error>,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }

    pub fn context(self, context: impl Into<String>) -> Self {
        Error::Context {
            context: context.into(),
            source: Box::new(self),
        }
    }
}
