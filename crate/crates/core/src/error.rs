use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {v} out of range for graph of order {n}")]
    VertexOutOfRange { v: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    Loop(usize),

    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),

    #[error("edge {0}-{1} is not present")]
    EdgeAbsent(usize, usize),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("total domination undefined: graph has an isolated vertex")]
    TotalDominationUndefined,

    #[error("minimum degree below two")]
    MinDegreeBelowTwo,

    #[error("undefined invariant for this graph: {0}")]
    Undefined(String),

    #[error("budget exceeded: value lies in [{lower}, {upper}]")]
    BudgetExceeded { lower: u32, upper: u32 },

    #[error("instance too large for exhaustive scan: n={n}, limit={limit}")]
    SizeLimit { n: usize, limit: usize },

    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),

    #[error("empty factor graph")]
    EmptyFactor,

    #[error("legion function has {got} entries but graph has {expected} vertices")]
    LengthMismatch { expected: usize, got: usize },

    #[error("not a member of the degree-constrained P4 family: {0:?}")]
    NotP4Set(Vec<usize>),

    #[error("unknown invariant `{0}`")]
    UnknownInvariant(String),

    #[error("unknown claim `{0}`")]
    UnknownClaim(String),

    #[error("invalid configuration: {0}")]
    Config(String),
}
