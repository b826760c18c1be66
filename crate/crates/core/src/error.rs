//! Error type shared by every module.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("mixed variable sets: [{0}] vs [{1}]")]
    MixedVariableSets(String, String),
    #[error("invalid variable name `{0}`")]
    InvalidVariableName(String),
    #[error("duplicate variable name `{0}`")]
    DuplicateVariable(String),
    #[error("too many variables: {count} exceeds the hard cap of {cap}")]
    TooManyVariables { count: usize, cap: usize },
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("vector has {got} entries, expected {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("exponent arithmetic overflow while computing {0}")]
    ExponentOverflow(String),
    #[error("generator {0} is not squarefree")]
    NotSquarefree(String),
    #[error("generator {gen} does not divide the bound monomial x^a")]
    DualBoundViolated { gen: String },
    #[error("{op} is undefined for the {kind} ideal")]
    ZeroOrUnit { op: &'static str, kind: &'static str },
    #[error("hypergraph is not simple: edge {{{larger}}} contains edge {{{smaller}}}")]
    NotSimple { smaller: String, larger: String },
    #[error("edges must be nonempty")]
    EmptyEdge,
    #[error("an edgeless hypergraph has no dual")]
    EdgelessDual,
    #[error("edge {{{0}}} is a loop; colorings are defined over edges with at least two vertices")]
    LoopPresent(String),
    #[error("operation requires a graph, but edge {{{0}}} does not have exactly two vertices")]
    NotAGraph(String),
    #[error("{what} bound exceeded: {value} > {limit}; raise it with {raise}")]
    BoundExceeded {
        what: &'static str,
        value: usize,
        limit: usize,
        raise: &'static str,
    },
    #[error("{0}")]
    InvalidArgument(String),
    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
    #[error("internal invariant violated: {0}")]
    Internal(String),
}
