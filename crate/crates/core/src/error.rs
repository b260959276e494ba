use std::io;
use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    OutOfRange { vertex: usize, n: usize },
    #[error("self-loop on vertex {0} is not allowed in a simple graph")]
    Loop(usize),
    #[error("vertex {0} has been deleted")]
    Inactive(usize),
    #[error("expected two distinct vertices, got {0} twice")]
    SameVertex(usize),
    #[error("{{{0}, {1}}} is not an edge")]
    NotAnEdge(usize, usize),
    #[error("bit vectors of different lengths ({left} vs {right})")]
    LengthMismatch { left: usize, right: usize },
}

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },
    #[error("not a square matrix: {0} values")]
    NotSquare(usize),
    #[error("line {line}: expected '0' or '1', found {token:?}")]
    NotBinary { line: usize, token: String },
    #[error("line {line}: matrix is not symmetric at ({row}, {col})")]
    Asymmetric { line: usize, row: usize, col: usize },
    #[error("line {line}: self-loop on vertex {vertex}")]
    Loop { line: usize, vertex: usize },
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GenerateError {
    #[error("a generated graph needs at least 2 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("{m} edges is infeasible for a connected simple graph on {n} vertices")]
    InfeasibleEdgeCount { n: usize, m: usize },
    #[error("the default edge schedule needs n >= 7, got {0}")]
    ScheduleTooSmall(usize),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ColoringError {
    #[error("vertices {0} and {1} are adjacent and share color class {2}")]
    Illegal(usize, usize, usize),
    #[error("active vertex {0} has no color")]
    Uncolored(usize),
    #[error("coloring covers {found} vertices, graph has {expected}")]
    SizeMismatch { expected: usize, found: usize },
    #[error("clique size target must be at least 2, got {0}")]
    TargetTooSmall(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum StructionError {
    #[error("struction would create {needed} nodes, over the budget of {budget}")]
    OverBudget { needed: usize, budget: usize },
    #[error("graph has no active vertex to use as pivot")]
    NoPivot,
    #[error("input is not a clique of the derived graph: {0}")]
    NotAClique(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("graph has {active} active vertices, over the oracle cap of {cap}")]
    CapExceeded { active: usize, cap: usize },
    #[error("clique size must be at least 1")]
    ZeroSize,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum UnrankError {
    #[error("index {index} out of range for {count} tuples")]
    OutOfRange { index: u64, count: u64 },
    #[error("arity {arity} exceeds universe size {n}")]
    ArityTooLarge { n: usize, arity: usize },
    #[error("permutation count P({n}, {arity}) overflows u64")]
    Overflow { n: usize, arity: usize },
}
