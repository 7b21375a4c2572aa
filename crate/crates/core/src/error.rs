use thiserror::Error;

use crate::graph::Vertex;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("edge ({u}, {v}) has an endpoint outside 1..={vertex_count}")]
    EndpointOutOfRange { u: Vertex, v: Vertex, vertex_count: usize },

    #[error("edge ({v}, {v}) is a self-loop")]
    SelfLoop { v: Vertex },

    #[error("coordinate given for vertex {v}, outside 1..={vertex_count}")]
    CoordinateOutOfRange { v: Vertex, vertex_count: usize },

    #[error("vertices {first} and {second} share lattice point ({x}, {y})")]
    DuplicateCoordinate { first: Vertex, second: Vertex, x: i64, y: i64 },

    #[error("edge ({u}, {v}) is not in the graph")]
    EdgeNotInGraph { u: Vertex, v: Vertex },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid bipartition: {0}")]
    InvalidBipartition(String),

    #[error("invalid matching: {0}")]
    InvalidMatching(String),

    #[error("brute force refused: {edges} edges exceeds the cap of {cap}")]
    CapExceeded { edges: usize, cap: usize },

    #[error("k = {k} is outside 0..={max} (k must satisfy 0 <= k <= floor(|V|/2))")]
    KOutOfRange { k: i64, max: usize },

    #[error("maximum matching enumeration was truncated at {cap} matchings; exact result unavailable")]
    Truncated { cap: usize },

    #[error("cap must be at least 1")]
    ZeroCap,

    #[error("DIMACS: {0}")]
    Dimacs(String),

    #[error("clause {clause}: {message}")]
    Clause { clause: usize, message: String },

    #[error("assignment covers {given} of {expected} variables")]
    PartialAssignment { given: usize, expected: usize },

    #[error("matching is not perfect: {0}")]
    NotPerfect(String),

    #[error("matching does not follow a variable cycle orientation: {0}")]
    NonConformingMatching(String),

    #[error("{name} = {value} is outside the open interval ({low}, {high})")]
    OutOfInterval { name: &'static str, value: String, low: String, high: String },

    #[error("cannot parse rational {0:?}; expected p/q or an integer")]
    Rational(String),

    #[error("invalid tolerance function {0:?}")]
    Tolerance(String),

    #[error("certificate mismatch: {0}")]
    Certificate(String),

    #[error("{0}")]
    Usage(String),

    #[error("{0}")]
    Io(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
