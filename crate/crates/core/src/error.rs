use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },

    #[error("line {line}: loop at vertex {vertex}")]
    Loop { line: usize, vertex: usize },

    #[error("line {line}: digon between {u} and {v}")]
    Digon { line: usize, u: usize, v: usize },

    #[error("line {line}: pair {{{u},{v}}} is both an undirected edge and an arc")]
    Overlap { line: usize, u: usize, v: usize },

    #[error("line {line}: vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange { line: usize, vertex: usize, n: usize },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),

    #[error("{what}: n = {n} exceeds cap {cap}")]
    CapExceeded { what: &'static str, n: usize, cap: usize },

    #[error("graphs have different orders ({0} vs {1})")]
    OrderMismatch(usize, usize),

    #[error("inadmissible partition: edge {edge} has type ({from},{to})")]
    Inadmissible { edge: String, from: String, to: String },

    #[error("cut contains arcs in both directions ({u}->{v} and {x}->{y})")]
    MixedCutDirection { u: usize, v: usize, x: usize, y: usize },

    #[error("invalid gauge: {0}")]
    InvalidGauge(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
