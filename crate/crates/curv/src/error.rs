use thiserror::Error;

/// Errors reported by graph/complex construction and the curvature operations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("p-norm exponent must satisfy p >= 1, got {0}")]
    BadExponent(f64),
    #[error("unknown vertex id {0}")]
    UnknownVertex(i64),
    #[error("duplicate vertex id {0}")]
    DuplicateVertex(i64),
    #[error("no edge between vertices {0} and {1}")]
    UnknownEdge(i64, i64),
    #[error("duplicate edge ({0},{1})")]
    DuplicateEdge(i64, i64),
    #[error("self-loop at vertex {0}")]
    SelfLoop(i64),
    #[error("not a cycle: {0}")]
    NotACycle(String),
    #[error("duplicate 2-cell {0}")]
    DuplicateCycle(String),
    #[error("non-positive weight on {0}")]
    NonPositiveWeight(String),
    #[error("negative 2-cell weight on {0}")]
    NegativeWeight(String),
    #[error("invalid complex:\n{0}")]
    InvalidComplex(String),
    #[error("degenerate omega: edge ({0},{1}) is not the unique omega-shortest path between its endpoints")]
    DegenerateOmega(i64, i64),
    #[error("vertices {0} and {1} lie in different components (infinite distance)")]
    InfiniteDistance(i64, i64),
    #[error("shortcutting cycle {0} through edge ({1},{2}) is not a 2-cell of the complex")]
    MissingShortcuttingCycle(String, i64, i64),
    #[error("linear program unexpectedly {0}")]
    UnexpectedLpStatus(&'static str),
    #[error("parse error: {0}")]
    Parse(String),
}
