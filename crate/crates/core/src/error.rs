//! Error type shared by all solvers and constructions.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),

    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("invalid family parameter: {0}")]
    InvalidFamilyParam(String),

    #[error("no known value recorded for this family/parameter pair")]
    NoKnownValue,

    #[error("{what}: instance size {size} exceeds search budget {budget}")]
    BudgetExceeded {
        what: &'static str,
        size: usize,
        budget: usize,
    },

    #[error("forcing run does not blacken every vertex")]
    IncompleteRun,

    #[error("illegal force {0} -> {1}: forcer must be black and target its unique white neighbour")]
    IllegalForce(usize, usize),

    #[error("initial set is not a zero-forcing set")]
    NotZeroForcingSet,

    #[error("malformed brush script: {0}")]
    MalformedScript(String),

    #[error("graph is not connected")]
    Disconnected,

    #[error("graph has no edges")]
    NoEdges,

    #[error("graph is a single edge; the line graph is a single vertex")]
    SingleEdge,

    #[error("line script does not clean the line graph: {0}")]
    InvalidLineScript(String),

    #[error("construction stalled: {0}")]
    ConstructionStalled(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
