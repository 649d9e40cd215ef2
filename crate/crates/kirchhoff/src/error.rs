use num_bigint::BigUint;
use thiserror::Error;

/// Errors produced anywhere in the engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("edge ({0}, {0}) is a loop")]
    LoopEdge(usize),

    #[error("vertex {vertex} is out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("edge ({0}, {1}) is already present")]
    EdgeAlreadyPresent(usize, usize),

    #[error("edge ({0}, {1}) is absent")]
    EdgeAbsent(usize, usize),

    #[error("graph6 supports at most 62 vertices, got {0}")]
    TooLarge(usize),

    #[error("malformed graph6 at byte {offset}: {reason}")]
    MalformedGraph6 { offset: usize, reason: String },

    #[error("edge list line {line}: {reason}")]
    MalformedEdgeList { line: usize, reason: String },

    #[error("graph is disconnected ({components} components)")]
    Disconnected { components: usize },

    #[error("graph has no edges")]
    NoEdges,

    #[error("graph must have at least {required} vertices, got {n}")]
    TooSmall { n: usize, required: usize },

    #[error("Jacobi iteration did not converge within {sweeps} sweeps")]
    ConvergenceFailure { sweeps: usize },

    #[error("invalid family parameters: {0}")]
    InvalidFamilyParams(String),

    #[error("no closed-form spectrum for family {0}")]
    NoClosedSpectrum(String),

    #[error("enumeration of {cardinality} objects exceeds the budget of {budget}")]
    BudgetExceeded { cardinality: BigUint, budget: u64 },

    #[error("parameter out of range: {0}")]
    ParamOutOfRange(String),

    #[error("malformed input: {0}")]
    MalformedInput(String),

    #[error("malformed report line {line}: {reason}")]
    MalformedReport { line: usize, reason: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
