use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("edge {0}-{1} joins two vertices on the same side of the bipartition")]
    BipartitionViolated(usize, usize),

    #[error("bipartition has {got} labels, graph has {order} vertices")]
    BipartitionLength { got: usize, order: usize },

    #[error("operation requires a bipartition")]
    MissingBipartition,

    #[error("vertex {center} has degree {degree}, cannot remove {requested} edges")]
    InsufficientDegree {
        center: usize,
        degree: usize,
        requested: usize,
    },

    #[error("vertex sets overlap")]
    OverlappingSets,

    #[error("malformed graph6: {0}")]
    Graph6(String),

    #[error("order {order} exceeds the limit {limit} for {what}")]
    OrderTooLarge {
        what: &'static str,
        order: usize,
        limit: usize,
    },

    #[error("eigensolver did not converge after {iterations} iterations (best residual {residual:e})")]
    NotConverged { iterations: usize, residual: f64 },

    #[error("matrix is not symmetric at ({0}, {1})")]
    NotSymmetric(usize, usize),

    #[error("matrix has a non-finite entry at ({0}, {1})")]
    NonFinite(usize, usize),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("partition is not equitable: vertex {vertex} has {got} neighbours in class {to}, expected {expected}")]
    NotEquitable {
        vertex: usize,
        to: usize,
        got: usize,
        expected: usize,
    },

    #[error("graph is disconnected")]
    Disconnected,

    #[error("graph has no edges")]
    NoEdges,

    #[error("graph has odd order {0}")]
    OddOrder(usize),

    #[error("parameter k must be at least 1")]
    ZeroK,

    #[error("bipartition is unbalanced ({a} vs {b})")]
    Unbalanced { a: usize, b: usize },

    #[error("graph is not regular")]
    NotRegular,

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("internal cross-check failed: {0}")]
    OracleDisagreement(String),

    #[error("threshold mismatch: quotient gives {quotient}, dense eigensolve gives {dense}")]
    ThresholdMismatch { quotient: f64, dense: f64 },
}
