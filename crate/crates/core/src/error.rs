use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Checked 64-bit arithmetic overflowed; reduce the order.
    #[error("integer overflow evaluating {context}")]
    Overflow { context: &'static str },

    #[error("graph order must be at least 1")]
    InvalidOrder,

    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("vertex index {index} outside 1..={order}")]
    IndexOutOfRange { index: usize, order: usize },

    #[error("arc count {count} exceeds budget {budget}")]
    ArcBudgetExceeded { count: u64, budget: u64 },

    #[error("hope subgraph above v{prime} is not complete: v{vertex} misses v{order}")]
    HopeNotComplete {
        prime: usize,
        vertex: usize,
        order: usize,
    },

    #[error("v{target} is unreachable from v1")]
    Unreachable { target: usize },

    #[error("search budget of {budget} nodes exceeded")]
    SearchBudgetExceeded { budget: u64 },

    #[error("invalid braid at index {index}: {reason}")]
    InvalidBraid { index: usize, reason: String },

    #[error("order {order} exceeds the exhaustive limit {limit}")]
    OrderTooLarge { order: usize, limit: usize },

    #[error("sweep budget exceeded at order {order}")]
    BudgetExceeded { order: usize },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid colouring: {0}")]
    InvalidColouring(String),

    #[error("operation requires a quadratic incidence polynomial (a >= 1)")]
    NotQuadratic,

    #[error("max-degree locator disagrees with the sweep: {0}")]
    LocatorMismatch(String),
}
