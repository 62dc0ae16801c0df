use thiserror::Error;

/// Errors shared by all modules of the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// The graph itself violates a structural invariant (endpoint order,
    /// duplicate edges, non-contiguous colour labels, ...).
    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    /// An edge set refers to an edge index outside the host graph.
    #[error("invalid edge set: {0}")]
    InvalidEdgeSet(String),

    /// An operation was called on input outside its contract
    /// (wrong colouring class, mismatched sizes, malformed tree, ...).
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// An exhaustive procedure was asked to run above its hard size cap.
    #[error("input too large: {0}")]
    TooLarge(String),

    /// The enumeration search space exceeds the configured budget.
    #[error("enumeration budget exceeded: search space {search_space} exceeds budget {budget}")]
    BudgetExceeded { search_space: u128, budget: u128 },

    /// A guaranteed-to-exist object was not found; signals a bug, not bad input.
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn invalid_graph(msg: impl Into<String>) -> Self {
        Error::InvalidGraph(msg.into())
    }

    pub(crate) fn invalid_input(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub(crate) fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }
}
