use thiserror::Error;

/// Errors surfaced by the toolkit.
#[derive(Debug, Error)]
pub enum KanevError {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("{0} is not a root of E6")]
    NotARoot(String),

    #[error("the given roots do not generate E6 over Z (elementary divisors {divisors:?})")]
    Generation { divisors: Vec<String> },

    #[error("degenerate input: {0}")]
    DegenerateInput(String),

    #[error("partition is not invariant under the group element: {0}")]
    Partition(String),

    #[error("malformed tree shape: {0}")]
    TreeShape(String),

    #[error("substitution rules are cyclic (symbol {0} expands through itself)")]
    CyclicRules(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),

    #[error("io: {0}")]
    Io(#[from] std::io::Error),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}
