use thiserror::Error;

/// Errors produced by graph construction, formula evaluation, oracles,
/// and the forest construction machinery.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// Zero raised to a negative exponent has no value in any extension
    /// the formulas here work in.
    #[error("zero cannot be raised to a negative exponent")]
    ZeroToNegativeExponent,

    /// A formula product came out fractional or negative. Counting
    /// formulas must always cancel to a non-negative integer, so this
    /// indicates a bug in the caller, never a property of the input.
    #[error("formula product is not a non-negative integer: {0}")]
    NonIntegralProduct(String),

    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    /// A construction plan violates one of its structural invariants.
    #[error("invalid plan: {0}")]
    InvalidPlan(String),

    /// A merge edge would join two vertices already in one component,
    /// which would close a cycle.
    #[error("merge edge within a single component: {0}")]
    MergeCycle(String),

    /// The closing map does not cover every remaining out-degree-zero
    /// vertex.
    #[error("incomplete plan: {0}")]
    IncompletePlan(String),

    #[error("unsupported input: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
