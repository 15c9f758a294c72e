use thiserror::Error;

/// Errors shared across the engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("strand count mismatch: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },

    #[error("generator index {index} out of range for {strands} strands")]
    IndexOutOfRange { index: usize, strands: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("closure is not a knot ({components} components)")]
    NotAKnot { components: usize },

    #[error("exact division failed: remainder is nonzero")]
    InexactDivision,

    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
}
