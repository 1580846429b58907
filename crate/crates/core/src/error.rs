use thiserror::Error;

/// Error type shared by all modules.
///
/// `UndecidableAtPrecision` is reserved for honest refusals: an enclosure still
/// straddles a boundary after the maximum refinement. Callers must not treat
/// it as "false".
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("window too small: {0}")]
    WindowTooSmall(String),

    #[error("branching unavailable at step {step}: only one admissible integer")]
    BranchingUnavailable { step: usize },

    #[error("undecidable at precision: {0}")]
    UndecidableAtPrecision(String),

    #[error("invalid path at step {step}: {value} fails the admissibility recheck")]
    InvalidPath { step: usize, value: String },

    #[error("polynomial is reducible; witness factor {factor}")]
    Reducible { factor: String },

    #[error("degenerate input: {0}")]
    Degenerate(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }
}
