use thiserror::Error;

/// Errors raised by the combinatorial and block-theoretic operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid beta-set: {0}")]
    InvalidBetaSet(String),

    #[error("beta-set size {size} is smaller than the number of parts {parts}")]
    BetaTooSmall { size: usize, parts: usize },

    #[error("({x}, {y}) is not a removable hook")]
    NotAHook { x: usize, y: usize },

    #[error("inconsistent bead counts: {0}")]
    InconsistentBeadCounts(String),

    #[error("invalid group parameters: {0}")]
    InvalidParameters(String),

    #[error("label does not fit the group family: {0}")]
    LabelMismatch(String),

    #[error("inadmissible block context: {0}")]
    Inadmissible(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("self-paired p-element class {0}")]
    SelfPairedClass(usize),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Stable machine-readable code for the error kind.
    pub fn code(&self) -> &'static str {
        match self {
            Error::InvalidPartition(_) => "invalid_partition",
            Error::InvalidBetaSet(_) => "invalid_beta_set",
            Error::BetaTooSmall { .. } => "beta_too_small",
            Error::NotAHook { .. } => "not_a_hook",
            Error::InconsistentBeadCounts(_) => "inconsistent_bead_counts",
            Error::InvalidParameters(_) => "invalid_parameters",
            Error::LabelMismatch(_) => "label_mismatch",
            Error::Inadmissible(_) => "inadmissible",
            Error::Unsupported(_) => "unsupported",
            Error::SelfPairedClass(_) => "self_paired_class",
            Error::Parse(_) => "parse",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
