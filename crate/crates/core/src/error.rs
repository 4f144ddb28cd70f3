use thiserror::Error;

/// Errors raised by the engines.
///
/// Variants fall into two families: domain precondition failures (bad
/// parameters, inadmissible labels, walks that would leave the strand range)
/// and numeric failures (non-real probabilities, eigen solver breakdown).
/// [`Error::is_numeric`] tells them apart.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid level k = {0}: SU(2)_k requires k >= 2")]
    InvalidLevel(i64),

    #[error("invalid symmetric-group order N = {0}: the (2,1) irrep construction requires N >= 5")]
    InvalidGroupOrder(i64),

    #[error("unsupported model: {0}")]
    UnsupportedModel(String),

    #[error("fusion error: {0}")]
    Fusion(String),

    #[error("invalid configuration: {0}")]
    InvalidConfiguration(String),

    #[error("fusion space is empty: {0}")]
    EmptySpace(String),

    #[error("generator index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("strand count mismatch: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },

    #[error("plat closure needs an even strand count, got {0}")]
    OddStrandCount(usize),

    #[error("walk leaves the strand range: {0}")]
    Boundary(String),

    #[error("dense state needs {required} amplitudes, budget is {budget}; use the pathsum engine")]
    MemoryBudget { required: usize, budget: usize },

    #[error("word is not canonical: generator {0} appears in more than one block")]
    NonCanonical(usize),

    #[error("rewrite system could not bring the word to canonical form: {0}")]
    IrreducibleWord(String),

    #[error("numeric failure: {0}")]
    Numeric(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    pub fn is_numeric(&self) -> bool {
        matches!(self, Error::Numeric(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
