use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// A citation count below zero, at this 0-based position of the input.
    #[error("negative citation count at index {index}")]
    NegativeCitation { index: usize },

    #[error("operation requires at least one paper")]
    EmptyProfile,

    #[error("degenerate least-squares fit: {0}")]
    DegenerateFit(&'static str),

    #[error("line is parallel to y = x and never meets it")]
    ParallelLines,

    #[error("line coincides with y = x")]
    CoincidentLines,

    #[error("trendline estimate not applicable: {0}")]
    NotApplicable(&'static str),

    /// `line` is 1-based; for JSON input it is the line reported by the decoder.
    #[error("parse error at line {line}: {reason}")]
    Parse { line: u64, reason: String },

    #[error("duplicate paper id {id:?} at line {line}")]
    DuplicatePaperId { line: u64, id: String },

    #[error("invalid benchmark size {0}")]
    InvalidSize(usize),

    #[error("benchmark needs at least 5 timed runs, got {0}")]
    InvalidRuns(usize),

    #[error("unknown method {0:?}")]
    UnknownMethod(String),
}
