use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Input outside an operation's domain: zero denominators, nonpositive
    /// zig-zag values, degenerate width-0 patterns, budget overruns.
    #[error("domain error: {0}")]
    Domain(String),

    /// A coordinate lookup outside the stored rows.
    #[error("index error: ({i}, {j}) lies in row {row}, outside rows 0..={max_row}")]
    Index { i: i64, j: i64, row: i64, max_row: usize },

    /// Malformed input text. `location` pins the failure: either a line/column
    /// of the source text or a row/entry position in the grid.
    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },

    /// Knitting needed to divide by `1 + N` (Y-friezes) or `N` (friezes) and
    /// the source entry made that impossible. `row` and `col` locate the
    /// offending entry in the source row (col is the index within one period).
    #[error("knitting blocked by forbidden entry in row {row}, column {col}")]
    KnitBlocked { row: usize, col: usize },

    /// An identity every constructed pattern is supposed to satisfy failed.
    /// This is never expected; it flags either corrupted input handed to a
    /// trusted constructor or an implementation bug worth loud failure.
    #[error("theorem violation: {0}")]
    TheoremViolation(String),
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn parse(location: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse { location: location.into(), message: message.into() }
    }

    pub fn theorem(msg: impl Into<String>) -> Self {
        Error::TheoremViolation(msg.into())
    }
}
