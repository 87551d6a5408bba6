use thiserror::Error;

/// Errors raised by the algorithms, parsers and oracles of this crate.
///
/// Variants fall in two groups. Input errors (bad files, precondition
/// breaches, size limits) are the caller's problem. Internal violations mean
/// a constructive proof step produced something it should not have and point
/// at a bug in this crate; see [`Error::is_internal`].
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("empty hypergraph")]
    EmptyHypergraph,

    #[error("hypergraph has an empty hyperedge (#{0}); it cannot be covered")]
    EmptyHyperedge(usize),

    #[error("{op}: precondition violated: {detail}")]
    Precondition { op: &'static str, detail: String },

    #[error("{what} limit exceeded: {actual} > {limit}")]
    LimitExceeded {
        what: &'static str,
        limit: usize,
        actual: usize,
    },

    #[error("unsupported order {0}: expected one of 2, 3, 4, 5, 7, 8, 9")]
    UnsupportedOrder(usize),

    #[error("color {color} outside [1, {r}]")]
    ColorOutOfRange { color: usize, r: usize },

    #[error("not complete: pair ({u}, {v}) has no color")]
    NotComplete { u: usize, v: usize },

    #[error("not transitive: color {color} on ({u}, {v}) and ({v}, {w}) but not on ({u}, {w})")]
    NotTransitive {
        u: usize,
        v: usize,
        w: usize,
        color: usize,
    },

    #[error("deleting color {color} empties pair ({u}, {v})")]
    DeletionEmptiesEdge { u: usize, v: usize, color: usize },

    #[error("{op}: input violates hypothesis: {diagnostic}")]
    HypothesisViolated { op: &'static str, diagnostic: String },

    #[error("internal invariant violated: {0}")]
    InvariantViolated(String),

    #[error("characterization violated: {0}")]
    CharacterizationViolated(String),
}

impl Error {
    pub(crate) fn precondition(op: &'static str, detail: impl Into<String>) -> Self {
        Error::Precondition {
            op,
            detail: detail.into(),
        }
    }

    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }

    /// True when the error signals a failed internal check rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(
            self,
            Error::HypothesisViolated { .. }
                | Error::InvariantViolated(_)
                | Error::CharacterizationViolated(_)
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
