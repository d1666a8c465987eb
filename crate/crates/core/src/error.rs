use crate::pointset::PointSet;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("topology must contain the empty set and the full set")]
    MissingEmptyOrFull,
    #[error("not closed under union: {0} ∪ {1} is not open")]
    NotClosedUnderUnion(PointSet, PointSet),
    #[error("not closed under intersection: {0} ∩ {1} is not open")]
    NotClosedUnderIntersection(PointSet, PointSet),
    #[error("point {point} out of range for a space with {n} points")]
    PointOutOfRange { point: usize, n: usize },
    #[error("spaces are limited to {max} points, got {n}")]
    TooManyPoints { n: usize, max: usize },
    #[error("operation requires a nonempty space")]
    EmptySpace,
    #[error("{what}: count {count} exceeds cap {cap}")]
    CapExceeded {
        what: &'static str,
        count: usize,
        cap: usize,
    },
    #[error("depth {depth} exceeds cap {cap}")]
    DepthCapExceeded { depth: usize, cap: usize },
    #[error("menu {0} is empty")]
    EmptyMenu(usize),
    #[error("set {set} is not {kind} in the space")]
    NotInTopology { set: PointSet, kind: &'static str },
    #[error("selection target family mentions more than 64 distinct sets")]
    TooManyMembers,
    #[error("illegal move {mv} in context {context}")]
    IllegalMove { context: String, mv: String },
    #[error("strategy has no entry for context {0}")]
    MissingEntry(String),
    #[error("illegal source strategy: {0}")]
    IllegalSourceStrategy(String),
    #[error("invalid clopen sequence for block {block}: {reason}")]
    InvalidClopenSequence { block: PointSet, reason: String },
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("malformed input: {0}")]
    Format(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn cap(what: &'static str, count: usize, cap: usize) -> Self {
        Error::CapExceeded { what, count, cap }
    }

    /// Whether this error stems from an enumeration or search budget.
    pub fn is_cap(&self) -> bool {
        matches!(
            self,
            Error::CapExceeded { .. } | Error::DepthCapExceeded { .. }
        )
    }
}
