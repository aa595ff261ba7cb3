use thiserror::Error;

/// Degree cap for dense basis conversions.
pub const MAX_CONVERSION_DEGREE: usize = 14;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("shape must have at least one cell")]
    EmptyShape,

    #[error("degree {degree} exceeds conversion cap MAX_CONVERSION_DEGREE = {cap}")]
    DegreeCapExceeded { degree: usize, cap: usize },

    #[error("{what}: size {size} exceeds guard {guard} = {limit}")]
    TooLarge {
        what: &'static str,
        size: usize,
        guard: &'static str,
        limit: usize,
    },

    #[error("bad parameter: {0}")]
    BadParameter(String),

    #[error("no such vertex {vertex} (graph has {order} vertices)")]
    NoSuchVertex { vertex: usize, order: usize },

    #[error("edges do not form a triangle: {0}")]
    NotATriangle(String),

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn guard(what: &'static str, size: usize, guard: &'static str, limit: usize) -> Result<()> {
    if size > limit {
        Err(Error::TooLarge { what, size, guard, limit })
    } else {
        Ok(())
    }
}
