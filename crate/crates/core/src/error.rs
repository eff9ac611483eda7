use thiserror::Error;

use crate::draft::Violation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Input that does not describe a well-formed object at all.
    #[error("malformed input: {0}")]
    Malformed(String),

    /// A well-formed object that violates the precondition of an operation.
    #[error("{code}: {detail}")]
    Precondition { code: &'static str, detail: String },

    /// A draft failing one of the axioms D1–D4.
    #[error("{0}")]
    Draft(Violation),
}

impl Error {
    pub(crate) fn pre(code: &'static str, detail: impl Into<String>) -> Self {
        Error::Precondition {
            code,
            detail: detail.into(),
        }
    }

    /// Process exit code for this error: 1 for malformed input, 2 otherwise.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Malformed(_) => 1,
            Error::Precondition { .. } | Error::Draft(_) => 2,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
