use thiserror::Error;

/// Errors surfaced by the analyzer.
///
/// The variants partition the failure modes the command line maps to exit
/// codes: domain errors are caller mistakes, capacity errors are configured
/// limits, assumption violations are inputs outside the theorem hypotheses,
/// and precision errors mean a certified decision could not be reached below
/// the precision cap.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("capacity exceeded: {0}")]
    Capacity(String),

    #[error("assumption violation: {0}")]
    AssumptionViolation(String),

    #[error("degenerate recurrence: {0}")]
    Degenerate(String),

    #[error("precision cap exceeded: {0}")]
    Precision(String),

    #[error("internal invariant violation: {0}")]
    Internal(String),

    #[error("unavailable: {0}")]
    Unavailable(String),
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
    pub fn capacity(msg: impl Into<String>) -> Self {
        Error::Capacity(msg.into())
    }
    pub fn assumption(msg: impl Into<String>) -> Self {
        Error::AssumptionViolation(msg.into())
    }
    pub fn degenerate(msg: impl Into<String>) -> Self {
        Error::Degenerate(msg.into())
    }
    pub fn precision(msg: impl Into<String>) -> Self {
        Error::Precision(msg.into())
    }
    pub fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }
    pub fn unavailable(msg: impl Into<String>) -> Self {
        Error::Unavailable(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
