use thiserror::Error;

/// Errors raised across the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// The point lies outside (or on the boundary of) the convergence region.
    #[error("domain error: {0}")]
    Domain(String),

    /// A parameter is invalid, e.g. a lower parameter at a pole.
    #[error("parameter error: {0}")]
    Param(String),

    /// The series did not settle within the term budget.
    #[error("truncation error: {0}")]
    Truncation(String),

    #[error("index error: {0}")]
    Index(String),

    /// A series-path denominator vanished. The diagonal form may still be defined.
    #[error("singular parameter: {0}")]
    SingularParam(String),

    #[error("sampling error: {0}")]
    Sampling(String),
}

pub type Result<T> = std::result::Result<T, Error>;
