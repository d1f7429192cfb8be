//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Error, Debug)]
pub enum Error {
    /// A parameter violated a documented precondition.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A group element was handed to an operation of the wrong family.
    #[error("family mismatch: {0}")]
    FamilyMismatch(String),

    /// Value outside the domain where the operation is defined
    /// (e.g. the spherical-means exponent outside (0, 1)).
    #[error("domain error: {0}")]
    Domain(String),

    /// Adaptive quadrature failed to converge within the depth limit.
    #[error("quadrature did not converge: {0}")]
    QuadratureFailure(String),

    /// A low-pass partition came out inconsistent, which indicates a
    /// broken admissibility normalization upstream.
    #[error("inconsistent low-pass window: {0}")]
    InconsistentWindow(String),

    /// Shape mismatch between arrays that must share a grid.
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    /// Malformed file or configuration input.
    #[error("format error: {0}")]
    Format(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
