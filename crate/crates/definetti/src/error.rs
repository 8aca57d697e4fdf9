//! Error type shared by all modules.

use thiserror::Error;

/// Errors raised by the verification routines.
#[derive(Debug, Error)]
pub enum Error {
    /// An argument is outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// The inputs are valid but outside the regime where the requested
    /// bound or formula holds; the message names the violated constraint.
    #[error("regime error: {0}")]
    Regime(String),

    /// A configured resource cap (permanent dimension, sector size) would
    /// be exceeded.
    #[error("resource limit exceeded: {0}")]
    Resource(String),

    /// Two operands live on different spaces.
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    /// Configuration or I/O failure in the batch front-end.
    #[error("{0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
