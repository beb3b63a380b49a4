//! Library error type.

use thiserror::Error;

#[derive(Error, Debug, Clone)]
pub enum Error {
    /// Shape/size mismatch or an input that cannot be realized.
    #[error("dimension error: {0}")]
    Dimension(String),

    /// Input outside the mathematical domain of an operation (e.g. a
    /// negative eigenvalue passed to the entropy).
    #[error("domain error: {0}")]
    Domain(String),

    /// A numerical routine failed to converge or lost stability.
    #[error("numerical error: {0}")]
    Numerical(String),

    /// The feasible set is empty (detected during preprocessing or
    /// reduction).
    #[error("infeasible: {0}")]
    Infeasible(String),

    /// An operation was called outside its contract (e.g. a barrier
    /// evaluation at a non-interior point).
    #[error("contract violation: {0}")]
    Contract(String),

    /// Invalid protocol parameter or measurement description.
    #[error("invalid instance: {0}")]
    InvalidInstance(String),
}

pub type Result<T> = std::result::Result<T, Error>;
