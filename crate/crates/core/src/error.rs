use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// The lattice cannot be built for these inputs (typically n too small).
    #[error("model error: {0}")]
    Model(String),

    /// The request exceeds the documented work budget of the operation.
    #[error("budget error: {0}")]
    Budget(String),

    /// Adaptive quadrature stopped before reaching the requested tolerance.
    #[error("quadrature did not converge: {message} (estimate {estimate:e}, error {abs_error:e})")]
    Convergence {
        message: String,
        estimate: f64,
        abs_error: f64,
    },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
