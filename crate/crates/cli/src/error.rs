use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Domain(String),
    #[error("{0}")]
    Model(String),
    #[error("{0}")]
    Budget(String),
    #[error("{0}")]
    Numerical(String),
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
}

impl From<lookback_core::Error> for CliError {
    fn from(e: lookback_core::Error) -> Self {
        use lookback_core::Error as E;
        match e {
            E::Domain(m) => CliError::Domain(m),
            E::Model(m) => CliError::Model(m),
            E::Budget(m) => CliError::Budget(m),
            other @ E::Convergence { .. } => CliError::Numerical(other.to_string()),
        }
    }
}

impl CliError {
    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Domain(_) => "domain",
            CliError::Model(_) => "model",
            CliError::Budget(_) => "budget",
            CliError::Numerical(_) => "numerical",
            CliError::Io(_) | CliError::Csv(_) => "io",
        }
    }

    /// 2 for domain, model and numerical failures, 3 for budget, 1 for i/o.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Domain(_) | CliError::Model(_) | CliError::Numerical(_) => 2,
            CliError::Budget(_) => 3,
            CliError::Io(_) | CliError::Csv(_) => 1,
        }
    }

    /// One-line JSON error record for stderr.
    pub fn record(&self) -> String {
        serde_json::json!({
            "schema_version": crate::output::SCHEMA_VERSION,
            "error": { "kind": self.kind(), "message": self.to_string() },
        })
        .to_string()
    }
}
