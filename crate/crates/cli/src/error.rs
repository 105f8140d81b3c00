use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{origin}:{line}:{col}: {msg}")]
    Parse { origin: String, line: usize, col: usize, msg: String },

    #[error("{origin}:{line}:{col}: {msg}")]
    DimensionMismatch { origin: String, line: usize, col: usize, msg: String },

    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("{0}")]
    Usage(String),

    #[error(transparent)]
    Core(#[from] sjplane::Error),
}

impl CliError {
    /// The structured error name printed on failure.
    pub fn name(&self) -> String {
        match self {
            CliError::Parse { .. } => "parse error".into(),
            CliError::DimensionMismatch { .. } => "dimension mismatch".into(),
            CliError::Io { .. } => "io error".into(),
            CliError::Usage(_) => "usage error".into(),
            CliError::Core(e) => e.name(),
        }
    }
}
