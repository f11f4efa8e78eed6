use thiserror::Error;

/// Failure classes with distinct process exit codes.
#[derive(Debug, Error)]
pub enum CliError {
    /// Bad invocation: unknown values, missing flags, out-of-range sizes.
    #[error("{0}")]
    Usage(String),

    /// Unreadable or invalid input, or a construction error.
    #[error("{0}")]
    Data(String),

    /// A verification or regression check did not pass.
    #[error("{0}")]
    Failed(String),

    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Data(_) | CliError::Io { .. } => 1,
            CliError::Failed(_) => 3,
        }
    }
}
