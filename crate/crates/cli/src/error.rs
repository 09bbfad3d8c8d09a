use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("config error at {location}: {message}")]
    Config { location: String, message: String },

    #[error("{0}")]
    Usage(String),

    #[error(transparent)]
    Bench(#[from] ocbench_core::BenchError),

    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("malformed report file {path}: {message}")]
    Report { path: String, message: String },
}

impl CliError {
    /// Process exit status: 2 for anything the user must fix in the
    /// invocation or config, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        match self {
            Self::Config { .. } | Self::Usage(_) => 2,
            _ => 1,
        }
    }

    pub fn io(path: &std::path::Path, source: std::io::Error) -> Self {
        Self::Io { path: path.display().to_string(), source }
    }
}
