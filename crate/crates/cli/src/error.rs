use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = CliError> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{context}: {source}")]
    Model {
        context: String,
        #[source]
        source: stagefuzz::Error,
    },

    #[error("{0}")]
    Invalid(String),

    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),

    #[error("malformed CSV: {0}")]
    Csv(#[from] csv::Error),

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl CliError {
    pub fn model(context: impl Into<String>, source: stagefuzz::Error) -> Self {
        CliError::Model {
            context: context.into(),
            source,
        }
    }

    /// 2 for invalid input, 3 for valid but degenerate data, 1 for I/O.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Model { source, .. } if source.is_degenerate() => 3,
            CliError::Io { .. } => 1,
            _ => 2,
        }
    }
}
