use std::io;
use std::path::{Path, PathBuf};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    /// Bad flags, bad config values, or a missing required setting.
    #[error("{0}")]
    Usage(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },

    /// An input file exists but its contents are rejected.
    #[error("{context}: {source}")]
    Data {
        context: String,
        #[source]
        source: centilink_core::Error,
    },
}

impl CliError {
    pub fn usage(msg: impl Into<String>) -> Self {
        CliError::Usage(msg.into())
    }

    pub fn io(path: &Path, source: io::Error) -> Self {
        CliError::Io {
            path: path.to_owned(),
            source,
        }
    }

    /// Exit status: 1 for usage errors, 2 for data and I/O errors.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Data {
                source: centilink_core::Error::Argument(_),
                ..
            } => 1,
            CliError::Io { .. } | CliError::Data { .. } => 2,
        }
    }
}

/// Attaches the offending file (or other context) to a core error.
pub trait Context<T> {
    fn context(self, context: impl std::fmt::Display) -> Result<T, CliError>;
}

impl<T> Context<T> for centilink_core::Result<T> {
    fn context(self, context: impl std::fmt::Display) -> Result<T, CliError> {
        self.map_err(|source| match source {
            centilink_core::Error::Io(e) => CliError::Io {
                path: PathBuf::from(context.to_string()),
                source: e,
            },
            source => CliError::Data {
                context: context.to_string(),
                source,
            },
        })
    }
}
