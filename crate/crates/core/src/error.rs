use std::io;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("I/O error: {0}")]
    Io(#[from] io::Error),

    /// A corpus record violates the page-record format.
    #[error("corpus record {record} (byte offset {offset}): {message}")]
    Corpus {
        record: usize,
        offset: u64,
        message: String,
    },

    /// A line-oriented input (dictionary TSV, dataset JSONL) failed to parse.
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },

    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("dataset contains no mentions")]
    NoMentions,

    #[error("document {id}: {source}")]
    Document {
        id: String,
        #[source]
        source: Box<Error>,
    },

    #[error("thread pool: {0}")]
    ThreadPool(String),
}

impl Error {
    pub(crate) fn argument(msg: impl Into<String>) -> Self {
        Error::Argument(msg.into())
    }

    pub(crate) fn malformed(line: usize, msg: impl Into<String>) -> Self {
        Error::Malformed {
            line,
            message: msg.into(),
        }
    }
}
