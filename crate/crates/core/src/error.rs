use std::path::{Path, PathBuf};

use thiserror::Error;

/// Errors produced by corpus parsing, lexicon construction and the pipeline.
#[derive(Debug, Error)]
pub enum Error {
    /// A corpus token had no `/` separator (or an empty surface/tag half).
    #[error("line {line}, token {index}: malformed token {token:?} (expected surface/TAG)")]
    MalformedToken {
        line: usize,
        index: usize,
        token: String,
    },

    /// A line in a TSV input (builtin list, filter file, test set, dump) did
    /// not match the expected column layout.
    #[error("{path}:{line}: {msg}")]
    MalformedLine {
        path: PathBuf,
        line: usize,
        msg: String,
    },

    /// Lexical density over zero non-punctuation tokens.
    #[error("lexical density undefined: no non-punctuation tokens")]
    UndefinedDensity,

    /// A nominal filter was requested but no lexicon was supplied.
    #[error("nominal filter requested but no lexicon supplied")]
    FilterWithoutLexicon,

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub fn io(path: impl AsRef<Path>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.as_ref().to_path_buf(),
            source,
        }
    }

    /// Process exit code for the CLI: 2 for input/parse problems, 3 for
    /// configuration problems.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::FilterWithoutLexicon | Error::Config(_) => 3,
            _ => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
