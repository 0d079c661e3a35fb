use opticforge::Error;
use thiserror::Error as ThisError;

/// Exit codes: 0 pass, 1 user error, 2 verification failure, 3 internal or
/// bound error.
pub const EXIT_PASS: i32 = 0;
pub const EXIT_USER: i32 = 1;
pub const EXIT_VERIFY: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Debug, ThisError)]
pub enum CliError {
    #[error("{0}")]
    Core(#[from] Error),

    /// A core error raised while processing the declaration at `line`.
    #[error("line {line}: {source}")]
    At { line: usize, source: Error },

    #[error("{path}: {msg}")]
    Io { path: String, msg: String },

    #[error("{0}")]
    Usage(String),
}

impl CliError {
    /// Attach a declaration line unless the error already carries a position.
    pub fn at(line: usize, e: Error) -> CliError {
        match e {
            Error::Parse { .. } | Error::UnknownIdentifier { .. } => CliError::Core(e),
            e => CliError::At { line, source: e },
        }
    }

    pub fn core(&self) -> Option<&Error> {
        match self {
            CliError::Core(e) | CliError::At { source: e, .. } => Some(e),
            _ => None,
        }
    }

    pub fn is_bound(&self) -> bool {
        matches!(self.core(), Some(Error::BoundExceeded { .. } | Error::Budget(_)))
    }

    pub fn exit_code(&self) -> i32 {
        if self.is_bound() {
            EXIT_INTERNAL
        } else {
            EXIT_USER
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;
