use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("syntax error at {line}:{column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error(transparent)]
    Core(syzygy_core::Error),
    #[error("{0}")]
    Type(String),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl From<syzygy_core::Error> for CliError {
    fn from(e: syzygy_core::Error) -> Self {
        match e {
            syzygy_core::Error::Parse { line, column, message } => CliError::Syntax { line, column, message },
            other => CliError::Core(other),
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
