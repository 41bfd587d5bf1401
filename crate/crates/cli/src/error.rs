use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error(transparent)]
    Engine(#[from] hirzebruch::Error),

    #[error("{path}: line {line}, column {column}: {msg}")]
    Json {
        path: String,
        line: usize,
        column: usize,
        msg: String,
    },

    #[error("{path}: field `{field}`: {msg}")]
    Field {
        path: String,
        field: String,
        msg: String,
    },

    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },

    #[error("write failed: {0}")]
    Output(#[from] std::io::Error),

    #[error("verification failed")]
    Verification,
}

impl CliError {
    /// 1 for a failed verification, 2 for everything the user has to fix.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Verification => 1,
            _ => 2,
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;
