use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("{0}")]
    Io(String),

    #[error(transparent)]
    Invalid(#[from] circle_bundles::Error),

    #[error("{0}")]
    Usage(String),
}

impl CliError {
    /// Parse, I/O and validation failures all exit with 2.
    pub fn exit_code(&self) -> i32 {
        2
    }
}
