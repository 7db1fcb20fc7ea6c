use affsim_core::Error as CoreError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0}")]
    Semantic(String),
    #[error("{0}")]
    Guard(String),
    #[error("brute-force oracle disagrees: {0}")]
    Disagreement(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Semantic(_) => 3,
            CliError::Guard(_) => 4,
            CliError::Disagreement(_) => 5,
        }
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::TooLarge(_) => CliError::Guard(e.to_string()),
            other => CliError::Semantic(other.to_string()),
        }
    }
}
