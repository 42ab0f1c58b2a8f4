use opuc_core::OpucError;
use thiserror::Error;

/// Failures that end a run, each tied to an exit code.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("input error: {0}")]
    Schema(String),

    #[error("normalization error: {0}")]
    Normalization(String),

    #[error("depth/resolution error: {0}")]
    Resolution(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Schema(_) | CliError::Io(_) => 2,
            CliError::Normalization(_) => 3,
            CliError::Resolution(_) => 4,
        }
    }
}

impl From<OpucError> for CliError {
    fn from(e: OpucError) -> Self {
        let msg = e.to_string();
        match e {
            OpucError::InvalidMeasure(_)
            | OpucError::InvalidCoefficient { .. }
            | OpucError::DomainError(_) => CliError::Schema(msg),
            OpucError::MassNormalization { .. } => CliError::Normalization(msg),
            _ => CliError::Resolution(msg),
        }
    }
}
