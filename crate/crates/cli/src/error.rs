use std::process::ExitCode;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    /// Bad flags, configuration or input files.
    #[error("{0}")]
    Usage(String),
    /// The computation ran but signalled blow-up, divergence or refusal.
    #[error("{0}")]
    Numerical(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> ExitCode {
        match self {
            CliError::Usage(_) | CliError::Io(_) => ExitCode::from(2),
            CliError::Numerical(_) => ExitCode::from(3),
        }
    }
}

impl From<dg_lab::Error> for CliError {
    fn from(e: dg_lab::Error) -> Self {
        use dg_lab::Error as E;
        match e {
            E::Aliasing { .. } | E::Parameter(_) | E::NonzeroMean { .. } | E::Format(_) => {
                CliError::Usage(e.to_string())
            }
            E::Io(io) => CliError::Io(io),
            _ => CliError::Numerical(e.to_string()),
        }
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Io(e.into())
    }
}
