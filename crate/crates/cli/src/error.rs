use thiserror::Error;

/// Process exit codes.
pub mod exit {
    pub const SUCCESS: u8 = 0;
    pub const USAGE: u8 = 1;
    pub const CHECK_FAILED: u8 = 2;
    pub const CAP_EXCEEDED: u8 = 3;
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error(transparent)]
    Core(#[from] pairopt::Error),

    #[error("{0}")]
    CheckFailed(String),

    #[error("invalid design file: {0}")]
    DesignFile(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        use pairopt::Error as E;
        match self {
            Self::Core(E::CapExceeded { .. }) => exit::CAP_EXCEEDED,
            Self::Core(E::CertificationFailed(_) | E::SingularDesign(_)) | Self::CheckFailed(_) => {
                exit::CHECK_FAILED
            }
            _ => exit::USAGE,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
