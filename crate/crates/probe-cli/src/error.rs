use thiserror::Error;

/// Errors of the probe layer, split by the exit code they map to:
/// configuration problems exit 2, numeric guard violations exit 3.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("config error: {0}")]
    Config(String),

    #[error("numeric guard: {0}")]
    Guard(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) | CliError::Io(_) => 2,
            CliError::Guard(_) => 3,
        }
    }
}

impl From<fourier_core::FourierError> for CliError {
    fn from(e: fourier_core::FourierError) -> Self {
        match e {
            fourier_core::FourierError::MemoryGuard { .. } => CliError::Guard(e.to_string()),
            other => CliError::Config(other.to_string()),
        }
    }
}

impl From<hardy_tools::HardyError> for CliError {
    fn from(e: hardy_tools::HardyError) -> Self {
        match e {
            hardy_tools::HardyError::Fourier(inner) => inner.into(),
            hardy_tools::HardyError::NonIntegrable { .. } => CliError::Guard(e.to_string()),
            other => CliError::Config(other.to_string()),
        }
    }
}

impl From<exponent_geometry::GeometryError> for CliError {
    fn from(e: exponent_geometry::GeometryError) -> Self {
        CliError::Config(e.to_string())
    }
}
