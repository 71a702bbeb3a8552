use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error(transparent)]
    Core(#[from] baxter_core::Error),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    /// Process exit code for an error that aborts the run.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) => 2,
            CliError::Core(e) if is_config_error(e) => 2,
            _ => 1,
        }
    }
}

fn is_config_error(e: &baxter_core::Error) -> bool {
    use baxter_core::Error as E;
    matches!(e, E::Degenerate(_) | E::InvalidArgument(_) | E::Parse(_))
}

pub type Result<T> = std::result::Result<T, CliError>;
