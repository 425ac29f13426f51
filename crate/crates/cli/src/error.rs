use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    /// Bad invocation: exit code 1.
    #[error("{0}")]
    Usage(String),
    /// Unreadable or invalid input, or a failed analysis: exit code 2.
    #[error("{0}")]
    Data(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Data(_) => 2,
        }
    }
}

macro_rules! data_error {
    ($($t:ty),*) => {$(
        impl From<$t> for CliError {
            fn from(e: $t) -> Self {
                CliError::Data(e.to_string())
            }
        }
    )*};
}

data_error!(
    theoremnet_core::Error,
    theoremnet_core::corpus::ParseError,
    theoremnet_metamath::MmError,
    theoremnet_logic::LogicError,
    theoremnet_logic::ParseError
);
