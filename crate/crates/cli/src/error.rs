use thiserror::Error;

use crate::parse::ParseError;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("malformed JSON input: {0}")]
    Json(#[from] serde_json::Error),
    #[error("cannot parse {context}: {source}")]
    Parse { context: String, source: ParseError },
    #[error("invalid input: {0}")]
    Input(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Core(#[from] ghilb_core::Error),
}

impl CliError {
    /// 2 for budget and instability conditions, 3 for input errors.
    pub fn exit_code(&self) -> i32 {
        use ghilb_core::Error as E;
        match self {
            CliError::Core(
                E::BudgetExceeded { .. } | E::Unstable(_) | E::IterationCapExceeded { .. } | E::NonGenericSeed { .. },
            ) => 2,
            _ => 3,
        }
    }
}
