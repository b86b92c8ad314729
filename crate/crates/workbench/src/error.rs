use thiserror::Error;

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    pub const USAGE: i32 = 1;
    pub const COUNTEREXAMPLE: i32 = 2;
    pub const BUDGET: i32 = 3;
    pub const INCONSISTENT: i32 = 4;
}

#[derive(Debug, Error)]
pub enum WorkbenchError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("usage: {0}")]
    Usage(String),
    #[error("i/o error: {0}")]
    Io(String),
    #[error(transparent)]
    Core(#[from] ramsey_core::Error),
}

impl WorkbenchError {
    pub fn exit_code(&self) -> i32 {
        match self {
            WorkbenchError::Core(ramsey_core::Error::Inconsistent(_)) => exit::INCONSISTENT,
            _ => exit::USAGE,
        }
    }
}

impl From<serde_json::Error> for WorkbenchError {
    fn from(e: serde_json::Error) -> Self {
        WorkbenchError::Parse(e.to_string())
    }
}
