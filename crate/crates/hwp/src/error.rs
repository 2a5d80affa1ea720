use thiserror::Error;

#[derive(Debug, Error)]
pub enum HwpError {
    #[error("malformed cycle: {0}")]
    MalformedCycle(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("unsupported parameters: {0}")]
    Unsupported(String),

    #[error("provider exhausted: {what} (hint: {hint})")]
    ProviderExhausted { what: String, hint: String },

    #[error("internal construction failure: {0}")]
    Internal(String),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),

    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, HwpError>;
