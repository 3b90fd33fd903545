use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("invalid diagram: {0}")]
    Diagram(#[from] knotcolor::DiagramError),
    #[error("{0}")]
    Alexander(#[from] knotcolor::AlexanderError),
    #[error("{0}")]
    Quandle(#[from] knotcolor::QuandleError),
    #[error("{0}")]
    Twist(#[from] knotcolor::TwistError),
    #[error("{0}")]
    Search(knotcolor::SearchError),
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

impl From<knotcolor::SearchError> for CliError {
    fn from(e: knotcolor::SearchError) -> Self {
        CliError::Search(e)
    }
}

impl CliError {
    pub fn parse(line: usize, message: impl Into<String>) -> Self {
        CliError::Parse {
            line,
            message: message.into(),
        }
    }

    /// 2 for anything the caller can fix by changing the request, 1 for
    /// failures of the engine itself.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Search(knotcolor::SearchError::Inconsistent { .. })
            | CliError::Search(knotcolor::SearchError::BoundInvariant(_)) => 1,
            _ => 2,
        }
    }
}
