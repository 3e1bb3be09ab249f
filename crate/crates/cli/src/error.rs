use serde_json::{json, Value};

/// Failure of one CLI run, with its exit code and JSON error object.
#[derive(Debug)]
pub enum CliError {
    Core(su2_strata::Error),
    Io { path: String, message: String },
    Json { path: String, line: usize, column: usize, message: String },
    Usage(String),
}

impl CliError {
    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Core(e) => e.kind(),
            CliError::Io { .. } => "IoError",
            CliError::Json { .. } => "FormatError",
            CliError::Usage(_) => "UsageError",
        }
    }

    pub fn detail(&self) -> String {
        match self {
            CliError::Core(e) => e.to_string(),
            CliError::Io { path, message } => format!("cannot read {path}: {message}"),
            CliError::Json { path, message, .. } => format!("invalid JSON in {path}: {message}"),
            CliError::Usage(msg) => msg.clone(),
        }
    }

    pub fn location(&self) -> Option<String> {
        match self {
            CliError::Core(e) => e.location(),
            CliError::Io { path, .. } => Some(path.clone()),
            CliError::Json { path, line, column, .. } => {
                Some(format!("{path}:{line}:{column}"))
            }
            CliError::Usage(_) => None,
        }
    }

    /// 2 for unreadable or malformed input, 1 for domain failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(e) if !e.is_input_error() => 1,
            _ => 2,
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "error": self.kind(),
            "detail": self.detail(),
            "location": self.location(),
        })
    }
}

impl From<su2_strata::Error> for CliError {
    fn from(e: su2_strata::Error) -> Self {
        CliError::Core(e)
    }
}
