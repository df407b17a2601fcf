use std::fmt;

use liecoh::lie::LieError;
use serde_json::{json, Value};

/// Failure of one invocation, mapped to a process exit code.
#[derive(Debug)]
pub enum CliError {
    /// Mathematical validation failed; `detail` carries the witness.
    Math { message: String, detail: Value },
    Usage(String),
    Malformed(String),
    NoInput(String),
}

impl CliError {
    pub fn math(message: impl Into<String>, detail: Value) -> Self {
        CliError::Math { message: message.into(), detail }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Math { .. } => 2,
            CliError::Usage(_) => 64,
            CliError::Malformed(_) => 65,
            CliError::NoInput(_) => 66,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Math { .. } => "math_failure",
            CliError::Usage(_) => "usage",
            CliError::Malformed(_) => "malformed_input",
            CliError::NoInput(_) => "no_input",
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Math { message, .. } => message,
            CliError::Usage(m) | CliError::Malformed(m) | CliError::NoInput(m) => m,
        }
    }

    pub fn to_json(&self) -> Value {
        let mut err = json!({"code": self.exit_code(), "kind": self.kind(), "message": self.message()});
        if let CliError::Math { detail, .. } = self {
            if !detail.is_null() {
                err["detail"] = detail.clone();
            }
        }
        json!({ "error": err })
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (exit {}): {}", self.kind(), self.exit_code(), self.message())
    }
}

impl From<LieError> for CliError {
    fn from(e: LieError) -> Self {
        match e {
            LieError::NotClosed { a, b } => {
                CliError::math(e.to_string(), json!({"not_closed": [a, b]}))
            }
            LieError::SingularBasis => CliError::math(e.to_string(), Value::Null),
            other => CliError::Malformed(other.to_string()),
        }
    }
}
