use std::fmt;

use cdlat_core::Error;

/// Failure classes, each with its own exit status.
#[derive(Debug)]
pub enum CliError {
    /// Bad JSON, unknown fields, or parameters a constructor rejects.
    InvalidSpec(String),
    /// A size guard or the time budget stopped the computation.
    Guard(String),
    /// A verified claim did not hold.
    ClaimFailed(String),
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::ClaimFailed(_) => 1,
            CliError::InvalidSpec(_) | CliError::Io(_) => 2,
            CliError::Guard(_) => 3,
        }
    }

    fn kind(&self) -> &'static str {
        match self {
            CliError::InvalidSpec(_) => "invalid-spec",
            CliError::Guard(_) => "guard",
            CliError::ClaimFailed(_) => "claim-failed",
            CliError::Io(_) => "io",
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::InvalidSpec(m)
            | CliError::Guard(m)
            | CliError::ClaimFailed(m)
            | CliError::Io(m) => m,
        }
    }
}

/// One line: `cdlat: error[<kind>]: <message>`.
impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let msg = self.message().replace(['\n', '\r'], " ");
        write!(f, "cdlat: error[{}]: {}", self.kind(), msg)
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::SizeGuard { .. } | Error::TimeBudget => CliError::Guard(e.to_string()),
            Error::MethodDisagreement(_) => CliError::ClaimFailed(e.to_string()),
            _ => CliError::InvalidSpec(e.to_string()),
        }
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::InvalidSpec(format!("spec JSON: {e}"))
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}
