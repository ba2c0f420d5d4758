use serde::Serialize;
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Ok,
    PropertyFailed,
    InvalidInput,
    CapExceeded,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::PropertyFailed => 1,
            Status::InvalidInput => 2,
            Status::CapExceeded => 3,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct CommandResult {
    pub status: Status,
    pub payload: Value,
    pub timing_ms: f64,
}

#[derive(Debug)]
pub struct CliError {
    pub status: Status,
    pub message: String,
}

impl CliError {
    pub fn new(status: Status, message: impl Into<String>) -> Self {
        CliError {
            status,
            message: message.into(),
        }
    }

    pub fn invalid(message: impl Into<String>) -> Self {
        CliError::new(Status::InvalidInput, message)
    }
}

impl From<earlab_core::Error> for CliError {
    fn from(e: earlab_core::Error) -> Self {
        use earlab_core::Error as E;
        let status = match e {
            E::Verification(_) => Status::PropertyFailed,
            E::CapExceeded { .. } | E::BudgetExhausted { .. } => Status::CapExceeded,
            _ => Status::InvalidInput,
        };
        CliError::new(status, e.to_string())
    }
}

/// A payload together with the status it should be reported under.
pub struct Reply {
    pub status: Status,
    pub payload: Value,
}

impl Reply {
    pub fn ok(payload: impl Serialize) -> Result<Reply, CliError> {
        Reply::with(Status::Ok, payload)
    }

    pub fn with(status: Status, payload: impl Serialize) -> Result<Reply, CliError> {
        let payload =
            serde_json::to_value(payload).map_err(|e| CliError::invalid(e.to_string()))?;
        Ok(Reply { status, payload })
    }

    /// `Ok` when `holds`, otherwise `PropertyFailed`.
    pub fn check(holds: bool, payload: impl Serialize) -> Result<Reply, CliError> {
        Reply::with(
            if holds {
                Status::Ok
            } else {
                Status::PropertyFailed
            },
            payload,
        )
    }
}
