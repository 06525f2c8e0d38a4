use serde::{Deserialize, Serialize};
use serde_json::Value;

pub const SCHEMA_VERSION: &str = "1";

/// The single JSON object every command writes to stdout.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub schema_version: String,
    pub command: String,
    pub inputs: Value,
    pub result: Value,
    pub diagnostics: Vec<String>,
}

impl ReportDocument {
    pub fn new(command: &str, inputs: Value, result: Value, diagnostics: Vec<String>) -> Self {
        ReportDocument { schema_version: SCHEMA_VERSION.into(), command: command.into(), inputs, result, diagnostics }
    }
}

/// Exit status by outcome.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Affirmative = 0,
    Negative = 1,
    InputError = 2,
}

impl Status {
    pub fn affirm(yes: bool) -> Self {
        if yes {
            Status::Affirmative
        } else {
            Status::Negative
        }
    }
}
