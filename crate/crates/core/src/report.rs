//! Structured outcomes of verification checks.

use std::fmt;

use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Passed,
    Failed,
    Skipped,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Passed => "pass",
            Status::Failed => "fail",
            Status::Skipped => "skip",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: String,
    pub status: Status,
    pub detail: String,
}

impl CheckOutcome {
    pub fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> CheckOutcome {
        let status = if passed { Status::Passed } else { Status::Failed };
        CheckOutcome { name: name.into(), status, detail: detail.into() }
    }

    pub fn skipped(name: impl Into<String>, detail: impl Into<String>) -> CheckOutcome {
        CheckOutcome { name: name.into(), status: Status::Skipped, detail: detail.into() }
    }

    pub fn failed(&self) -> bool {
        self.status == Status::Failed
    }

    pub fn to_json(&self) -> Value {
        json!({ "name": self.name, "status": self.status.as_str(), "detail": self.detail })
    }
}

impl fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {}: {}", self.status.as_str(), self.name, self.detail)
    }
}

/// True when no check failed; skipped checks do not count against a report.
pub fn all_passed(checks: &[CheckOutcome]) -> bool {
    !checks.iter().any(CheckOutcome::failed)
}
