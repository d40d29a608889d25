//! JSON batch interface: input documents, task execution, reports, and the
//! built-in self-test.

mod pretty;
mod run;
mod schema;
mod selftest;

use std::fmt;

use serde::{Deserialize, Serialize};

pub use pretty::render_pretty;
pub use run::{
    exit_code, run, run_text, ReportDocument, Status, Summary, TaskResult, REPORT_SCHEMA, VERSION,
};
pub use schema::{
    group_def, parse_input, resolve_group, FactorDef, FactorKindDef, GraphDef, GroupDef,
    InputDocument, ResolvedGroup, TaskDef, INPUT_SCHEMA,
};
pub use selftest::{selftest, Suite, SELFTEST_BASES};

/// Exit statuses of the command-line tool.
pub mod exit {
    pub const OK: i32 = 0;
    pub const VERIFICATION_FAILED: i32 = 1;
    pub const INPUT_ERROR: i32 = 2;
    pub const BOUND_EXCEEDED: i32 = 3;
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ErrorKind {
    /// Malformed or inconsistent input.
    Input,
    /// A hypothesis of the requested check does not hold.
    Hypothesis,
    /// A configured resource bound was exceeded.
    Bound,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TaskError {
    pub kind: ErrorKind,
    /// Location in the input document, when there is one.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub path: Option<String>,
    pub message: String,
}

impl TaskError {
    pub fn new(kind: ErrorKind, message: impl Into<String>) -> Self {
        TaskError {
            kind,
            path: None,
            message: message.into(),
        }
    }

    pub fn at(kind: ErrorKind, path: impl Into<String>, message: impl Into<String>) -> Self {
        TaskError {
            kind,
            path: Some(path.into()),
            message: message.into(),
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self.kind {
            ErrorKind::Bound => exit::BOUND_EXCEEDED,
            ErrorKind::Input | ErrorKind::Hypothesis => exit::INPUT_ERROR,
        }
    }
}

impl fmt::Display for TaskError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.kind {
            ErrorKind::Input => "input error",
            ErrorKind::Hypothesis => "hypothesis violated",
            ErrorKind::Bound => "bound exceeded",
        };
        match &self.path {
            Some(p) => write!(f, "{kind} at {p}: {}", self.message),
            None => write!(f, "{kind}: {}", self.message),
        }
    }
}

impl std::error::Error for TaskError {}
