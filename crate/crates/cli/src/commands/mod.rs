pub mod check;
pub mod decompose;
pub mod generate;
pub mod verify;
pub mod witness;

use serde_json::{json, Value};

use balgraph::Error;

use crate::code;

/// Exit code a per-item library error contributes to the run.
pub fn code_of(e: &Error) -> u8 {
    match e {
        e if e.is_resource_limit() => code::RESOURCE,
        Error::OutOfTheoremScope(_) => code::OUT_OF_SCOPE,
        Error::TheoremViolation { .. } => code::VIOLATION,
        _ => code::INPUT,
    }
}

pub fn error_json(e: &Error) -> Value {
    let kind = match e {
        e if e.is_resource_limit() => "resource-limit",
        Error::OutOfTheoremScope(_) => "out-of-scope",
        Error::TheoremViolation { .. } => "theorem-violation",
        _ => "invalid-input",
    };
    json!({ "kind": kind, "message": e.to_string() })
}

/// Exit code of a run: the most severe contribution wins.
pub fn worst(a: u8, b: u8) -> u8 {
    a.max(b)
}
