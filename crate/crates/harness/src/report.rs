//! The JSON envelope printed by every command.

use serde::Serialize;
use serde_json::{json, Value};

pub const SCHEMA: u32 = 1;

#[derive(Clone, Debug, Serialize)]
pub struct Timing {
    pub elapsed_ms: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<Value>,
}

/// `{schema, command, result, timing}`. Only `timing` varies between
/// identical runs.
pub fn envelope(command: &str, result: Value, timing: Timing) -> Value {
    json!({ "schema": SCHEMA, "command": command, "result": result, "timing": timing })
}

/// The envelope without its timing field, for reproducibility checks.
pub fn without_timing(mut v: Value) -> Value {
    if let Some(o) = v.as_object_mut() {
        o.remove("timing");
    }
    v
}
