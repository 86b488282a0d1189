//! Machine-readable report envelope shared by every subcommand.

use serde::Serialize;
use serde_json::{Map, Number, Value};

use cheblab_core::checks::sig_digits;

/// Serialized once per invocation; `overall_pass` is the AND over every
/// contained pass flag and drives the exit code.
#[derive(Debug, Serialize)]
pub struct Report {
    pub tool_version: String,
    pub command: String,
    pub params: Map<String, Value>,
    pub results: Vec<Value>,
    pub overall_pass: bool,
    pub wallclock_ms: u64,
}

impl Report {
    pub fn new(command: &str, params: Map<String, Value>, results: Vec<Value>, overall_pass: bool) -> Self {
        Report {
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            command: command.to_string(),
            params,
            results,
            overall_pass,
            wallclock_ms: 0,
        }
    }

    /// JSON with every float rounded to 12 significant digits; key order is
    /// fixed (struct fields, then sorted maps), so identical inputs yield
    /// byte-identical output apart from `wallclock_ms`.
    pub fn to_json(&self) -> String {
        let mut value = serde_json::to_value(self).expect("report serializes");
        round_floats(&mut value);
        serde_json::to_string_pretty(&value).expect("report renders")
    }
}

/// Recursively rounds all JSON floats to 12 significant digits. Integers
/// pass through untouched.
pub fn round_floats(value: &mut Value) {
    match value {
        Value::Number(n) => {
            if n.is_f64() {
                let x = n.as_f64().expect("checked f64");
                if let Some(rounded) = Number::from_f64(sig_digits(x, 12)) {
                    *n = rounded;
                }
            }
        }
        Value::Array(items) => items.iter_mut().for_each(round_floats),
        Value::Object(map) => map.values_mut().for_each(round_floats),
        _ => {}
    }
}

/// Serializes any value into the rounded report form.
pub fn rounded<T: Serialize>(t: &T) -> Value {
    let mut v = serde_json::to_value(t).expect("value serializes");
    round_floats(&mut v);
    v
}
