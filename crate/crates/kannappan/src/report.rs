//! JSON report plumbing.
//!
//! Reports are plain serde structs with fixed field order and no clocks or
//! unordered maps, so a run with the same configuration and seed emits
//! byte-identical output.

use serde::ser::Serializer;
use serde::Serialize;

use crate::value::Value;

/// Serializes a [`Value`] as its display string: exact rationals stay
/// readable (`p/q`) and floats round-trip via the shortest representation.
pub fn value_as_string<S: Serializer>(v: &Value, ser: S) -> Result<S::Ok, S::Error> {
    ser.serialize_str(&v.to_string())
}

pub fn opt_value_as_string<S: Serializer>(
    v: &Option<Value>,
    ser: S,
) -> Result<S::Ok, S::Error> {
    match v {
        Some(v) => ser.serialize_some(&v.to_string()),
        None => ser.serialize_none(),
    }
}

pub fn values_as_strings<S: Serializer>(vs: &[Value], ser: S) -> Result<S::Ok, S::Error> {
    ser.collect_seq(vs.iter().map(Value::to_string))
}

/// Envelope printed by every CLI run: the subcommand, the reproducibility
/// inputs (seed, tolerances), and the payload.
#[derive(Debug, Serialize)]
pub struct RunReport<T: Serialize> {
    pub command: String,
    pub carrier: Option<String>,
    pub function: Option<String>,
    pub seed: Option<u64>,
    pub tol: Option<f64>,
    pub report: T,
}

pub fn to_json<T: Serialize>(report: &T) -> String {
    serde_json::to_string_pretty(report).expect("report serialization is infallible")
}
