//! Versioned JSON envelope shared by the command-line tool and the Python
//! bindings. Exact numbers travel as `"p/q"` strings.

use std::collections::BTreeMap;
use std::time::Duration;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::Result;

pub const SCHEMA_VERSION: u32 = 1;
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: u32,
    pub command: String,
    pub inputs: Value,
    pub outputs: Value,
    /// Wall-clock seconds per phase.
    pub timings: BTreeMap<String, f64>,
    pub tool_version: String,
}

impl Report {
    pub fn new(command: &str, inputs: Value, outputs: Value, elapsed: Duration) -> Self {
        Report {
            schema_version: SCHEMA_VERSION,
            command: command.to_string(),
            inputs,
            outputs,
            timings: BTreeMap::from([("total".to_string(), elapsed.as_secs_f64())]),
            tool_version: TOOL_VERSION.to_string(),
        }
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }

    /// Two aligned columns: dotted path and value. Arrays of scalars are
    /// joined on one row.
    pub fn to_table(&self) -> String {
        let mut rows = vec![
            ("command".to_string(), self.command.clone()),
            ("tool_version".to_string(), self.tool_version.clone()),
        ];
        flatten("inputs", &self.inputs, &mut rows);
        flatten("outputs", &self.outputs, &mut rows);
        for (k, v) in &self.timings {
            rows.push((format!("timings.{k}"), format!("{v:.3}s")));
        }
        let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        rows.iter().map(|(k, v)| format!("{k:<width$}  {v}\n")).collect()
    }
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("null".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        _ => None,
    }
}

fn flatten(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
    match v {
        Value::Object(map) => {
            for (k, child) in map {
                flatten(&format!("{prefix}.{k}"), child, out);
            }
        }
        Value::Array(items) => {
            let scalars: Option<Vec<String>> = items.iter().map(scalar).collect();
            match scalars {
                Some(s) => out.push((prefix.to_string(), format!("[{}]", s.join(", ")))),
                None => {
                    for (i, child) in items.iter().enumerate() {
                        flatten(&format!("{prefix}[{i}]"), child, out);
                    }
                }
            }
        }
        other => out.push((prefix.to_string(), scalar(other).unwrap_or_default())),
    }
}
