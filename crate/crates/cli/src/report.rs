//! The run report and its two renderings.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::Value;

pub const SCHEMA: u32 = 1;

/// Everything one invocation produced. The JSON form is the machine format;
/// key names are part of the interface.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct RunReport {
    pub schema: u32,
    /// Arguments after the program name.
    pub command: Vec<String>,
    pub input: Option<InputFingerprint>,
    pub ok: bool,
    pub outputs: Value,
    pub assertions: Vec<Assertion>,
    pub error: Option<ReportError>,
    pub timings: Timings,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct InputFingerprint {
    pub path: String,
    pub sha256: String,
    pub bytes: usize,
}

/// A check made on the result before reporting it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Assertion {
    pub name: String,
    pub passed: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum ErrorKind {
    /// Bad arguments, unreadable or malformed input, unmet preconditions.
    Input,
    /// A result failed one of its own checks.
    Internal,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportError {
    pub kind: ErrorKind,
    pub message: String,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Timings {
    pub parse_micros: u64,
    pub compute_micros: u64,
}

impl RunReport {
    pub fn exit_code(&self) -> i32 {
        match &self.error {
            Some(e) if e.kind == ErrorKind::Input => 2,
            Some(_) => 1,
            None if self.assertions.iter().all(|a| a.passed) => 0,
            None => 1,
        }
    }

    /// Human-readable form of the outputs and assertions.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        if !self.outputs.is_null() {
            render(&mut out, &self.outputs, 0);
        }
        for a in &self.assertions {
            writeln!(out, "check {}: {}", a.name, if a.passed { "ok" } else { "FAILED" }).unwrap();
        }
        out
    }
}

fn is_scalar(v: &Value) -> bool {
    !matches!(v, Value::Object(_) | Value::Array(_))
}

fn inline(v: &Value) -> String {
    match v {
        Value::Null => "none".into(),
        Value::String(s) => s.clone(),
        Value::Array(items) => {
            let items: Vec<String> = items.iter().map(inline).collect();
            format!("[{}]", items.join(" "))
        }
        other => other.to_string(),
    }
}

fn render(out: &mut String, value: &Value, indent: usize) {
    let pad = " ".repeat(indent);
    match value {
        Value::Object(map) => {
            for (k, v) in map {
                let flat = match v {
                    Value::Array(items) => items.iter().all(is_scalar) || items.iter().all(|i| i.is_array()),
                    v => is_scalar(v),
                };
                if flat {
                    writeln!(out, "{pad}{k}: {}", inline(v)).unwrap();
                } else {
                    writeln!(out, "{pad}{k}:").unwrap();
                    render(out, v, indent + 2);
                }
            }
        }
        Value::Array(items) => {
            for item in items {
                let mut s = String::new();
                render(&mut s, item, indent + 2);
                let body = s.strip_prefix(&format!("{pad}  ")).unwrap_or(&s);
                write!(out, "{pad}- {body}").unwrap();
            }
        }
        scalar => writeln!(out, "{pad}{}", inline(scalar)).unwrap(),
    }
}
