//! Report envelope shared by every command.

use serde::Serialize;
use serde_json::Value;

pub const SCHEMA: &str = "stardom/1";
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Verified,
    Refuted,
    Unknown,
    Error,
}

impl Status {
    /// 0 verified/found, 1 refuted/none, 2 usage or internal error,
    /// 3 budget exhausted.
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Verified => 0,
            Status::Refuted => 1,
            Status::Error => 2,
            Status::Unknown => 3,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ReportEnvelope {
    pub schema: &'static str,
    pub tool_version: &'static str,
    pub command: Vec<String>,
    pub timestamp: u64,
    pub status: Status,
    pub errata: Vec<String>,
    pub result: Value,
}

impl ReportEnvelope {
    pub fn new(command: Vec<String>, timestamp: u64, status: Status, result: Value) -> Self {
        ReportEnvelope {
            schema: SCHEMA,
            tool_version: TOOL_VERSION,
            command,
            timestamp,
            status,
            errata: Vec::new(),
            result,
        }
    }

    pub fn with_errata(mut self, notes: &[&str]) -> Self {
        self.errata = notes.iter().map(|s| s.to_string()).collect();
        self
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

/// Top-level keys every envelope carries, for schema checks.
pub const ENVELOPE_KEYS: [&str; 7] = ["schema", "tool_version", "command", "timestamp", "status", "errata", "result"];

/// Checks that `v` has the envelope shape.
pub fn validate_envelope(v: &Value) -> Result<(), String> {
    let obj = v.as_object().ok_or("envelope is not an object")?;
    for key in ENVELOPE_KEYS {
        if !obj.contains_key(key) {
            return Err(format!("missing key {key:?}"));
        }
    }
    if obj["schema"] != SCHEMA {
        return Err(format!("schema is {}, expected {SCHEMA}", obj["schema"]));
    }
    match obj["status"].as_str() {
        Some("verified" | "refuted" | "unknown" | "error") => {}
        _ => return Err("bad status".into()),
    }
    if !obj["errata"].is_array() || !obj["command"].is_array() || !obj["timestamp"].is_u64() {
        return Err("bad field types".into());
    }
    Ok(())
}
