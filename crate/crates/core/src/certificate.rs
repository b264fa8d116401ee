//! JSON certificates recording what was checked, with which inputs, and
//! whether it passed.

use serde::{Deserialize, Serialize};
use serde_json::Value;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub schema_version: u32,
    pub command: String,
    pub inputs: Value,
    pub results: Value,
    pub pass: bool,
    /// Names of failed sub-checks.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub failures: Vec<String>,
    /// RFC 3339; the only field allowed to differ between identical runs.
    pub timestamp: String,
    pub tool_version: String,
}

impl Certificate {
    pub fn new(command: &str, inputs: Value, results: Value, failures: Vec<String>, timestamp: String) -> Self {
        Self {
            schema_version: SCHEMA_VERSION,
            command: command.to_string(),
            inputs,
            results,
            pass: failures.is_empty(),
            failures,
            timestamp,
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
        }
    }

    /// The certificate as JSON with the timestamp blanked, for comparing
    /// runs.
    pub fn canonical_json(&self) -> String {
        let mut c = self.clone();
        c.timestamp = String::new();
        serde_json::to_string(&c).expect("certificate serializes")
    }

    /// Checks the fields a reader relies on.
    pub fn validate(value: &Value) -> Result<Certificate, String> {
        let c: Certificate = serde_json::from_value(value.clone()).map_err(|e| e.to_string())?;
        if c.schema_version != SCHEMA_VERSION {
            return Err(format!("unsupported schema version {}", c.schema_version));
        }
        if c.pass != c.failures.is_empty() {
            return Err("pass flag disagrees with the failure list".into());
        }
        Ok(c)
    }
}
