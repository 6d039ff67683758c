use serde::{Deserialize, Serialize};
use serde_json::Value;
use sha2::{Digest, Sha256};
use std::fmt::Write as _;

pub const SCHEMA_VERSION: u32 = 1;
pub const TOOL: &str = "unigraph";

/// Process exit codes.
pub mod exit {
    pub const CERTIFIED: i32 = 0;
    pub const OK: i32 = 0;
    pub const EXCLUDED: i32 = 1;
    pub const UNDECIDED: i32 = 2;
    pub const USAGE: i32 = 3;
    pub const CAPACITY: i32 = 4;
}

/// What one invocation did. Everything except `timing_ms` is a function of
/// the arguments and the input bytes.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub schema: u32,
    pub tool: String,
    pub version: String,
    pub command: String,
    pub args: Vec<String>,
    pub seed: u64,
    /// `sha256:<hex>` of the input file, when there is one.
    pub input_digest: Option<String>,
    pub exit_code: i32,
    pub timing_ms: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub result: Option<Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

pub fn digest(bytes: &[u8]) -> String {
    let hash = Sha256::digest(bytes);
    let mut hex = String::with_capacity(7 + 64);
    hex.push_str("sha256:");
    for b in hash {
        write!(hex, "{b:02x}").unwrap();
    }
    hex
}

impl RunReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports are plain data");
        s.push('\n');
        s
    }

    /// One `key: value` line per header field and per top-level result
    /// field; nested values are printed as compact JSON.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "{} {} {} (schema {})", self.tool, self.version, self.command, self.schema).unwrap();
        writeln!(out, "seed: {}", self.seed).unwrap();
        if let Some(d) = &self.input_digest {
            writeln!(out, "input: {d}").unwrap();
        }
        writeln!(out, "exit: {}", self.exit_code).unwrap();
        writeln!(out, "time: {:.1} ms", self.timing_ms).unwrap();
        if let Some(e) = &self.error {
            writeln!(out, "error: {e}").unwrap();
        }
        if let Some(Value::Object(map)) = &self.result {
            for (k, v) in map {
                match v {
                    Value::String(s) => writeln!(out, "{k}: {s}").unwrap(),
                    _ => writeln!(out, "{k}: {v}").unwrap(),
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digest_of_empty_input() {
        assert_eq!(
            digest(b""),
            "sha256:e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855"
        );
    }
}
