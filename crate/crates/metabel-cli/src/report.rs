//! Run reports: every command emits one to stderr with the echoed command
//! line, counts, timing, and the pass/fail record of each assertion it made.

use serde_json::{Value, json};
use std::collections::BTreeMap;

pub struct Report {
    command: String,
    counts: BTreeMap<String, Value>,
    assertions: Vec<(String, bool, Option<String>)>,
    artifacts: Vec<String>,
    timing_ms: u128,
}

impl Report {
    pub fn new(command: String) -> Self {
        Report {
            command,
            counts: BTreeMap::new(),
            assertions: Vec::new(),
            artifacts: Vec::new(),
            timing_ms: 0,
        }
    }

    pub fn count(&mut self, key: &str, value: impl Into<Value>) {
        self.counts.insert(key.to_string(), value.into());
    }

    /// Record an assertion outcome and hand the verdict back to the caller.
    pub fn assert_that(&mut self, name: &str, pass: bool) -> bool {
        self.assertions.push((name.to_string(), pass, None));
        pass
    }

    pub fn fail(&mut self, name: &str, detail: String) {
        self.assertions.push((name.to_string(), false, Some(detail)));
    }

    pub fn artifact(&mut self, path: &std::path::Path) {
        self.artifacts.push(path.display().to_string());
    }

    pub fn set_timing(&mut self, ms: u128) {
        self.timing_ms = ms;
    }

    pub fn all_pass(&self) -> bool {
        self.assertions.iter().all(|(_, pass, _)| *pass)
    }

    pub fn to_json(&self) -> Value {
        let assertions: Vec<Value> = self
            .assertions
            .iter()
            .map(|(name, pass, detail)| match detail {
                Some(d) => json!({"name": name, "pass": pass, "detail": d}),
                None => json!({"name": name, "pass": pass}),
            })
            .collect();
        json!({
            "command": self.command,
            "counts": self.counts,
            "timingMs": self.timing_ms,
            "assertions": assertions,
            "artifacts": self.artifacts,
        })
    }

    /// Print the report to stderr (stdout is reserved for artifacts).
    pub fn emit(&self) {
        eprintln!("{}", serde_json::to_string_pretty(&self.to_json()).expect("report is plain data"));
    }
}
