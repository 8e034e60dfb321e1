//! Machine-readable run reports.

use std::collections::BTreeMap;

use serde::Serialize;

/// One verification line inside a report.
#[derive(Debug, Clone, Serialize)]
pub struct CheckLine {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// Record of one command invocation. Field order is fixed and map keys are
/// sorted, so serialization is deterministic apart from the timing field.
#[derive(Debug, Serialize)]
pub struct RunReport {
    pub command: String,
    pub inputs: BTreeMap<String, String>,
    pub outputs: BTreeMap<String, String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub steps: Option<u64>,
    pub checks: Vec<CheckLine>,
    pub all_passed: bool,
    pub elapsed_ms: u128,
}

impl RunReport {
    pub fn new(command: &str) -> Self {
        RunReport {
            command: command.to_string(),
            inputs: BTreeMap::new(),
            outputs: BTreeMap::new(),
            steps: None,
            checks: Vec::new(),
            all_passed: true,
            elapsed_ms: 0,
        }
    }

    pub fn input(&mut self, key: &str, value: impl ToString) -> &mut Self {
        self.inputs.insert(key.to_string(), value.to_string());
        self
    }

    pub fn output(&mut self, key: &str, value: impl ToString) -> &mut Self {
        self.outputs.insert(key.to_string(), value.to_string());
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}
