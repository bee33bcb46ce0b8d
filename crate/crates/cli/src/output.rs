//! Structured command output.
//!
//! Every command renders either human-ordered text or a JSON object with
//! the fixed schema `{command, params, result, notes}`. All exact values
//! are string-rendered in their canonical text formats, and the field and
//! key ordering is deterministic, so parsing an emitted object and
//! re-rendering it is byte-identical.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct JsonOutput {
    pub command: String,
    pub params: BTreeMap<String, String>,
    pub result: serde_json::Value,
    pub notes: Vec<String>,
}

impl JsonOutput {
    pub fn new(command: &str) -> Self {
        JsonOutput {
            command: command.to_string(),
            params: BTreeMap::new(),
            result: serde_json::Value::Null,
            notes: Vec::new(),
        }
    }

    pub fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.params.insert(key.to_string(), value.to_string());
        self
    }

    pub fn result(mut self, value: serde_json::Value) -> Self {
        self.result = value;
        self
    }

    pub fn note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    pub fn render(&self) -> String {
        serde_json::to_string_pretty(self).expect("output schema serializes")
    }
}

/// Helper for `result` objects whose values are string-rendered exact
/// values under deterministic (sorted) keys.
pub fn string_map(pairs: &[(&str, String)]) -> serde_json::Value {
    let map: serde_json::Map<String, serde_json::Value> = pairs
        .iter()
        .map(|(k, v)| (k.to_string(), serde_json::Value::String(v.clone())))
        .collect();
    serde_json::Value::Object(map)
}

pub fn string_list(items: impl IntoIterator<Item = String>) -> serde_json::Value {
    serde_json::Value::Array(
        items
            .into_iter()
            .map(serde_json::Value::String)
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip_is_byte_identical() {
        let out = JsonOutput::new("pell")
            .param("R", "2")
            .param("n", "7")
            .result(string_map(&[("value", "169".to_string())]))
            .note("sample");
        let rendered = out.render();
        let parsed: JsonOutput = serde_json::from_str(&rendered).unwrap();
        assert_eq!(parsed.render(), rendered);
    }
}
