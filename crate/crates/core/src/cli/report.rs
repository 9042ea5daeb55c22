//! One report per run, rendered either as `key: value` lines or as a single
//! JSON document. Both renderings come from the same ordered field list.

use serde::Serialize;
use serde_json::{Map, Value};

pub const SCHEMA_VERSION: u64 = 1;

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Report {
    fields: Vec<(String, Value)>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        let mut r = Report::default();
        r.push("schema_version", SCHEMA_VERSION);
        r.push("command", command);
        r
    }

    pub fn push(&mut self, key: &str, value: impl Serialize) -> &mut Self {
        let value = serde_json::to_value(value).expect("report values serialize");
        match self.fields.iter_mut().find(|(k, _)| k == key) {
            Some(slot) => slot.1 = value,
            None => self.fields.push((key.to_string(), value)),
        }
        self
    }

    pub fn get(&self, key: &str) -> Option<&Value> {
        self.fields.iter().find(|(k, _)| k == key).map(|(_, v)| v)
    }

    pub fn to_json(&self) -> Value {
        Value::Object(self.fields.iter().cloned().collect::<Map<_, _>>())
    }

    /// `key: value` per line; arrays expand to `key[i]: value` lines, strings
    /// are written bare and everything else as compact JSON.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (k, v) in &self.fields {
            match v {
                Value::Array(items) if !items.is_empty() => {
                    for (i, item) in items.iter().enumerate() {
                        out.push_str(&format!("{k}[{i}]: {}\n", scalar_text(item)));
                    }
                }
                _ => out.push_str(&format!("{k}: {}\n", scalar_text(v))),
            }
        }
        out
    }

    /// Inverse of [`Report::to_text`].
    pub fn parse_text(text: &str) -> Option<Report> {
        let mut report = Report::default();
        for line in text.lines() {
            let (key, raw) = line.split_once(": ")?;
            let value = serde_json::from_str::<Value>(raw).unwrap_or_else(|_| Value::String(raw.to_string()));
            match key.split_once('[') {
                Some((base, _)) => match report.fields.iter_mut().find(|(k, _)| k == base) {
                    Some((_, Value::Array(items))) => items.push(value),
                    _ => report.fields.push((base.to_string(), Value::Array(vec![value]))),
                },
                None => report.fields.push((key.to_string(), value)),
            }
        }
        Some(report)
    }
}

fn scalar_text(v: &Value) -> String {
    match v {
        Value::String(s) if serde_json::from_str::<Value>(s).is_err() && !s.is_empty() => s.clone(),
        other => other.to_string(),
    }
}
