use std::fmt::Write as _;

use serde_json::{Map, Value};

use super::CliError;

/// Ordered key-value output, rendered as text or JSON with identical fields.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Report {
    entries: Vec<(String, Value)>,
    non_finite: Vec<String>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn num(&mut self, key: impl Into<String>, v: f64) -> &mut Self {
        let key = key.into();
        let value = match serde_json::Number::from_f64(v) {
            Some(n) => Value::Number(n),
            None => {
                self.non_finite.push(key.clone());
                Value::String(v.to_string())
            }
        };
        self.entries.push((key, value));
        self
    }

    pub fn int(&mut self, key: impl Into<String>, v: u64) -> &mut Self {
        self.entries.push((key.into(), Value::from(v)));
        self
    }

    pub fn text(&mut self, key: impl Into<String>, v: impl Into<String>) -> &mut Self {
        self.entries.push((key.into(), Value::String(v.into())));
        self
    }

    pub fn flag(&mut self, key: impl Into<String>, v: bool) -> &mut Self {
        self.entries.push((key.into(), Value::Bool(v)));
        self
    }

    pub fn get(&self, key: &str) -> Option<&Value> {
        self.entries.iter().find(|(k, _)| k == key).map(|(_, v)| v)
    }

    pub fn entries(&self) -> &[(String, Value)] {
        &self.entries
    }

    /// Fails if a numeric field was not finite.
    pub fn check(&self) -> Result<(), CliError> {
        match self.non_finite.first() {
            Some(k) => Err(CliError::Input(format!("report field '{k}' is not finite"))),
            None => Ok(()),
        }
    }

    pub fn to_json(&self) -> Value {
        Value::Object(self.entries.iter().cloned().collect::<Map<_, _>>())
    }

    pub fn to_text(&self) -> String {
        let width = self.entries.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        let mut out = String::new();
        for (k, v) in &self.entries {
            let shown = match v {
                Value::String(s) => s.clone(),
                other => other.to_string(),
            };
            let _ = writeln!(out, "{k:<width$}  {shown}");
        }
        out
    }

    pub fn render(&self, json: bool) -> String {
        if json {
            format!("{}\n", self.to_json())
        } else {
            self.to_text()
        }
    }
}
