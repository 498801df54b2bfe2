use std::collections::BTreeMap;
use std::time::Duration;

use serde::Serialize;

#[derive(Debug, Clone, Serialize)]
pub struct CheckLine {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reproducer: Option<String>,
}

impl CheckLine {
    pub fn pass(name: impl Into<String>) -> Self {
        CheckLine { name: name.into(), passed: true, witness: None, reproducer: None }
    }

    pub fn from_witness(name: impl Into<String>, witness: Option<String>, reproducer: impl FnOnce() -> String) -> Self {
        match witness {
            None => CheckLine::pass(name),
            Some(w) => CheckLine { name: name.into(), passed: false, witness: Some(w), reproducer: Some(reproducer()) },
        }
    }
}

/// The outcome of one invocation. Timing is kept out of the JSON form so reports are
/// byte-identical across runs.
#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct RunReport {
    pub command: String,
    pub parameters: BTreeMap<String, String>,
    pub results: serde_json::Value,
    pub check_outcomes: Vec<CheckLine>,
    #[serde(skip)]
    pub timing: Duration,
}

impl RunReport {
    pub fn new(command: &str) -> Self {
        RunReport {
            command: command.to_string(),
            parameters: BTreeMap::new(),
            results: serde_json::Value::Null,
            check_outcomes: Vec::new(),
            timing: Duration::ZERO,
        }
    }

    pub fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.parameters.insert(key.to_string(), value.to_string());
        self
    }

    pub fn passed(&self) -> bool {
        self.check_outcomes.iter().all(|c| c.passed)
    }

    pub fn json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn text(&self) -> String {
        let mut out = String::new();
        for c in &self.check_outcomes {
            out.push_str(&format!("{} {}\n", if c.passed { "PASS" } else { "FAIL" }, c.name));
            if let Some(w) = &c.witness {
                out.push_str(&format!("  witness: {w}\n"));
            }
            if let Some(r) = &c.reproducer {
                out.push_str(&format!("  reproduce: {r}\n"));
            }
        }
        let failed = self.check_outcomes.iter().filter(|c| !c.passed).count();
        out.push_str(&format!(
            "{}: {} checks, {failed} failed ({:.2?})\n",
            self.command,
            self.check_outcomes.len(),
            self.timing
        ));
        out
    }
}
