//! Machine-readable check reports.
//!
//! Reports serialize deterministically: fields in declaration order, maps
//! sorted by key, and no timings.

use serde::Serialize;
use serde_json::Value;

pub const SCHEMA: u32 = 1;

/// Outcome of a single check.
#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct Check {
    pub name: String,
    /// The mathematical statement this check certifies.
    pub statement: String,
    pub parameters: Value,
    pub passed: bool,
    /// Non-gating checks are reported but never fail a run.
    pub gating: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Value>,
}

impl Check {
    pub fn new(
        name: impl Into<String>,
        statement: impl Into<String>,
        parameters: Value,
        passed: bool,
    ) -> Self {
        Check {
            name: name.into(),
            statement: statement.into(),
            parameters,
            passed,
            gating: true,
            witness: None,
            counterexample: None,
        }
    }

    pub fn with_witness(mut self, w: Value) -> Self {
        self.witness = Some(w);
        self
    }

    pub fn with_counterexample(mut self, c: Value) -> Self {
        self.counterexample = Some(c);
        self
    }

    /// Attaches `detail` as witness on success, as counterexample on failure.
    pub fn with_detail(self, detail: Value) -> Self {
        if self.passed {
            self.with_witness(detail)
        } else {
            self.with_counterexample(detail)
        }
    }

    pub fn non_gating(mut self) -> Self {
        self.gating = false;
        self
    }

    /// False only for a failed gating check.
    pub fn ok(&self) -> bool {
        self.passed || !self.gating
    }
}

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct Report {
    pub schema: u32,
    pub command: String,
    pub config: Value,
    pub passed: bool,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub result: Option<Value>,
}

impl Report {
    pub fn new(command: impl Into<String>, config: Value) -> Self {
        Report {
            schema: SCHEMA,
            command: command.into(),
            config,
            passed: true,
            checks: Vec::new(),
            result: None,
        }
    }

    pub fn push(&mut self, check: Check) {
        self.passed &= check.ok();
        self.checks.push(check);
    }

    pub fn extend(&mut self, checks: impl IntoIterator<Item = Check>) {
        for c in checks {
            self.push(c);
        }
    }

    pub fn set_result(&mut self, result: Value) {
        self.result = Some(result);
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    /// One line per check: `PASS name: statement`.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for c in &self.checks {
            let tag = match (c.passed, c.gating) {
                (true, _) => "PASS",
                (false, true) => "FAIL",
                (false, false) => "INFO",
            };
            s.push_str(&format!("{tag} {}: {}\n", c.name, c.statement));
        }
        s
    }
}
