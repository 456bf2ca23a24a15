//! Structured pass/fail records shared by every verification routine.

use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::Value;

/// Outcome of one verification.
///
/// `counterexample` is present exactly when `passed` is false. Composite
/// checks carry their parts in `children`. `elapsed_ms` is the only
/// nondeterministic field and is set by callers that time a run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub check: String,
    pub instance: String,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Value>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub children: Vec<CheckReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl CheckReport {
    pub fn pass(check: impl Into<String>, instance: impl Into<String>) -> Self {
        CheckReport {
            check: check.into(),
            instance: instance.into(),
            passed: true,
            witness: None,
            counterexample: None,
            children: Vec::new(),
            elapsed_ms: None,
        }
    }

    pub fn fail(check: impl Into<String>, instance: impl Into<String>, counterexample: Value) -> Self {
        CheckReport {
            passed: false,
            counterexample: Some(counterexample),
            ..CheckReport::pass(check, instance)
        }
    }

    /// Pass if `counterexample` is `None`, fail with it otherwise.
    pub fn from_outcome(check: impl Into<String>, instance: impl Into<String>, counterexample: Option<Value>) -> Self {
        match counterexample {
            None => CheckReport::pass(check, instance),
            Some(cx) => CheckReport::fail(check, instance, cx),
        }
    }

    /// Passes iff every child passes; on failure the counterexample lists the failing children.
    pub fn aggregate(check: impl Into<String>, instance: impl Into<String>, children: Vec<CheckReport>) -> Self {
        let failed: Vec<Value> = children
            .iter()
            .filter(|c| !c.passed)
            .map(|c| Value::String(format!("{} [{}]", c.check, c.instance)))
            .collect();
        let mut report = if failed.is_empty() {
            CheckReport::pass(check, instance)
        } else {
            CheckReport::fail(check, instance, serde_json::json!({ "failed": failed }))
        };
        report.children = children;
        report
    }

    pub fn with_witness(mut self, witness: Value) -> Self {
        self.witness = Some(witness);
        self
    }

    /// Depth-first list of failing leaf checks.
    pub fn failures(&self) -> Vec<&CheckReport> {
        if self.passed {
            return Vec::new();
        }
        if self.children.is_empty() {
            return vec![self];
        }
        self.children.iter().flat_map(|c| c.failures()).collect()
    }

    pub fn count_leaves(&self) -> usize {
        if self.children.is_empty() {
            1
        } else {
            self.children.iter().map(|c| c.count_leaves()).sum()
        }
    }

    fn render(&self, f: &mut fmt::Formatter<'_>, depth: usize) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{:indent$}{status} {} [{}]", "", self.check, self.instance, indent = depth * 2)?;
        if let Some(ms) = self.elapsed_ms {
            write!(f, " ({ms} ms)")?;
        }
        writeln!(f)?;
        if let (Some(cx), true) = (&self.counterexample, self.children.is_empty()) {
            writeln!(f, "{:indent$}counterexample: {cx}", "", indent = depth * 2 + 2)?;
        }
        for child in &self.children {
            child.render(f, depth + 1)?;
        }
        Ok(())
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.render(f, 0)
    }
}
