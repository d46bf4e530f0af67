//! Reproducible verification reports.
//!
//! Reports serialize to JSON with a stable field order and no wall-clock or
//! environment content, so a suite rerun with the same parameters produces a
//! byte-identical document.

use std::collections::BTreeMap;

use serde::Serialize;

#[derive(Debug, Clone, Serialize)]
pub struct CheckRecord {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lhs: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rhs: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub deviation: Option<f64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CaseRecord {
    pub label: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub point: Option<[String; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub skipped: Option<String>,
    pub checks: Vec<CheckRecord>,
}

impl CaseRecord {
    pub fn new(label: impl Into<String>) -> Self {
        Self { label: label.into(), point: None, skipped: None, checks: Vec::new() }
    }

    pub fn at_point(mut self, x: String, y: String) -> Self {
        self.point = Some([x, y]);
        self
    }

    pub fn skip(mut self, reason: impl Into<String>) -> Self {
        self.skipped = Some(reason.into());
        self
    }

    /// Records an exact equality check with both sides rendered.
    pub fn check_eq(&mut self, name: &str, lhs: String, rhs: String) {
        self.checks.push(CheckRecord {
            name: name.into(),
            passed: lhs == rhs,
            lhs: Some(lhs),
            rhs: Some(rhs),
            deviation: None,
        });
    }

    pub fn check_bool(&mut self, name: &str, passed: bool, detail: Option<String>) {
        self.checks.push(CheckRecord { name: name.into(), passed, lhs: detail, rhs: None, deviation: None });
    }

    /// Records a numeric comparison with an explicit deviation.
    pub fn check_dev(&mut self, name: &str, lhs: f64, rhs: f64, deviation: f64, tol: f64) {
        self.checks.push(CheckRecord {
            name: name.into(),
            passed: deviation <= tol,
            lhs: Some(format!("{lhs:.17e}")),
            rhs: Some(format!("{rhs:.17e}")),
            deviation: Some(deviation),
        });
    }
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct Summary {
    pub cases: u64,
    pub checks: u64,
    pub passed: u64,
    pub failed: u64,
    pub skipped: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub params: BTreeMap<String, String>,
    pub cases: Vec<CaseRecord>,
    pub summary: Summary,
}

impl VerificationReport {
    pub fn new(suite: impl Into<String>, params: BTreeMap<String, String>) -> Self {
        Self { suite: suite.into(), params, cases: Vec::new(), summary: Summary::default() }
    }

    pub fn push_case(&mut self, case: CaseRecord) {
        self.summary.cases += 1;
        if case.skipped.is_some() {
            self.summary.skipped += 1;
        }
        for check in &case.checks {
            self.summary.checks += 1;
            if check.passed {
                self.summary.passed += 1;
            } else {
                self.summary.failed += 1;
            }
        }
        self.cases.push(case);
    }

    pub fn failures(&self) -> u64 {
        self.summary.failed
    }

    pub fn to_json_pretty(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// Checks of a given name across all non-skipped cases.
    pub fn checks_named<'a>(&'a self, name: &'a str) -> impl Iterator<Item = &'a CheckRecord> {
        self.cases
            .iter()
            .flat_map(|c| c.checks.iter())
            .filter(move |c| c.name == name)
    }

    /// Largest recorded deviation among checks of the given name.
    pub fn max_deviation(&self, name: &str) -> Option<f64> {
        self.checks_named(name)
            .filter_map(|c| c.deviation)
            .fold(None, |acc, d| Some(acc.map_or(d, |a: f64| a.max(d))))
    }
}
