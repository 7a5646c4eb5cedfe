use std::collections::BTreeMap;
use std::fmt::Display;
use std::time::Instant;

use serde::Serialize;

use crate::error::Error;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", content = "reason", rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip(String),
}

impl Status {
    pub fn label(&self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skip(_) => "skip",
        }
    }
}

/// Outcome of one verified claim: measured values against expected ones.
///
/// `status` is `Pass` exactly when every expected key is measured with an
/// equal value, unless the check was skipped or errored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub check_id: String,
    pub status: Status,
    pub measured: BTreeMap<String, String>,
    pub expected: BTreeMap<String, String>,
    /// Hypotheses taken from the literature rather than re-proved.
    pub assumptions: Vec<String>,
    pub error: Option<String>,
    pub runtime_ms: u128,
    pub seed: u64,
}

impl Report {
    pub fn new(check_id: impl Into<String>, seed: u64) -> Report {
        Report {
            check_id: check_id.into(),
            status: Status::Fail,
            measured: BTreeMap::new(),
            expected: BTreeMap::new(),
            assumptions: Vec::new(),
            error: None,
            runtime_ms: 0,
            seed,
        }
    }

    pub fn skipped(check_id: impl Into<String>, seed: u64, reason: impl Into<String>) -> Report {
        let mut r = Report::new(check_id, seed);
        r.status = Status::Skip(reason.into());
        r
    }

    pub fn measure(&mut self, key: &str, value: impl Display) -> &mut Self {
        self.measured.insert(key.to_string(), value.to_string());
        self
    }

    pub fn expect(&mut self, key: &str, value: impl Display) -> &mut Self {
        self.expected.insert(key.to_string(), value.to_string());
        self
    }

    /// Records both sides of one comparison.
    pub fn compare(&mut self, key: &str, measured: impl Display, expected: impl Display) -> &mut Self {
        self.measure(key, measured).expect(key, expected)
    }

    pub fn assume(&mut self, text: &str) -> &mut Self {
        self.assumptions.push(text.to_string());
        self
    }

    /// Keys whose measured value is missing or differs from the expected one.
    pub fn mismatches(&self) -> Vec<&str> {
        self.expected
            .iter()
            .filter(|(k, v)| self.measured.get(*k) != Some(*v))
            .map(|(k, _)| k.as_str())
            .collect()
    }

    /// Sets the status from the comparison, unless skipped.
    pub fn finish(mut self) -> Report {
        if !matches!(self.status, Status::Skip(_)) {
            self.status = if self.error.is_none() && !self.expected.is_empty() && self.mismatches().is_empty() {
                Status::Pass
            } else {
                Status::Fail
            };
        }
        self
    }

    pub fn is_pass(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn is_fail(&self) -> bool {
        self.status == Status::Fail
    }

    /// One JSON object per line with a fixed key order: `checkId`, `status`,
    /// `reason`, `measured.*`, `expected.*`, `assumption`, `error`,
    /// `runtimeMs`, `seed`.
    pub fn to_line(&self) -> String {
        self.to_line_inner(true)
    }

    /// [`Report::to_line`] without `runtimeMs`, for determinism comparisons.
    pub fn to_line_without_timing(&self) -> String {
        self.to_line_inner(false)
    }

    fn to_line_inner(&self, timing: bool) -> String {
        let q = |s: &str| serde_json::to_string(s).expect("string serializes");
        let mut fields = vec![
            format!("\"checkId\":{}", q(&self.check_id)),
            format!("\"status\":{}", q(self.status.label())),
        ];
        if let Status::Skip(reason) = &self.status {
            fields.push(format!("\"reason\":{}", q(reason)));
        }
        for (prefix, map) in [("measured", &self.measured), ("expected", &self.expected)] {
            for (k, v) in map {
                fields.push(format!("{}:{}", q(&format!("{prefix}.{k}")), q(v)));
            }
        }
        for a in &self.assumptions {
            fields.push(format!("\"assumption\":{}", q(a)));
        }
        if let Some(e) = &self.error {
            fields.push(format!("\"error\":{}", q(e)));
        }
        if timing {
            fields.push(format!("\"runtimeMs\":{}", self.runtime_ms));
        }
        fields.push(format!("\"seed\":{}", self.seed));
        format!("{{{}}}", fields.join(","))
    }
}

/// Runs a check body, turning errors into failed (or, for unsupported
/// inputs, skipped) reports and recording the runtime.
pub fn timed_check(check_id: &str, seed: u64, body: impl FnOnce(&mut Report) -> Result<(), Error>) -> Report {
    let start = Instant::now();
    let mut report = Report::new(check_id, seed);
    match body(&mut report) {
        Ok(()) => {}
        Err(Error::Unsupported(reason)) => report.status = Status::Skip(reason),
        Err(e) => report.error = Some(e.to_string()),
    }
    report.runtime_ms = start.elapsed().as_millis();
    report.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pass_requires_agreement_on_every_key() {
        let mut r = Report::new("x", 0);
        r.compare("a", 1, 1).compare("b", 2, 3);
        assert!(r.clone().finish().is_fail());
        r.measure("b", 3);
        assert!(r.finish().is_pass());
    }

    #[test]
    fn line_has_stable_order() {
        let mut r = Report::new("T1.01", 4);
        r.compare("degree", 6, 6);
        let line = r.finish().to_line_without_timing();
        assert_eq!(
            line,
            r#"{"checkId":"T1.01","status":"pass","measured.degree":"6","expected.degree":"6","seed":4}"#
        );
    }

    #[test]
    fn unsupported_becomes_skip() {
        let r = timed_check("T1.13", 0, |_| Err(Error::Unsupported("Th".into())));
        assert_eq!(r.status, Status::Skip("Th".into()));
    }
}
