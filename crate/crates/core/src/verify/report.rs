use std::collections::BTreeMap;
use std::time::Duration;

use serde::{Deserialize, Serialize};

use super::Scope;
use crate::wha::Conventions;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

/// The smallest failing case with both sides of the identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub case: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub check: String,
    pub scope: Scope,
    pub status: Status,
    pub cases: u64,
    pub failures: u64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub reason: Option<String>,
    pub conventions: Conventions,
    pub r: u32,
    pub dim: usize,
    #[serde(skip)]
    pub duration: Duration,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub r: u32,
    pub dim: usize,
    pub conventions: Conventions,
    pub checks: Vec<CheckResult>,
}

#[derive(Serialize)]
struct Payload<'a> {
    r: u32,
    dim: usize,
    conventions: Conventions,
    checks: &'a [CheckResult],
    #[serde(skip_serializing_if = "Option::is_none")]
    timing_ms: Option<BTreeMap<&'a str, u128>>,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn get(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.check == name)
    }

    /// Deterministic JSON: identical inputs give identical bytes.
    pub fn payload_json(&self) -> String {
        self.render(false)
    }

    /// Payload plus per-check timings.
    pub fn to_json(&self) -> String {
        self.render(true)
    }

    fn render(&self, timing: bool) -> String {
        let timing_ms = timing.then(|| {
            self.checks
                .iter()
                .map(|c| (c.check.as_str(), c.duration.as_millis()))
                .collect()
        });
        let payload = Payload {
            r: self.r,
            dim: self.dim,
            conventions: self.conventions,
            checks: &self.checks,
            timing_ms,
        };
        serde_json::to_string_pretty(&payload).expect("report serializes")
    }

    /// One line per check.
    pub fn summary_lines(&self) -> Vec<String> {
        self.checks
            .iter()
            .map(|c| {
                let status = match c.status {
                    Status::Pass => "PASS",
                    Status::Fail => "FAIL",
                    Status::Skipped => "SKIP",
                };
                let mut line = format!("{status} {} ({} cases)", c.check, c.cases);
                if let Some(w) = &c.witness {
                    line.push_str(&format!(" at {}: {} != {}", w.case, w.lhs, w.rhs));
                }
                if let Some(r) = &c.reason {
                    line.push_str(&format!(" [{r}]"));
                }
                line
            })
            .collect()
    }
}
