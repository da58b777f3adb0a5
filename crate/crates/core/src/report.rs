//! Structured results of replaying a claim.

use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
            CheckStatus::Skipped => "skipped",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub claim: String,
    pub status: CheckStatus,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub entry: String,
    pub checks: Vec<Check>,
    pub wall_time_ms: f64,
}

impl VerificationReport {
    pub fn new(entry: impl Into<String>) -> Self {
        VerificationReport { entry: entry.into(), checks: Vec::new(), wall_time_ms: 0.0 }
    }

    pub fn push(&mut self, claim: impl Into<String>, status: CheckStatus, detail: impl Into<String>) {
        self.checks.push(Check { claim: claim.into(), status, detail: detail.into() });
    }

    /// Records a pass or fail depending on `ok`.
    pub fn check(&mut self, claim: impl Into<String>, ok: bool, detail: impl Into<String>) -> bool {
        let status = if ok { CheckStatus::Pass } else { CheckStatus::Fail };
        self.push(claim, status, detail);
        ok
    }

    pub fn skip(&mut self, claim: impl Into<String>, detail: impl Into<String>) {
        self.push(claim, CheckStatus::Skipped, detail);
    }

    /// Appends another report's checks, prefixing each claim.
    pub fn absorb(&mut self, prefix: &str, other: VerificationReport) {
        for c in other.checks {
            let claim = if prefix.is_empty() { c.claim } else { format!("{prefix}: {}", c.claim) };
            self.checks.push(Check { claim, ..c });
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != CheckStatus::Fail)
    }

    pub fn count(&self, status: CheckStatus) -> usize {
        self.checks.iter().filter(|c| c.status == status).count()
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == CheckStatus::Fail)
    }

    /// Copy with the timing field zeroed, for reproducibility comparisons.
    pub fn without_timing(&self) -> Self {
        VerificationReport { wall_time_ms: 0.0, ..self.clone() }
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        writeln!(f, "{} [{verdict}] ({:.1} ms)", self.entry, self.wall_time_ms)?;
        for c in &self.checks {
            write!(f, "  {:<7} {}", c.status, c.claim)?;
            if !c.detail.is_empty() {
                write!(f, ": {}", c.detail)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
