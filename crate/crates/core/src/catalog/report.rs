use std::fmt::{self, Display};

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckKind {
    /// Recomputed here.
    Computed,
    /// Stated in the literature and recorded without recomputation.
    PaperAsserted,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckStatus {
    Pass,
    Fail,
    /// The bounds in force were too small to decide.
    Inconclusive,
    /// A precondition could not be confirmed, so nothing was concluded.
    Unverified,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub id: String,
    pub kind: CheckKind,
    pub status: CheckStatus,
    pub claim: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub title: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(title: impl Into<String>) -> Report {
        Report { title: title.into(), checks: Vec::new() }
    }

    pub fn push(
        &mut self,
        id: &str,
        kind: CheckKind,
        status: CheckStatus,
        claim: &str,
        expected: String,
        actual: String,
    ) {
        self.checks.push(Check { id: id.to_string(), kind, status, claim: claim.to_string(), expected, actual });
    }

    /// A computed equality check.
    pub fn expect<T: PartialEq + Display>(&mut self, id: &str, claim: &str, expected: T, actual: T) {
        let status = if expected == actual { CheckStatus::Pass } else { CheckStatus::Fail };
        self.push(id, CheckKind::Computed, status, claim, expected.to_string(), actual.to_string());
    }

    /// A computed check whose computation itself failed.
    pub fn errored(&mut self, id: &str, claim: &str, expected: impl Display, err: impl Display) {
        self.push(id, CheckKind::Computed, CheckStatus::Fail, claim, expected.to_string(), format!("error: {err}"));
    }

    pub fn asserted(&mut self, id: &str, claim: &str) {
        self.push(id, CheckKind::PaperAsserted, CheckStatus::Unverified, claim, String::new(), String::new());
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    /// True iff every computed check passed.
    pub fn passed(&self) -> bool {
        self.computed().all(|c| c.status == CheckStatus::Pass)
    }

    pub fn computed(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.kind == CheckKind::Computed)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.computed().find(|c| c.status != CheckStatus::Pass)
    }

    pub fn get(&self, id: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.id == id)
    }
}

impl Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CheckStatus::Pass => "PASS",
            CheckStatus::Fail => "FAIL",
            CheckStatus::Inconclusive => "INCONCLUSIVE",
            CheckStatus::Unverified => "UNVERIFIED",
        };
        f.pad(s)
    }
}

impl Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.title)?;
        for c in &self.checks {
            match c.kind {
                CheckKind::Computed => {
                    writeln!(f, "  [{:<12}] {:<34} expected {:<14} got {}", c.status, c.id, c.expected, c.actual)?
                }
                CheckKind::PaperAsserted => writeln!(f, "  [ASSERTED    ] {:<34} {}", c.id, c.claim)?,
            }
        }
        Ok(())
    }
}
