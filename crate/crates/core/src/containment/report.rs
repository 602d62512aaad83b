use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::ring::Polynomial;

#[derive(Clone, Debug)]
pub enum Verdict {
    Holds,
    /// An element of the left side that is not in the right side.
    Fails(Polynomial),
    PreconditionUnmet(String),
    Inconclusive(String),
}

impl Verdict {
    pub fn name(&self) -> &'static str {
        match self {
            Verdict::Holds => "Holds",
            Verdict::Fails(_) => "Fails",
            Verdict::PreconditionUnmet(_) => "PreconditionUnmet",
            Verdict::Inconclusive(_) => "Inconclusive",
        }
    }

    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }
}

#[derive(Clone, Debug)]
pub struct ContainmentReport {
    /// Short identifier, e.g. `verify-A` or `audit-ii`.
    pub theorem: String,
    /// The containment in words, e.g. `I^(3) ⊆ m·I`.
    pub statement: String,
    pub ideal: String,
    pub params: BTreeMap<String, u64>,
    pub verdict: Verdict,
    pub millis: u64,
    pub note: Option<String>,
}

impl ContainmentReport {
    pub fn record(&self) -> ReportRecord {
        let (witness, reason) = match &self.verdict {
            Verdict::Holds => (None, None),
            Verdict::Fails(w) => (Some(w.to_string()), None),
            Verdict::PreconditionUnmet(r) | Verdict::Inconclusive(r) => (None, Some(r.clone())),
        };
        ReportRecord {
            theorem: self.theorem.clone(),
            statement: self.statement.clone(),
            ideal: self.ideal.clone(),
            params: self.params.clone(),
            verdict: self.verdict.name().to_string(),
            witness,
            reason,
            note: self.note.clone(),
            millis: self.millis,
        }
    }
}

impl fmt::Display for ContainmentReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} : {}", self.statement, self.verdict.name())?;
        match &self.verdict {
            Verdict::Fails(w) => write!(f, " (witness {w})")?,
            Verdict::PreconditionUnmet(r) | Verdict::Inconclusive(r) => write!(f, " ({r})")?,
            Verdict::Holds => {}
        }
        Ok(())
    }
}

/// Serialized form of a [`ContainmentReport`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRecord {
    pub theorem: String,
    pub statement: String,
    pub ideal: String,
    pub params: BTreeMap<String, u64>,
    pub verdict: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    pub millis: u64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub holds: usize,
    pub fails: usize,
    pub precondition_unmet: usize,
    pub inconclusive: usize,
}

impl Summary {
    pub fn of(reports: &[ContainmentReport]) -> Summary {
        let mut s = Summary { total: reports.len(), ..Summary::default() };
        for r in reports {
            match r.verdict {
                Verdict::Holds => s.holds += 1,
                Verdict::Fails(_) => s.fails += 1,
                Verdict::PreconditionUnmet(_) => s.precondition_unmet += 1,
                Verdict::Inconclusive(_) => s.inconclusive += 1,
            }
        }
        s
    }
}
