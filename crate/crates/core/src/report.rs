//! Check outcomes and the JSON report schema.

use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::ring::Caps;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    /// The premise never held on this instance.
    Vacuous,
    /// The subspace is empty; the check ran but the instance is a boundary case.
    Degenerate,
    /// Outside the configured caps.
    Skipped,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Vacuous => "vacuous",
            Verdict::Degenerate => "degenerate",
            Verdict::Skipped => "skipped",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Instance {
    pub ring: String,
    #[serde(rename = "Y")]
    pub y: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub id: String,
    pub instance: Instance,
    pub verdict: Verdict,
    pub witness: Option<Value>,
}

impl CheckReport {
    pub fn new(id: &str, instance: Instance, verdict: Verdict, witness: Option<Value>) -> CheckReport {
        CheckReport { id: id.to_string(), instance, verdict, witness }
    }

    pub fn is_failure(&self) -> bool {
        self.verdict == Verdict::Fail
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub vacuous: usize,
    pub degenerate: usize,
    pub skipped: usize,
}

impl Summary {
    pub fn of(results: &[CheckReport]) -> Summary {
        let mut s = Summary::default();
        for r in results {
            match r.verdict {
                Verdict::Pass => s.pass += 1,
                Verdict::Fail => s.fail += 1,
                Verdict::Vacuous => s.vacuous += 1,
                Verdict::Degenerate => s.degenerate += 1,
                Verdict::Skipped => s.skipped += 1,
            }
        }
        s
    }

    pub fn total(&self) -> usize {
        self.pass + self.fail + self.vacuous + self.degenerate + self.skipped
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunInfo {
    pub seed: u64,
    pub caps: Caps,
}

/// A documented observation that is not a verdict: alternative readings of a
/// statement, or the outcome of an exploratory search.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Note {
    pub id: String,
    pub text: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub data: Option<Value>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub run: RunInfo,
    pub results: Vec<CheckReport>,
    pub summary: Summary,
    #[serde(default)]
    pub notes: Vec<Note>,
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckReport> {
        self.results.iter().filter(|r| r.is_failure())
    }

    /// Fixed-width text table: one line per result, then the summary.
    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let w_id = self.results.iter().map(|r| r.id.len()).max().unwrap_or(2).max(2);
        let w_ring = self.results.iter().map(|r| r.instance.ring.len()).max().unwrap_or(4).max(4);
        let w_y = self.results.iter().map(|r| r.instance.y.len()).max().unwrap_or(1).max(1);
        out.push_str(&format!("{:w_id$}  {:w_ring$}  {:w_y$}  verdict     witness\n", "id", "ring", "Y"));
        for r in &self.results {
            let witness = r.witness.as_ref().map(|w| w.to_string()).unwrap_or_default();
            out.push_str(&format!(
                "{:w_id$}  {:w_ring$}  {:w_y$}  {:10}  {}\n",
                r.id,
                r.instance.ring,
                r.instance.y,
                r.verdict.to_string(),
                witness
            ));
        }
        let s = &self.summary;
        out.push_str(&format!(
            "summary: pass={} fail={} vacuous={} degenerate={} skipped={}\n",
            s.pass, s.fail, s.vacuous, s.degenerate, s.skipped
        ));
        for n in &self.notes {
            out.push_str(&format!("note {}: {}\n", n.id, n.text));
        }
        out
    }
}

/// Folds many sub-case outcomes into one verdict for an instance.
#[derive(Debug, Default)]
pub struct Tally {
    pub hits: usize,
    pub failure: Option<Value>,
}

impl Tally {
    /// Records one sub-case whose premise held.
    pub fn check(&mut self, ok: bool, witness: impl FnOnce() -> Value) {
        self.hits += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(witness());
        }
    }

    pub fn fail(&mut self, witness: Value) {
        self.check(false, || witness);
    }

    /// Fail beats everything; an empty subspace is degenerate; otherwise the
    /// verdict depends on whether any premise was met.
    pub fn verdict(&self, degenerate: bool) -> Verdict {
        if self.failure.is_some() {
            Verdict::Fail
        } else if degenerate {
            Verdict::Degenerate
        } else if self.hits == 0 {
            Verdict::Vacuous
        } else {
            Verdict::Pass
        }
    }

    pub fn into_report(self, id: &str, instance: Instance, degenerate: bool, vacuous_note: &str) -> CheckReport {
        let verdict = self.verdict(degenerate);
        let witness = match verdict {
            Verdict::Fail => self.failure,
            Verdict::Vacuous => Some(Value::String(format!("premise never held: {vacuous_note}"))),
            _ => None,
        };
        CheckReport::new(id, instance, verdict, witness)
    }
}
