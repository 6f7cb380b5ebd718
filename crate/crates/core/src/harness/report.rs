use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::corpus::{CorpusEntry, SkippedEntry};
use super::rules::{Rule, RuleKind};
use crate::error::{Error, Result};
use crate::properties::Witness;

pub const REPORT_FORMAT: &str = "report v1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum RuleStatus {
    Pass {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        note: Option<String>,
    },
    Fail {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        witness: Option<Witness>,
        detail: String,
    },
    Vacuous,
    Skipped {
        reason: String,
    },
}

impl RuleStatus {
    pub fn label(&self) -> &'static str {
        match self {
            RuleStatus::Pass { .. } => "pass",
            RuleStatus::Fail { .. } => "fail",
            RuleStatus::Vacuous => "vacuous",
            RuleStatus::Skipped { .. } => "skipped",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RuleOutcome {
    pub ring: String,
    pub fingerprint: String,
    #[serde(flatten)]
    pub status: RuleStatus,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct StatusCounts {
    pub pass: usize,
    pub fail: usize,
    pub vacuous: usize,
    pub skipped: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RuleResult {
    pub id: String,
    pub description: String,
    pub kind: RuleKind,
    pub hypothesis: Vec<String>,
    pub conclusion: String,
    pub anchor: String,
    /// `fail` if any ring fails, else `pass` if any ring passes, else
    /// `skipped` if every applicable ring was skipped, else `vacuous` (this
    /// includes rules that apply to no ring at all).
    pub verdict: String,
    pub counts: StatusCounts,
    pub outcomes: Vec<RuleOutcome>,
}

impl RuleResult {
    pub(crate) fn new(rule: &Rule, outcomes: Vec<RuleOutcome>) -> Self {
        let mut counts = StatusCounts::default();
        for o in &outcomes {
            match o.status {
                RuleStatus::Pass { .. } => counts.pass += 1,
                RuleStatus::Fail { .. } => counts.fail += 1,
                RuleStatus::Vacuous => counts.vacuous += 1,
                RuleStatus::Skipped { .. } => counts.skipped += 1,
            }
        }
        let verdict = if counts.fail > 0 {
            "fail"
        } else if counts.pass > 0 {
            "pass"
        } else if counts.skipped > 0 && counts.vacuous == 0 {
            "skipped"
        } else {
            "vacuous"
        };
        Self {
            id: rule.id.into(),
            description: rule.description.into(),
            kind: rule.kind,
            hypothesis: rule.hypothesis.iter().map(|s| s.to_string()).collect(),
            conclusion: rule.conclusion.into(),
            anchor: rule.anchor.into(),
            verdict: verdict.into(),
            counts,
            outcomes,
        }
    }

    /// Outcomes that actually exercised the rule (not vacuous or skipped).
    pub fn exercised(&self) -> usize {
        self.counts.pass + self.counts.fail
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingSummary {
    pub name: String,
    pub order: usize,
    pub fingerprint: String,
}

impl RingSummary {
    pub fn of(entry: &CorpusEntry) -> Self {
        Self {
            name: entry.name.clone(),
            order: entry.ring.order(),
            fingerprint: entry.ring.fingerprint().to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RuleReport {
    pub format: String,
    pub corpus: Vec<RingSummary>,
    pub skipped_entries: Vec<SkippedEntry>,
    pub rules: Vec<RuleResult>,
}

impl RuleReport {
    pub fn new(corpus: Vec<RingSummary>, skipped_entries: Vec<SkippedEntry>, rules: Vec<RuleResult>) -> Self {
        Self {
            format: REPORT_FORMAT.into(),
            corpus,
            skipped_entries,
            rules,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let report: Self =
            serde_json::from_str(text).map_err(|e| Error::Format(format!("report: {e}")))?;
        if report.format != REPORT_FORMAT {
            return Err(Error::Format(format!(
                "expected `{REPORT_FORMAT}`, found `{}`",
                report.format
            )));
        }
        Ok(report)
    }

    pub fn rule(&self, id: &str) -> Option<&RuleResult> {
        self.rules.iter().find(|r| r.id == id)
    }

    /// Every failing (rule, outcome) pair in canonical order.
    pub fn failures(&self) -> impl Iterator<Item = (&RuleResult, &RuleOutcome)> {
        self.rules.iter().flat_map(|r| {
            r.outcomes
                .iter()
                .filter(|o| matches!(o.status, RuleStatus::Fail { .. }))
                .map(move |o| (r, o))
        })
    }

    pub fn is_clean(&self) -> bool {
        self.failures().next().is_none()
    }

    /// One line per rule: id, verdict, counts and description.
    pub fn table(&self) -> String {
        let mut out = format!(
            "{} rings ({} skipped)\n{:<4} {:<8} {:>5} {:>5} {:>7} {:>7}  {}\n",
            self.corpus.len(),
            self.skipped_entries.len(),
            "rule",
            "verdict",
            "pass",
            "fail",
            "vacuous",
            "skipped",
            "statement"
        );
        for r in &self.rules {
            let c = &r.counts;
            let _ = writeln!(
                out,
                "{:<4} {:<8} {:>5} {:>5} {:>7} {:>7}  {}",
                r.id, r.verdict, c.pass, c.fail, c.vacuous, c.skipped, r.description
            );
        }
        for s in &self.skipped_entries {
            let _ = writeln!(out, "skipped corpus entry {}: {}", s.name, s.reason);
        }
        for (r, o) in self.failures() {
            if let RuleStatus::Fail { witness, detail } = &o.status {
                let _ = write!(out, "FAIL {} on {}: {detail}", r.id, o.ring);
                if let Some(w) = witness {
                    let _ = write!(out, " [{w}]");
                }
                out.push('\n');
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn status_serializes_with_tag() {
        let o = RuleOutcome {
            ring: "Z(4)".into(),
            fingerprint: "00".into(),
            status: RuleStatus::Fail {
                witness: Some(Witness::new(&["a"], &[2])),
                detail: "x".into(),
            },
        };
        let json = serde_json::to_string(&o).unwrap();
        assert!(json.contains("\"status\":\"fail\""), "{json}");
        let back: RuleOutcome = serde_json::from_str(&json).unwrap();
        assert_eq!(back, o);
    }

    #[test]
    fn wrong_format_is_rejected() {
        let r = RuleReport::new(vec![], vec![], vec![]);
        let text = r.to_json().replace(REPORT_FORMAT, "report v0");
        assert!(RuleReport::from_json(&text).is_err());
        assert_eq!(RuleReport::from_json(&r.to_json()).unwrap(), r);
    }
}
