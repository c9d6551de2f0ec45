//! JSON run reports. Field order is the serialization order, so reports
//! from identical runs are byte-identical. No timings are recorded.

use serde::{Deserialize, Serialize};
use subform_core::{Hypothesis, VerdictReport};

pub const TOOL: &str = "subform";
pub const REPORT_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budgets {
    pub max_order: usize,
    pub lattice_budget: usize,
    pub time_budget_secs: u64,
    pub example_time_budget_secs: u64,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets { max_order: 2000, lattice_budget: 400, time_budget_secs: 10, example_time_budget_secs: 600 }
    }
}

/// Why a group or check produced no verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ErrorKind {
    Parse,
    Budget,
    Cancelled,
    Formation,
    Cache,
    Other,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunError {
    pub group: String,
    pub check: Option<String>,
    pub kind: ErrorKind,
    pub message: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub groups: usize,
    pub errors: usize,
    pub checks: usize,
    pub theorem_verdicts: usize,
    pub violations: usize,
    pub not_applicable: usize,
    pub empirical_mismatches: usize,
    pub exit_code: i32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub tool: String,
    pub version: String,
    pub report_version: u32,
    pub formation: String,
    pub budgets: Budgets,
    pub checks: Vec<String>,
    /// Every group finished without budget errors or cancellation.
    pub complete: bool,
    pub groups: Vec<VerdictReport>,
    pub errors: Vec<RunError>,
    pub summary: Summary,
}

impl Report {
    pub fn new(formation: &str, budgets: Budgets, checks: Vec<String>) -> Self {
        Report {
            tool: TOOL.to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            report_version: REPORT_VERSION,
            formation: formation.to_string(),
            budgets,
            checks,
            complete: true,
            groups: Vec::new(),
            errors: Vec::new(),
            summary: Summary::default(),
        }
    }

    /// Recomputes `complete` and `summary`. Refusals on hypothesis grounds
    /// raise exit code 3 only when `strict_hypothesis` is set.
    pub fn finalize(&mut self, strict_hypothesis: bool) {
        let mut s = Summary { groups: self.groups.len(), errors: self.errors.len(), ..Summary::default() };
        for g in &self.groups {
            s.checks += g.checks.len();
            s.theorem_verdicts += g.theorems.len();
            s.violations += g.violations();
            s.not_applicable += g.theorems.iter().filter(|t| t.hypothesis == Hypothesis::NotApplicable).count();
            s.empirical_mismatches += g.checks.iter().filter(|c| c.hypothesis == Hypothesis::Empirical && c.holds == Some(false)).count()
                + g.theorems.iter().filter(|t| t.hypothesis == Hypothesis::Empirical && t.holds == Some(false)).count();
        }
        let budget = self.errors.iter().any(|e| matches!(e.kind, ErrorKind::Budget | ErrorKind::Cancelled));
        self.complete = !budget && self.groups.iter().all(|g| g.complete);
        s.exit_code = if s.violations > 0 || self.errors.iter().any(|e| e.kind == ErrorKind::Formation) {
            1
        } else if !self.complete {
            4
        } else if !self.errors.is_empty() {
            2
        } else if strict_hypothesis && s.not_applicable > 0 {
            3
        } else {
            0
        };
        self.summary = s;
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }
}
