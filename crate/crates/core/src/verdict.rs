//! Structured outcomes of checks and theorem verifications.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

#[cfg(feature = "serde")]
use serde::{Deserialize, Serialize};

use crate::group::FiniteGroup;
use crate::subgroup::Subgroup;

/// How a check relates to the hypotheses of the statement it tests.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize), serde(rename_all = "kebab-case"))]
pub enum Hypothesis {
    /// All hypotheses hold (flags declared, group conditions checked).
    Satisfied,
    /// Some declared flag is missing: the outcome is an observation only.
    Empirical,
    /// The group violates a hypothesis; nothing is asserted.
    NotApplicable,
    /// Checks of trusted metadata rather than a theorem.
    Declared,
}

/// A subgroup cited in a report, by its generators in cycle notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
pub struct Witness {
    pub label: String,
    pub order: usize,
    pub generators: Vec<String>,
}

impl Witness {
    pub fn subgroup(label: &str, g: &FiniteGroup, h: &Subgroup) -> Self {
        Witness {
            label: label.to_string(),
            order: h.order(),
            generators: h.generators().iter().map(|&x| g.element(x).to_string()).collect(),
        }
    }

    pub fn element(label: &str, g: &FiniteGroup, x: crate::group::Elem) -> Self {
        Witness { label: label.to_string(), order: g.element_order(x) as usize, generators: alloc::vec![g.element(x).to_string()] }
    }
}

/// One failed instance of a checked implication.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
pub struct Violation {
    pub group: String,
    pub condition: String,
    pub witnesses: Vec<Witness>,
}

impl Violation {
    pub fn new(group: &str, condition: &str, witnesses: Vec<Witness>) -> Self {
        Violation { group: group.to_string(), condition: condition.to_string(), witnesses }
    }
}

/// Outcome of one named check over one group (or aggregated over many).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
pub struct CheckResult {
    pub name: String,
    pub hypothesis: Hypothesis,
    pub note: String,
    pub cases: u64,
    pub holds: Option<bool>,
    pub violations: Vec<Violation>,
}

impl CheckResult {
    pub fn new(name: &str, hypothesis: Hypothesis) -> Self {
        CheckResult { name: name.to_string(), hypothesis, note: String::new(), cases: 0, holds: None, violations: Vec::new() }
    }

    pub fn not_applicable(name: &str, note: &str) -> Self {
        let mut c = CheckResult::new(name, Hypothesis::NotApplicable);
        c.note = note.to_string();
        c
    }

    pub fn with_note(mut self, note: &str) -> Self {
        self.note = note.to_string();
        self
    }

    /// Sets `holds` from the violation list unless the check was skipped.
    pub fn finish(&mut self) {
        if self.hypothesis != Hypothesis::NotApplicable {
            self.holds = Some(self.violations.is_empty());
        }
    }

    /// Whether this result is a real failure: a violation of a
    /// statement whose hypotheses hold (or of declared metadata).
    pub fn is_failure(&self) -> bool {
        matches!(self.hypothesis, Hypothesis::Satisfied | Hypothesis::Declared) && self.holds == Some(false)
    }

    /// Folds `other` (same check, another group) into `self`.
    pub fn absorb(&mut self, other: CheckResult) {
        self.cases += other.cases;
        self.violations.extend(other.violations);
        self.holds = match (self.holds, other.holds) {
            (Some(a), Some(b)) => Some(a && b),
            (a, None) => a,
            (None, b) => b,
        };
    }
}

/// One statement of a theorem, evaluated on its own.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
pub struct Statement {
    pub name: String,
    /// `None` when the statement could not be evaluated within budget.
    pub value: Option<bool>,
    pub note: String,
    pub witnesses: Vec<Witness>,
}

impl Statement {
    pub fn new(name: &str, value: Option<bool>) -> Self {
        Statement { name: name.to_string(), value, note: String::new(), witnesses: Vec::new() }
    }
}

/// Independent evaluation of the statements of an equivalence theorem.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
pub struct TheoremVerdict {
    pub theorem: String,
    pub group: String,
    pub formation: String,
    pub hypothesis: Hypothesis,
    pub hypothesis_note: String,
    /// Statements that must all hold, or be equivalent when `conjunction` is false.
    pub conjunction: bool,
    pub statements: Vec<Statement>,
    pub equivalent: Option<bool>,
    pub holds: Option<bool>,
    /// Facts recorded alongside the statements, outside the verdict.
    pub observations: Vec<Statement>,
}

impl TheoremVerdict {
    pub fn new(theorem: &str, group: &str, formation: &str) -> Self {
        TheoremVerdict {
            theorem: theorem.to_string(),
            group: group.to_string(),
            formation: formation.to_string(),
            hypothesis: Hypothesis::Satisfied,
            hypothesis_note: String::new(),
            conjunction: false,
            statements: Vec::new(),
            equivalent: None,
            holds: None,
            observations: Vec::new(),
        }
    }

    pub fn statement(&self, name: &str) -> Option<&Statement> {
        self.statements.iter().find(|s| s.name == name)
    }

    /// All statements evaluated and pairwise equal; `None` if any is unknown.
    pub fn compute_equivalent(&self) -> Option<bool> {
        let values: Option<Vec<bool>> = self.statements.iter().map(|s| s.value).collect();
        values.map(|v| v.windows(2).all(|w| w[0] == w[1]))
    }

    pub fn compute_holds(&self) -> Option<bool> {
        if self.conjunction {
            let values: Option<Vec<bool>> = self.statements.iter().map(|s| s.value).collect();
            values.map(|v| v.iter().all(|&b| b))
        } else {
            self.compute_equivalent()
        }
    }

    pub fn push(&mut self, s: Statement) {
        self.statements.push(s);
        self.equivalent = self.compute_equivalent();
        self.holds = self.compute_holds();
    }

    /// An in-hypothesis verdict that does not hold.
    pub fn is_failure(&self) -> bool {
        self.hypothesis == Hypothesis::Satisfied && self.holds == Some(false)
    }
}

/// All checks and theorem verdicts for one group.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
pub struct VerdictReport {
    pub group: String,
    pub order: usize,
    pub formation: String,
    pub complete: bool,
    pub checks: Vec<CheckResult>,
    pub theorems: Vec<TheoremVerdict>,
}

impl VerdictReport {
    pub fn new(group: &str, order: usize, formation: &str) -> Self {
        VerdictReport {
            group: group.to_string(),
            order,
            formation: formation.to_string(),
            complete: true,
            checks: Vec::new(),
            theorems: Vec::new(),
        }
    }

    pub fn violations(&self) -> usize {
        self.checks.iter().filter(|c| c.is_failure()).map(|c| c.violations.len().max(1)).sum::<usize>()
            + self.theorems.iter().filter(|t| t.is_failure()).count()
    }

    pub fn has_failure(&self) -> bool {
        self.violations() > 0
    }
}
