//! The machine-readable report written by every command.

use semimod::harness::{CellOutcome, Status, SweepCell, Summary, Verdict};
use serde::Serialize;
use serde_json::Value;

#[derive(Debug, Serialize)]
pub struct Report {
    pub command: &'static str,
    /// Instance name, or the catalog path for sweeps and searches.
    pub instance: String,
    pub results: Vec<ResultRow>,
    pub summary: Summary,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub classifications: Vec<ClassificationView>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub search: Option<SearchView>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub localization: Option<LocalizationView>,
}

impl Report {
    pub fn new(command: &'static str, instance: impl Into<String>) -> Self {
        Report {
            command,
            instance: instance.into(),
            results: Vec::new(),
            summary: Summary::default(),
            classifications: Vec::new(),
            search: None,
            localization: None,
        }
    }

    pub fn push_cell(&mut self, cell: SweepCell) {
        self.summary.add(&cell.outcome);
        let statement = semimod::harness::lookup(&cell.theorem).map(|e| e.statement).unwrap_or_default();
        self.results.push(match cell.outcome {
            CellOutcome::Verdict(v) => ResultRow::from_verdict(Some(cell.instance), statement, v),
            CellOutcome::Error { error } => ResultRow {
                instance: Some(cell.instance),
                theorem: cell.theorem,
                statement,
                status: None,
                witness: None,
                hypotheses: Vec::new(),
                checked: 0,
                error: Some(error),
            },
        });
    }

    pub fn has_fail(&self) -> bool {
        self.summary.fail > 0
    }

    pub fn has_error(&self) -> bool {
        self.summary.error > 0
    }
}

#[derive(Debug, Serialize)]
pub struct ResultRow {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub instance: Option<String>,
    pub theorem: String,
    pub statement: &'static str,
    /// Absent when the cell errored.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub status: Option<Status>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    pub hypotheses: Vec<HypothesisView>,
    pub checked: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Debug, Serialize)]
pub struct HypothesisView {
    pub name: String,
    pub held: bool,
}

impl ResultRow {
    pub fn from_verdict(instance: Option<String>, statement: &'static str, v: Verdict) -> Self {
        ResultRow {
            instance,
            theorem: v.theorem,
            statement,
            status: Some(v.status),
            witness: v.witness,
            hypotheses: v.hypotheses.into_iter().map(|h| HypothesisView { name: h.name, held: h.held }).collect(),
            checked: v.checked,
            error: None,
        }
    }
}

/// A decided predicate; witnesses are given by element labels.
#[derive(Debug, Serialize)]
pub struct PredicateView {
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<String>>,
}

#[derive(Debug, Serialize)]
pub struct ClassificationView {
    pub subsemimodule: String,
    pub members: Vec<String>,
    pub colon: Vec<String>,
    pub subtractive: bool,
    pub strong: bool,
    pub prime: PredicateView,
    pub one_absorbing_prime: PredicateView,
    pub weakly_one_absorbing_prime: PredicateView,
    pub triple_zeros: Vec<[String; 3]>,
    /// `N·N`; absent under strict products when the module is not a multiplication semimodule.
    pub square: Option<Vec<String>>,
}

#[derive(Debug, Serialize)]
pub struct SearchView {
    pub relation: String,
    pub cap: usize,
    pub instances_scanned: usize,
    pub found: bool,
    /// The witness instance as an instance document, with the offending subsemimodule named `N`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<SearchWitness>,
}

#[derive(Debug, Serialize)]
pub struct SearchWitness {
    pub instance: String,
    pub subsemimodule: Vec<String>,
    pub document: Value,
}

#[derive(Debug, Serialize)]
pub struct LocalizationView {
    pub tset: String,
    pub tset_members: Vec<String>,
    pub collapsed: bool,
    pub scalar_classes: usize,
    pub classes: Vec<FractionClassView>,
    pub subsemimodules: Vec<LocalizedSubView>,
}

#[derive(Debug, Serialize)]
pub struct FractionClassView {
    pub label: String,
    /// Every fraction `x/t` in the class.
    pub fractions: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct LocalizedSubView {
    pub subsemimodule: String,
    pub localized: Vec<String>,
    pub proper: bool,
    pub prime: Option<bool>,
    pub one_absorbing_prime: Option<bool>,
    pub weakly_one_absorbing_prime: Option<bool>,
}
