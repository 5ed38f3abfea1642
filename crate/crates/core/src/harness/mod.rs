//! Executable checks for the structural theorems about 1-absorbing and weakly
//! 1-absorbing prime subsemimodules, catalog sweeps and counterexample search.

mod catalog;
mod context;
mod instance;
mod search;
mod theorems;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;

use crate::error::{Error, Result};

pub use catalog::default_catalog;
pub use context::Context;
pub use instance::{Instance, Named};
pub use search::{random_semiring, random_semirings, search_counterexample, Relation, SearchHit, RELATIONS};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Status {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "FAIL")]
    Fail,
    #[serde(rename = "VACUOUS")]
    Vacuous,
}

/// A named hypothesis and whether the instance satisfied it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Hypothesis {
    pub name: String,
    pub held: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Verdict {
    pub theorem: String,
    pub status: Status,
    /// Present exactly when the status is FAIL.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    /// Instance-level hypotheses; any failure makes the verdict VACUOUS.
    pub hypotheses: Vec<Hypothesis>,
    /// Number of tuples meeting the per-tuple hypotheses that were checked.
    pub checked: usize,
}

impl Verdict {
    /// PASS with at least one qualifying tuple.
    pub fn is_substantive_pass(&self) -> bool {
        self.status == Status::Pass && self.checked > 0
    }
}

/// One registry entry: the id and the statement it checks, in the notation
/// used throughout this crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TheoremEntry {
    pub id: &'static str,
    pub statement: &'static str,
}

pub const REGISTRY: &[TheoremEntry] = &[
    TheoremEntry {
        id: "char-1abs",
        statement: "proper N: N 1abs <=> (N:_M ab) ⊆ N for nonunits a,b with ab ∉ (N:_S M) <=> abK ⊆ N gives ab ∈ (N:_S M) or K ⊆ N <=> IJK ⊆ N for proper I,J gives IJ ⊆ (N:_S M) or K ⊆ N",
    },
    TheoremEntry {
        id: "mult-char",
        statement: "M multiplication, proper N: N 1abs <=> for proper ideals I1,I2 and K, I1I2K ⊆ N gives I1I2M ⊆ N or K ⊆ N",
    },
    TheoremEntry { id: "local-necessity", statement: "some N is 1abs and not prime => S local" },
    TheoremEntry { id: "nonlocal-prime", statement: "S not local, proper N: N 1abs <=> N prime" },
    TheoremEntry { id: "colon-corr", statement: "N 1abs => (N:_S M) is a 1abs ideal" },
    TheoremEntry {
        id: "mc-lift",
        statement: "M MC multiplication, I 1abs ideal, a,b nonunits: abx ∈ IM => ab ∈ I or x ∈ IM",
    },
    TheoremEntry { id: "mc-im-equiv", statement: "M MC multiplication, I proper: IM 1abs <=> I 1abs" },
    TheoremEntry {
        id: "mc-colon-corr",
        statement: "M MC multiplication, proper N: N 1abs <=> (N:_S M) 1abs <=> N = IM for a 1abs ideal I",
    },
    TheoremEntry {
        id: "hom-colon",
        statement: "f: M1 -> M2: (N2:_S M2) ⊆ (f⁻¹(N2):_S M1); f onto: (N1:_S M1) ⊆ (f(N1):_S M2)",
    },
    TheoremEntry {
        id: "hom-transfer",
        statement: "N2 1abs, Im f ⊄ N2 => f⁻¹(N2) 1abs; f onto, N1 1abs subtractive strong, Ker f ⊆ N1 => f(N1) 1abs",
    },
    TheoremEntry { id: "loc-transfer", statement: "N 1abs, T⁻¹N proper => T⁻¹N 1abs in T⁻¹M" },
    TheoremEntry {
        id: "char-weakly",
        statement: "proper subtractive N: N weakly 1abs <=> (N:_M ab) = (0:_M ab) ∪ N <=> (N:_M ab) ∈ {(0:_M ab), N} <=> 0 ≠ abK ⊆ N clause <=> 0 ≠ aJK ⊆ N clause <=> 0 ≠ IJK ⊆ N clause",
    },
    TheoremEntry {
        id: "weakly-mult-char",
        statement: "M multiplication, proper subtractive N: N weakly 1abs <=> for proper I1,I2 and K, 0 ≠ I1I2K ⊆ N gives I1I2M ⊆ N or K ⊆ N",
    },
    TheoremEntry {
        id: "weakly-mc-lift",
        statement: "M MC multiplication, I weakly 1abs ideal, a,b nonunits: 0 ≠ abx ∈ IM => ab ∈ I or x ∈ IM",
    },
    TheoremEntry {
        id: "weakly-mc-im-equiv",
        statement: "M MC multiplication, I proper with IM subtractive: IM weakly 1abs <=> I weakly 1abs",
    },
    TheoremEntry {
        id: "weakly-colon-corr",
        statement: "M MC multiplication, proper subtractive N: N weakly 1abs <=> (N:_S M) weakly 1abs <=> N = IM for a weakly 1abs ideal I",
    },
    TheoremEntry { id: "weakly-loc-transfer", statement: "N weakly 1abs, T⁻¹N proper => T⁻¹N weakly 1abs in T⁻¹M" },
    TheoremEntry {
        id: "cyclic-equiv",
        statement: "Sx proper subtractive, (0:_S x) ⊆ (Sx:_S M): Sx weakly 1abs <=> Sx 1abs",
    },
    TheoremEntry { id: "subtractive-union", statement: "N1, N2 subtractive, N1 ∪ N2 a subsemimodule => N1 ∪ N2 ∈ {N1, N2}" },
    TheoremEntry {
        id: "tz-products",
        statement: "S local, N weakly 1abs subtractive, (a,b,m) triple-zero: abN = a(N:_S M)m = b(N:_S M)m = a(N:_S M)N = b(N:_S M)N = (N:_S M)²m = 0",
    },
    TheoremEntry { id: "tz-square", statement: "S local, N weakly 1abs subtractive, not 1abs => (N:_S M)²N = 0" },
    TheoremEntry { id: "tz-cube-ann", statement: "S local, N weakly 1abs subtractive, not 1abs => (N:_S M)³ ⊆ Ann(M)" },
    TheoremEntry {
        id: "tz-ncube",
        statement: "S local, M multiplication, N weakly 1abs subtractive, not 1abs => N³ = 0",
    },
    TheoremEntry {
        id: "icubed-equiv",
        statement: "S local, M MC multiplication, I proper, I³ ≠ 0, IM subtractive: IM weakly 1abs <=> IM 1abs <=> I 1abs <=> I weakly 1abs",
    },
];

pub fn theorem_ids() -> impl Iterator<Item = &'static str> {
    REGISTRY.iter().map(|e| e.id)
}

pub fn lookup(id: &str) -> Result<&'static TheoremEntry> {
    REGISTRY.iter().find(|e| e.id == id).ok_or_else(|| Error::UnknownTheorem(id.to_string()))
}

/// Checks one theorem on one instance.
pub fn verify(id: &str, instance: &Instance) -> Result<Verdict> {
    lookup(id)?;
    let cx = Context::new(instance)?;
    verify_in(id, &cx)
}

/// As [`verify`], reusing the precomputed lattices in `cx`.
pub fn verify_in(id: &str, cx: &Context) -> Result<Verdict> {
    let entry = lookup(id)?;
    theorems::run(entry.id, cx)
}

/// One cell of a sweep; errors are kept per cell.
#[derive(Debug, Clone, Serialize)]
pub struct SweepCell {
    pub instance: String,
    pub theorem: String,
    #[serde(flatten)]
    pub outcome: CellOutcome,
}

#[derive(Debug, Clone, Serialize)]
#[serde(untagged)]
pub enum CellOutcome {
    Verdict(Verdict),
    Error { error: String },
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub vacuous: usize,
    pub error: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepReport {
    pub cells: Vec<SweepCell>,
    pub summary: Summary,
}

impl SweepCell {
    pub fn verdict(&self) -> Option<&Verdict> {
        match &self.outcome {
            CellOutcome::Verdict(v) => Some(v),
            CellOutcome::Error { .. } => None,
        }
    }
}

impl Summary {
    pub fn add(&mut self, outcome: &CellOutcome) {
        match outcome {
            CellOutcome::Verdict(v) => match v.status {
                Status::Pass => self.pass += 1,
                Status::Fail => self.fail += 1,
                Status::Vacuous => self.vacuous += 1,
            },
            CellOutcome::Error { .. } => self.error += 1,
        }
    }
}

/// Every (instance, theorem) cell, in catalog order then id order. Cells run in
/// parallel; the result does not depend on scheduling.
pub fn sweep(catalog: &[Instance], ids: &[&str]) -> Result<SweepReport> {
    for id in ids {
        lookup(id)?;
    }
    let contexts: Vec<std::result::Result<Context, String>> =
        catalog.par_iter().map(|inst| Context::new(inst).map_err(|e| e.to_string())).collect();
    let cells: Vec<SweepCell> = contexts
        .par_iter()
        .zip(catalog.par_iter())
        .flat_map_iter(|(cx, inst)| {
            ids.iter().map(move |id| {
                let outcome = match cx {
                    Ok(cx) => match verify_in(id, cx) {
                        Ok(v) => CellOutcome::Verdict(v),
                        Err(e) => CellOutcome::Error { error: e.to_string() },
                    },
                    Err(e) => CellOutcome::Error { error: e.clone() },
                };
                SweepCell { instance: inst.name.clone(), theorem: id.to_string(), outcome }
            })
        })
        .collect();
    let mut summary = Summary::default();
    for c in &cells {
        summary.add(&c.outcome);
    }
    Ok(SweepReport { cells, summary })
}
