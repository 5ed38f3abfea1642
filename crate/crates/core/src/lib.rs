//! Finite commutative semirings and semimodules, with decision procedures for
//! prime, 1-absorbing prime and weakly 1-absorbing prime subsemimodules.

pub mod classify;
pub mod constructions;
pub mod document;
pub mod elemset;
pub mod error;
pub mod harness;
mod lattice;
pub mod localize;
pub mod semimodule;
pub mod semiring;

pub use classify::{classify, ClassificationRecord, Outcome, Predicates, TripleZero};
pub use elemset::ElemSet;
pub use error::{Axiom, AxiomViolation, Error, Result};
pub use lattice::DEFAULT_CAP;
pub use semimodule::{FiniteSemimodule, ProductMode, Subsemimodule};
pub use semiring::{FiniteSemiring, Ideal, IdealClassification, MultClosedSet};
pub use localize::{localize, FractionClasses, LocalizedSemimodule};
