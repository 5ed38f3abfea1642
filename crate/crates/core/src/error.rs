use std::fmt;

use thiserror::Error;

/// Name of a structural law checked during validation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Axiom {
    TableShape,
    ElementRange,
    AddCommutative,
    AddAssociative,
    AddIdentity,
    MulCommutative,
    MulAssociative,
    MulIdentity,
    Distributive,
    ZeroAbsorbing,
    ActionOverModuleSum,
    ActionOverScalarSum,
    ActionCompatible,
    ActionUnital,
    ActionZeroScalar,
    ActionZeroElement,
    ClosedUnderAdd,
    ClosedUnderAction,
    ClosedUnderMul,
    ContainsZero,
    ContainsOne,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Axiom::TableShape => "table shape",
            Axiom::ElementRange => "element range",
            Axiom::AddCommutative => "additive commutativity",
            Axiom::AddAssociative => "additive associativity",
            Axiom::AddIdentity => "additive identity",
            Axiom::MulCommutative => "multiplicative commutativity",
            Axiom::MulAssociative => "multiplicative associativity",
            Axiom::MulIdentity => "multiplicative identity",
            Axiom::Distributive => "distributivity",
            Axiom::ZeroAbsorbing => "zero absorbs products",
            Axiom::ActionOverModuleSum => "s(x+y) = sx+sy",
            Axiom::ActionOverScalarSum => "(s+t)x = sx+tx",
            Axiom::ActionCompatible => "(st)x = s(tx)",
            Axiom::ActionUnital => "1x = x",
            Axiom::ActionZeroScalar => "0x = 0",
            Axiom::ActionZeroElement => "s0 = 0",
            Axiom::ClosedUnderAdd => "closed under addition",
            Axiom::ClosedUnderAction => "closed under scalar action",
            Axiom::ClosedUnderMul => "closed under multiplication",
            Axiom::ContainsZero => "contains zero",
            Axiom::ContainsOne => "contains one",
        };
        f.write_str(name)
    }
}

/// One failed law together with the first offending tuple (carrier indices).
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct AxiomViolation {
    pub axiom: Axiom,
    pub witness: Vec<usize>,
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} fails at {:?}", self.axiom, self.witness)
    }
}

#[derive(Debug, Error)]
pub enum Error {
    /// Every failed law, one entry per law, in check order.
    #[error("axiom violation: {}{}", .0[0], if .0.len() > 1 { format!(" (and {} more)", .0.len() - 1) } else { String::new() })]
    AxiomViolation(Vec<AxiomViolation>),
    #[error("identity collapse: one equals zero")]
    IdentityCollapse,
    #[error("enumeration cap of {cap} exceeded")]
    CapExceeded { cap: usize },
    #[error("structures do not share a parent: {0}")]
    ParentMismatch(String),
    #[error("subset is not proper")]
    NotProper,
    #[error("ideal is not maximal")]
    NotMaximal,
    #[error("semimodule is not a multiplication semimodule")]
    NotMultiplication,
    #[error("invalid parameter: {0}")]
    InvalidParam(String),
    #[error("not a homomorphism: {axiom} fails at {witness:?}")]
    NotAHomomorphism { axiom: &'static str, witness: Vec<usize> },
    #[error("localized tables are ill defined at {0:?}")]
    IllDefined(Vec<usize>),
    #[error("unknown theorem id `{0}`")]
    UnknownTheorem(String),
    #[error("unknown relation id `{0}`")]
    UnknownRelation(String),
    #[error("instance is missing {0}")]
    MissingInstancePart(String),
    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },
    /// A build or validation error, tagged with where in the document it arose.
    #[error("{location}: {source}")]
    At { location: String, source: Box<Error> },
}

impl Error {
    pub fn at(self, location: impl Into<String>) -> Self {
        Error::At { location: location.into(), source: Box::new(self) }
    }

    /// The error with any location tags removed.
    pub fn root(&self) -> &Error {
        match self {
            Error::At { source, .. } => source.root(),
            other => other,
        }
    }

    pub(crate) fn violation(axiom: Axiom, witness: Vec<usize>) -> Self {
        Error::AxiomViolation(vec![AxiomViolation { axiom, witness }])
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
