//! Prime, 1-absorbing prime and weakly 1-absorbing prime subsemimodules,
//! decided by direct scans over (nonunit, nonunit, element) triples.
//!
//! Witnesses are the first hit in lexicographic carrier-index order, so
//! repeated runs report the same tuple.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::semimodule::{FiniteSemimodule, Subsemimodule};

/// Result of deciding a universally quantified property.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", content = "witness", rename_all = "kebab-case")]
pub enum Outcome<W> {
    Holds,
    Fails(W),
}

impl<W> Outcome<W> {
    pub fn holds(&self) -> bool {
        matches!(self, Outcome::Holds)
    }

    pub fn witness(&self) -> Option<&W> {
        match self {
            Outcome::Holds => None,
            Outcome::Fails(w) => Some(w),
        }
    }
}

/// `(a, b, m)` with `a, b` nonunits, `abm = 0`, `ab ∉ (N :_S M)` and `m ∉ N`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct TripleZero {
    pub a: usize,
    pub b: usize,
    pub m: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationRecord {
    pub proper: bool,
    /// `None` when `N` is not proper and the predicates do not apply.
    pub predicates: Option<Predicates>,
    pub subtractive: bool,
    pub strong: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Predicates {
    /// Witness `(a, m)`.
    pub prime: Outcome<(usize, usize)>,
    /// Witness `(a, b, m)`.
    pub one_absorbing: Outcome<(usize, usize, usize)>,
    pub weakly_one_absorbing: Outcome<(usize, usize, usize)>,
    /// Populated only when `N` is weakly 1-absorbing prime.
    pub triple_zeros: Vec<TripleZero>,
}

fn require_proper(m: &FiniteSemimodule, n: &Subsemimodule) -> Result<()> {
    if n.members().universe() != m.size() {
        return Err(Error::ParentMismatch("subsemimodule from another module".into()));
    }
    if !n.is_proper() {
        return Err(Error::NotProper);
    }
    Ok(())
}

/// `am ∈ N` implies `a ∈ (N :_S M)` or `m ∈ N`.
pub fn is_prime_subsemimodule(m: &FiniteSemimodule, n: &Subsemimodule) -> Result<Outcome<(usize, usize)>> {
    require_proper(m, n)?;
    let colon = m.colon_ideal(n)?;
    for a in m.scalars().elements().filter(|&a| !colon.contains(a)) {
        if let Some(x) = m.elements().find(|&x| !n.contains(x) && n.contains(m.act(a, x))) {
            return Ok(Outcome::Fails((a, x)));
        }
    }
    Ok(Outcome::Holds)
}

fn absorbing_scan(m: &FiniteSemimodule, n: &Subsemimodule, nonzero_only: bool) -> Result<Outcome<(usize, usize, usize)>> {
    require_proper(m, n)?;
    let s = m.scalars();
    let colon = m.colon_ideal(n)?;
    let nonunits: Vec<usize> = s.nonunits().iter().collect();
    for &a in &nonunits {
        for &b in &nonunits {
            let ab = s.mul(a, b);
            if colon.contains(ab) {
                continue;
            }
            for x in m.elements().filter(|&x| !n.contains(x)) {
                let abx = m.act(ab, x);
                if n.contains(abx) && !(nonzero_only && abx == m.zero()) {
                    return Ok(Outcome::Fails((a, b, x)));
                }
            }
        }
    }
    Ok(Outcome::Holds)
}

/// For nonunits `a, b`: `abm ∈ N` implies `ab ∈ (N :_S M)` or `m ∈ N`.
pub fn is_one_absorbing_prime(m: &FiniteSemimodule, n: &Subsemimodule) -> Result<Outcome<(usize, usize, usize)>> {
    absorbing_scan(m, n, false)
}

/// As [`is_one_absorbing_prime`] but only for `abm != 0`.
pub fn is_weakly_one_absorbing_prime(m: &FiniteSemimodule, n: &Subsemimodule) -> Result<Outcome<(usize, usize, usize)>> {
    absorbing_scan(m, n, true)
}

/// Every `(a, b, m)` meeting the triple-zero conditions, in lexicographic order,
/// whether or not `N` is weakly 1-absorbing prime.
pub fn triple_zero_solutions(m: &FiniteSemimodule, n: &Subsemimodule) -> Result<Vec<TripleZero>> {
    require_proper(m, n)?;
    let s = m.scalars();
    let colon = m.colon_ideal(n)?;
    let nonunits: Vec<usize> = s.nonunits().iter().collect();
    let mut out = Vec::new();
    for &a in &nonunits {
        for &b in &nonunits {
            let ab = s.mul(a, b);
            if colon.contains(ab) {
                continue;
            }
            for x in m.elements().filter(|&x| !n.contains(x)) {
                if m.act(ab, x) == m.zero() {
                    out.push(TripleZero { a, b, m: x });
                }
            }
        }
    }
    Ok(out)
}

/// Triple-zeros of a weakly 1-absorbing prime `N`; empty when `N` is not weakly
/// 1-absorbing prime, since the notion is only defined there.
pub fn find_triple_zeros(m: &FiniteSemimodule, n: &Subsemimodule) -> Result<Vec<TripleZero>> {
    if !is_weakly_one_absorbing_prime(m, n)?.holds() {
        return Ok(Vec::new());
    }
    triple_zero_solutions(m, n)
}

pub fn classify(m: &FiniteSemimodule, n: &Subsemimodule) -> Result<ClassificationRecord> {
    if n.members().universe() != m.size() {
        return Err(Error::ParentMismatch("subsemimodule from another module".into()));
    }
    let subtractive = m.is_subtractive(n);
    let strong = m.is_strong(n);
    if !n.is_proper() {
        return Ok(ClassificationRecord { proper: false, predicates: None, subtractive, strong });
    }
    let weakly = is_weakly_one_absorbing_prime(m, n)?;
    let triple_zeros = if weakly.holds() { triple_zero_solutions(m, n)? } else { Vec::new() };
    let predicates = Predicates {
        prime: is_prime_subsemimodule(m, n)?,
        one_absorbing: is_one_absorbing_prime(m, n)?,
        weakly_one_absorbing: weakly,
        triple_zeros,
    };
    Ok(ClassificationRecord { proper: true, predicates: Some(predicates), subtractive, strong })
}
