use std::collections::HashMap;

use crate::classify::{is_one_absorbing_prime, is_prime_subsemimodule, is_weakly_one_absorbing_prime, Outcome};
use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::lattice::DEFAULT_CAP;
use crate::semimodule::{FiniteSemimodule, Subsemimodule};
use crate::semiring::{FiniteSemiring, Ideal, IdealClassification};

use super::instance::{Instance, Named};

/// A proper subsemimodule together with the facts most theorems need.
#[derive(Debug, Clone)]
pub struct Candidate {
    pub name: String,
    pub n: Subsemimodule,
    pub colon: Ideal,
    pub prime: bool,
    pub one_absorbing: bool,
    pub weakly: bool,
    pub subtractive: bool,
    pub strong: bool,
}

/// Lattices and classifications of one instance, computed once and shared by
/// every theorem check.
#[derive(Debug)]
pub struct Context<'a> {
    pub instance: &'a Instance,
    pub lattice: Vec<Subsemimodule>,
    pub ideals: Vec<Ideal>,
    pub proper_ideals: Vec<Ideal>,
    /// Classification of every proper ideal.
    pub ideal_class: HashMap<Ideal, IdealClassification>,
    /// The instance's named ideals, or every proper ideal.
    pub ideal_candidates: Vec<Named<Ideal>>,
    /// The instance's named proper subsemimodules, or every proper one.
    pub candidates: Vec<Candidate>,
    pub local: Option<Ideal>,
    pub mc: Outcome<(usize, usize, usize)>,
    pub multiplication: bool,
}

impl<'a> Context<'a> {
    pub fn new(instance: &'a Instance) -> Result<Self> {
        let m = &instance.module;
        let s = m.scalars();
        let lattice = m.enumerate_subsemimodules(DEFAULT_CAP)?;
        let ideals = s.enumerate_ideals(DEFAULT_CAP)?;
        let proper_ideals: Vec<Ideal> = ideals.iter().filter(|i| i.is_proper()).cloned().collect();
        let ideal_class = proper_ideals
            .iter()
            .map(|i| Ok((i.clone(), s.classify_ideal(i)?)))
            .collect::<Result<HashMap<_, _>>>()?;
        let ideal_candidates = if instance.ideals.is_empty() {
            proper_ideals.iter().map(|i| Named::new(s.format_set(i.members()), i.clone())).collect()
        } else {
            for i in &instance.ideals {
                if i.value.members().universe() != s.size() {
                    return Err(Error::ParentMismatch(format!("ideal `{}` is not over the scalars", i.name)));
                }
            }
            instance.ideals.clone()
        };
        let named: Vec<Named<Subsemimodule>> = if instance.subsemimodules.is_empty() {
            lattice.iter().filter(|n| n.is_proper()).map(|n| Named::new(m.format_set(n.members()), n.clone())).collect()
        } else {
            instance.subsemimodules.iter().filter(|n| n.value.is_proper()).cloned().collect()
        };
        let candidates = named
            .into_iter()
            .map(|Named { name, value: n }| {
                Ok(Candidate {
                    colon: m.colon_ideal(&n)?,
                    prime: is_prime_subsemimodule(m, &n)?.holds(),
                    one_absorbing: is_one_absorbing_prime(m, &n)?.holds(),
                    weakly: is_weakly_one_absorbing_prime(m, &n)?.holds(),
                    subtractive: m.is_subtractive(&n),
                    strong: m.is_strong(&n),
                    name,
                    n,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let multiplication = lattice.iter().all(|n| {
            m.colon_ideal(n).and_then(|c| m.ideal_action(&c)).map(|back| &back == n).unwrap_or(false)
        });
        Ok(Context {
            instance,
            local: s.is_local(),
            mc: m.is_mc(),
            multiplication,
            lattice,
            ideals,
            proper_ideals,
            ideal_class,
            ideal_candidates,
            candidates,
        })
    }

    pub fn module(&self) -> &FiniteSemimodule {
        &self.instance.module
    }

    pub fn scalars(&self) -> &FiniteSemiring {
        self.instance.module.scalars()
    }

    pub fn mset(&self, set: &ElemSet) -> String {
        self.module().format_set(set)
    }

    pub fn sset(&self, set: &ElemSet) -> String {
        self.scalars().format_set(set)
    }

    pub fn ml(&self, x: usize) -> String {
        self.module().label(x).to_string()
    }

    pub fn sl(&self, a: usize) -> String {
        self.scalars().label(a).to_string()
    }

    pub fn nonunits(&self) -> Vec<usize> {
        self.scalars().nonunits().iter().collect()
    }

    /// Classification of a proper ideal; computed on demand for ideals outside the lattice cache.
    pub fn classify_ideal(&self, i: &Ideal) -> Result<IdealClassification> {
        match self.ideal_class.get(i) {
            Some(c) => Ok(c.clone()),
            None => self.scalars().classify_ideal(i),
        }
    }
}
