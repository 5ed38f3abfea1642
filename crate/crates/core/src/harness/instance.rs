use crate::constructions::{scalar_endomorphism, HomTable};
use crate::elemset::ElemSet;
use crate::lattice::DEFAULT_CAP;
use crate::semimodule::{FiniteSemimodule, Subsemimodule};
use crate::semiring::{Ideal, MultClosedSet};

/// A value with a display name used in reports.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Named<T> {
    pub name: String,
    pub value: T,
}

impl<T> Named<T> {
    pub fn new(name: impl Into<String>, value: T) -> Self {
        Named { name: name.into(), value }
    }
}

/// Everything a theorem may quantify over.
///
/// Empty `ideals` or `subsemimodules` mean "every proper one". Homomorphisms and
/// multiplicatively closed sets have no such default; theorems that need them
/// report a missing part when the lists are empty.
#[derive(Debug, Clone)]
pub struct Instance {
    pub name: String,
    pub module: FiniteSemimodule,
    pub ideals: Vec<Named<Ideal>>,
    pub subsemimodules: Vec<Named<Subsemimodule>>,
    pub tsets: Vec<Named<MultClosedSet>>,
    pub homs: Vec<Named<HomTable>>,
}

impl Instance {
    pub fn new(name: impl Into<String>, module: FiniteSemimodule) -> Self {
        Instance {
            name: name.into(),
            module,
            ideals: Vec::new(),
            subsemimodules: Vec::new(),
            tsets: Vec::new(),
            homs: Vec::new(),
        }
    }

    pub fn with_subsemimodule(mut self, name: impl Into<String>, n: Subsemimodule) -> Self {
        self.subsemimodules.push(Named::new(name, n));
        self
    }

    pub fn with_ideal(mut self, name: impl Into<String>, i: Ideal) -> Self {
        self.ideals.push(Named::new(name, i));
        self
    }

    pub fn with_tset(mut self, name: impl Into<String>, t: MultClosedSet) -> Self {
        self.tsets.push(Named::new(name, t));
        self
    }

    pub fn with_hom(mut self, name: impl Into<String>, f: HomTable) -> Self {
        self.homs.push(Named::new(name, f));
        self
    }

    /// Adds the endomorphisms `x ↦ s x`, the monoids generated by single scalars
    /// and the complements of prime ideals, skipping duplicates.
    pub fn with_generated_extras(mut self) -> Self {
        let m = &self.module;
        let s = m.scalars();
        for a in s.elements() {
            let f = scalar_endomorphism(m, a);
            if !self.homs.iter().any(|h| h.value == f) {
                self.homs.push(Named::new(format!("mul-{}", s.label(a)), f));
            }
        }
        let mut tsets: Vec<Named<MultClosedSet>> = Vec::new();
        for a in s.elements() {
            let t = s.mult_closed_generated(&ElemSet::singleton(s.size(), a));
            tsets.push(Named::new(format!("powers-{}", s.label(a)), t));
        }
        if let Ok(ideals) = s.enumerate_ideals(DEFAULT_CAP) {
            for p in ideals.iter().filter(|i| i.is_proper()) {
                if s.classify_ideal(p).map(|c| c.prime.holds()).unwrap_or(false) {
                    if let Ok(t) = s.prime_complement(p) {
                        tsets.push(Named::new(format!("complement-{}", s.format_set(p.members())), t));
                    }
                }
            }
        }
        for t in tsets {
            if !self.tsets.iter().any(|u| u.value == t.value) {
                self.tsets.push(t);
            }
        }
        self
    }
}
