//! Finite commutative semirings given by operation tables.
//!
//! Elements are carrier indices; labels only matter for input and output.
//! Everything here is immutable once validated, and every query is a plain
//! scan over the tables.

use std::fmt;

use crate::classify::Outcome;
use crate::elemset::ElemSet;
use crate::error::{Axiom, AxiomViolation, Error, Result};
use crate::lattice;

/// A validated finite commutative semiring with `1 != 0`.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteSemiring {
    labels: Vec<String>,
    add: Vec<usize>,
    mul: Vec<usize>,
    zero: usize,
    one: usize,
    units: ElemSet,
}

/// An ideal of a [`FiniteSemiring`]: contains zero, closed under addition and
/// under multiplication by arbitrary scalars.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ideal(ElemSet);

/// A multiplicatively closed subset: contains one and is closed under products.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultClosedSet(ElemSet);

macro_rules! subset_newtype {
    ($ty:ident) => {
        impl $ty {
            pub fn members(&self) -> &ElemSet {
                &self.0
            }

            pub fn contains(&self, x: usize) -> bool {
                self.0.contains(x)
            }

            pub fn len(&self) -> usize {
                self.0.len()
            }

            pub fn is_empty(&self) -> bool {
                self.0.is_empty()
            }

            pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
                self.0.iter()
            }

            pub fn to_vec(&self) -> Vec<usize> {
                self.0.to_vec()
            }

            pub fn is_subset(&self, other: &$ty) -> bool {
                self.0.is_subset(&other.0)
            }

            /// False exactly when the subset is the whole carrier.
            pub fn is_proper(&self) -> bool {
                !self.0.is_full()
            }

            pub fn into_members(self) -> ElemSet {
                self.0
            }
        }

        impl fmt::Debug for $ty {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "{}{:?}", stringify!($ty), self.0)
            }
        }
    };
}

subset_newtype!(Ideal);
subset_newtype!(MultClosedSet);
pub(crate) use subset_newtype;

/// Ideal-level primeness predicates of a proper ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealClassification {
    /// Witness `(a, b)` with `ab in I`, `a, b not in I`.
    pub prime: Outcome<(usize, usize)>,
    /// Witness `(a, b, c)` of nonunits with `abc in I`, `ab not in I`, `c not in I`.
    pub one_absorbing: Outcome<(usize, usize, usize)>,
    /// As above with the additional requirement `abc != 0`.
    pub weakly_one_absorbing: Outcome<(usize, usize, usize)>,
}

pub(crate) fn table_violations(n: usize, tables: &[(&str, &[usize])], elems: &[usize]) -> Vec<AxiomViolation> {
    let mut out = Vec::new();
    for (i, (_, t)) in tables.iter().enumerate() {
        if t.len() != n * n {
            out.push(AxiomViolation { axiom: Axiom::TableShape, witness: vec![i, t.len()] });
        } else if let Some(pos) = t.iter().position(|&v| v >= n) {
            out.push(AxiomViolation { axiom: Axiom::ElementRange, witness: vec![i, pos, t[pos]] });
        }
    }
    if let Some(&e) = elems.iter().find(|&&e| e >= n) {
        out.push(AxiomViolation { axiom: Axiom::ElementRange, witness: vec![e] });
    }
    out
}

fn first_pair(n: usize, mut bad: impl FnMut(usize, usize) -> bool) -> Option<Vec<usize>> {
    (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).find(|&(a, b)| bad(a, b)).map(|(a, b)| vec![a, b])
}

fn first_triple(n: usize, mut bad: impl FnMut(usize, usize, usize) -> bool) -> Option<Vec<usize>> {
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if bad(a, b, c) {
                    return Some(vec![a, b, c]);
                }
            }
        }
    }
    None
}

impl FiniteSemiring {
    /// Validates the tables (row-major, `n * n` entries each) and builds the semiring.
    pub fn new(labels: Vec<String>, add: Vec<usize>, mul: Vec<usize>, zero: usize, one: usize) -> Result<Self> {
        let violations = Self::axiom_violations(labels.len(), &add, &mul, zero, one);
        if zero == one && zero < labels.len() {
            return Err(Error::IdentityCollapse);
        }
        if !violations.is_empty() {
            return Err(Error::AxiomViolation(violations));
        }
        Ok(Self::new_unchecked(labels, add, mul, zero, one))
    }

    pub(crate) fn new_unchecked(labels: Vec<String>, add: Vec<usize>, mul: Vec<usize>, zero: usize, one: usize) -> Self {
        let n = labels.len();
        let mut units = ElemSet::empty(n);
        for a in 0..n {
            if (0..n).any(|b| mul[a * n + b] == one) {
                units.insert(a);
            }
        }
        FiniteSemiring { labels, add, mul, zero, one, units }
    }

    /// One entry per failed law, each with its lexicographically first witness.
    pub fn axiom_violations(n: usize, add: &[usize], mul: &[usize], zero: usize, one: usize) -> Vec<AxiomViolation> {
        let shape = table_violations(n, &[("add", add), ("mul", mul)], &[zero, one]);
        if !shape.is_empty() {
            return shape;
        }
        let p = |a: usize, b: usize| add[a * n + b];
        let m = |a: usize, b: usize| mul[a * n + b];
        let checks: [(Axiom, Option<Vec<usize>>); 8] = [
            (Axiom::AddCommutative, first_pair(n, |a, b| p(a, b) != p(b, a))),
            (Axiom::AddAssociative, first_triple(n, |a, b, c| p(p(a, b), c) != p(a, p(b, c)))),
            (Axiom::AddIdentity, (0..n).find(|&a| p(zero, a) != a).map(|a| vec![a])),
            (Axiom::MulCommutative, first_pair(n, |a, b| m(a, b) != m(b, a))),
            (Axiom::MulAssociative, first_triple(n, |a, b, c| m(m(a, b), c) != m(a, m(b, c)))),
            (Axiom::MulIdentity, (0..n).find(|&a| m(one, a) != a).map(|a| vec![a])),
            (Axiom::Distributive, first_triple(n, |a, b, c| m(a, p(b, c)) != p(m(a, b), m(a, c)))),
            (Axiom::ZeroAbsorbing, (0..n).find(|&a| m(zero, a) != zero).map(|a| vec![a])),
        ];
        checks
            .into_iter()
            .filter_map(|(axiom, w)| w.map(|witness| AxiomViolation { axiom, witness }))
            .collect()
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn add_table(&self) -> &[usize] {
        &self.add
    }

    pub fn mul_table(&self) -> &[usize] {
        &self.mul
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.labels.len() + b]
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.labels.len() + b]
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn one(&self) -> usize {
        self.one
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.size()
    }

    /// `{a : ab = 1 for some b}`.
    pub fn units(&self) -> &ElemSet {
        &self.units
    }

    pub fn nonunits(&self) -> ElemSet {
        self.units.complement()
    }

    pub fn is_unit(&self, a: usize) -> bool {
        self.units.contains(a)
    }

    /// Local test via closure of the nonunits under addition. When local, the
    /// nonunits form the unique maximal ideal, which is returned.
    pub fn is_local(&self) -> Option<Ideal> {
        let nonunits = self.nonunits();
        let closed = nonunits.iter().all(|a| nonunits.iter().all(|b| !self.is_unit(self.add(a, b))));
        closed.then_some(Ideal(nonunits))
    }

    pub fn full_set(&self) -> ElemSet {
        ElemSet::full(self.size())
    }

    pub fn zero_ideal(&self) -> Ideal {
        Ideal(ElemSet::singleton(self.size(), self.zero))
    }

    pub fn unit_ideal(&self) -> Ideal {
        Ideal(self.full_set())
    }

    /// Smallest ideal containing `seed`.
    pub fn ideal_generated(&self, seed: &ElemSet) -> Ideal {
        let n = self.size();
        let mut products = ElemSet::empty(n);
        for x in seed.iter() {
            for s in 0..n {
                products.insert(self.mul(s, x));
            }
        }
        Ideal(lattice::additive_closure(n, self.zero, &products, |a, b| self.add(a, b)))
    }

    pub fn principal_ideal(&self, a: usize) -> Ideal {
        self.ideal_generated(&ElemSet::singleton(self.size(), a))
    }

    /// Checks the ideal axioms on an explicit member list.
    pub fn ideal(&self, members: ElemSet) -> Result<Ideal> {
        self.check_universe(&members)?;
        if !members.contains(self.zero) {
            return Err(Error::violation(Axiom::ContainsZero, vec![self.zero]));
        }
        for a in members.iter() {
            for b in members.iter() {
                if !members.contains(self.add(a, b)) {
                    return Err(Error::violation(Axiom::ClosedUnderAdd, vec![a, b]));
                }
            }
            for s in self.elements() {
                if !members.contains(self.mul(s, a)) {
                    return Err(Error::violation(Axiom::ClosedUnderAction, vec![s, a]));
                }
            }
        }
        Ok(Ideal(members))
    }

    fn check_universe(&self, set: &ElemSet) -> Result<()> {
        if set.universe() != self.size() {
            return Err(Error::ParentMismatch(format!(
                "subset over {} elements used with a semiring of size {}",
                set.universe(),
                self.size()
            )));
        }
        Ok(())
    }

    /// All ideals, in canonical order (size, then members).
    pub fn enumerate_ideals(&self, cap: usize) -> Result<Vec<Ideal>> {
        let cyclic: Vec<ElemSet> = self.elements().map(|a| self.principal_ideal(a).0).collect();
        let all = lattice::enumerate_joins(self.zero_ideal().0, &cyclic, cap, |a, b| {
            lattice::sumset(a, b, |x, y| self.add(x, y))
        })?;
        Ok(all.into_iter().map(Ideal).collect())
    }

    /// Maximal elements among the proper ideals.
    pub fn maximal_ideals(&self, cap: usize) -> Result<Vec<Ideal>> {
        let proper: Vec<Ideal> = self.enumerate_ideals(cap)?.into_iter().filter(Ideal::is_proper).collect();
        Ok(proper
            .iter()
            .filter(|i| !proper.iter().any(|j| j != *i && i.is_subset(j)))
            .cloned()
            .collect())
    }

    /// A proper ideal is maximal when adjoining any outside element generates everything.
    pub fn is_maximal(&self, ideal: &Ideal) -> bool {
        ideal.is_proper()
            && self.elements().filter(|&a| !ideal.contains(a)).all(|a| {
                let mut seed = ideal.0.clone();
                seed.insert(a);
                !self.ideal_generated(&seed).is_proper()
            })
    }

    /// Set of pairwise products `{ij}`; the ideal product is generated by it.
    pub fn product_set(&self, i: &ElemSet, j: &ElemSet) -> ElemSet {
        let mut out = ElemSet::empty(self.size());
        let js: Vec<usize> = j.iter().collect();
        for a in i.iter() {
            for &b in &js {
                out.insert(self.mul(a, b));
            }
        }
        out
    }

    pub fn ideal_product(&self, i: &Ideal, j: &Ideal) -> Result<Ideal> {
        self.check_universe(&i.0)?;
        self.check_universe(&j.0)?;
        let products = self.product_set(&i.0, &j.0);
        Ok(Ideal(lattice::additive_closure(self.size(), self.zero, &products, |a, b| self.add(a, b))))
    }

    pub fn ideal_sum(&self, i: &Ideal, j: &Ideal) -> Result<Ideal> {
        self.check_universe(&i.0)?;
        self.check_universe(&j.0)?;
        Ok(Ideal(lattice::sumset(&i.0, &j.0, |a, b| self.add(a, b))))
    }

    /// `I^k` for `k >= 1`.
    pub fn ideal_power(&self, i: &Ideal, k: u32) -> Result<Ideal> {
        let mut acc = i.clone();
        for _ in 1..k {
            acc = self.ideal_product(&acc, i)?;
        }
        Ok(acc)
    }

    /// `x in I` and `x + y in I` imply `y in I`.
    pub fn is_subtractive_ideal(&self, ideal: &Ideal) -> bool {
        ideal
            .iter()
            .all(|x| self.elements().all(|y| !ideal.contains(self.add(x, y)) || ideal.contains(y)))
    }

    /// Decides prime, 1-absorbing prime and weakly 1-absorbing prime for a proper ideal.
    pub fn classify_ideal(&self, ideal: &Ideal) -> Result<IdealClassification> {
        self.check_universe(&ideal.0)?;
        if !ideal.is_proper() {
            return Err(Error::NotProper);
        }
        let n = self.size();
        let mut prime = Outcome::Holds;
        'prime: for a in 0..n {
            for b in 0..n {
                if ideal.contains(self.mul(a, b)) && !ideal.contains(a) && !ideal.contains(b) {
                    prime = Outcome::Fails((a, b));
                    break 'prime;
                }
            }
        }
        let nonunits: Vec<usize> = self.nonunits().iter().collect();
        let mut one_absorbing = Outcome::Holds;
        let mut weakly = Outcome::Holds;
        'scan: for &a in &nonunits {
            for &b in &nonunits {
                let ab = self.mul(a, b);
                if ideal.contains(ab) {
                    continue;
                }
                for &c in &nonunits {
                    let abc = self.mul(ab, c);
                    if ideal.contains(abc) && !ideal.contains(c) {
                        if one_absorbing.holds() {
                            one_absorbing = Outcome::Fails((a, b, c));
                        }
                        if abc != self.zero {
                            weakly = Outcome::Fails((a, b, c));
                            break 'scan;
                        }
                    }
                }
            }
        }
        Ok(IdealClassification { prime, one_absorbing, weakly_one_absorbing: weakly })
    }

    /// Checks that `members` contains one and is closed under products.
    pub fn mult_closed(&self, members: ElemSet) -> Result<MultClosedSet> {
        self.check_universe(&members)?;
        if !members.contains(self.one) {
            return Err(Error::violation(Axiom::ContainsOne, vec![self.one]));
        }
        for a in members.iter() {
            for b in members.iter() {
                if !members.contains(self.mul(a, b)) {
                    return Err(Error::violation(Axiom::ClosedUnderMul, vec![a, b]));
                }
            }
        }
        Ok(MultClosedSet(members))
    }

    /// Smallest multiplicatively closed set containing `seed`.
    pub fn mult_closed_generated(&self, seed: &ElemSet) -> MultClosedSet {
        let mut out = ElemSet::singleton(self.size(), self.one);
        let gens: Vec<usize> = seed.iter().collect();
        let mut frontier = vec![self.one];
        while let Some(x) = frontier.pop() {
            for &g in &gens {
                let y = self.mul(x, g);
                if out.insert(y) {
                    frontier.push(y);
                }
            }
        }
        MultClosedSet(out)
    }

    /// `S \ P` for a prime ideal `P`.
    pub fn prime_complement(&self, prime: &Ideal) -> Result<MultClosedSet> {
        self.mult_closed(prime.0.complement())
    }

    pub fn format_set(&self, set: &ElemSet) -> String {
        let items: Vec<&str> = set.iter().map(|a| self.label(a)).collect();
        format!("{{{}}}", items.join(","))
    }
}

impl fmt::Debug for FiniteSemiring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteSemiring")
            .field("labels", &self.labels)
            .field("zero", &self.zero)
            .field("one", &self.one)
            .finish_non_exhaustive()
    }
}
