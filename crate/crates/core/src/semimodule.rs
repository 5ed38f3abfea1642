//! Finite semimodules over a [`FiniteSemiring`], their subsemimodule lattice,
//! colon ideals, residuals and the structural classes used as hypotheses
//! (subtractive, strong, multiplication, MC, m-cyclic).

use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::classify::Outcome;
use crate::elemset::ElemSet;
use crate::error::{Axiom, AxiomViolation, Error, Result};
use crate::lattice::{self, DEFAULT_CAP};
use crate::semiring::{subset_newtype, table_violations, FiniteSemiring, Ideal};

/// A validated unital semimodule: a commutative monoid with a scalar action.
pub struct FiniteSemimodule {
    scalars: Arc<FiniteSemiring>,
    labels: Vec<String>,
    add: Vec<usize>,
    zero: usize,
    /// Row-major over (scalar, element).
    action: Vec<usize>,
    multiplication: OnceLock<Option<bool>>,
}

/// A subsemimodule: contains zero, closed under addition and the scalar action.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subsemimodule(ElemSet);

subset_newtype!(Subsemimodule);

/// How `subsemimodule_product` treats a parent that is not a multiplication semimodule.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ProductMode {
    /// Refuse with [`Error::NotMultiplication`].
    #[default]
    Strict,
    /// Compute the colon-ideal product anyway.
    Lax,
}

impl Clone for FiniteSemimodule {
    fn clone(&self) -> Self {
        FiniteSemimodule {
            scalars: Arc::clone(&self.scalars),
            labels: self.labels.clone(),
            add: self.add.clone(),
            zero: self.zero,
            action: self.action.clone(),
            multiplication: self.multiplication.clone(),
        }
    }
}

impl PartialEq for FiniteSemimodule {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.scalars, &other.scalars) || self.scalars == other.scalars)
            && self.labels == other.labels
            && self.add == other.add
            && self.zero == other.zero
            && self.action == other.action
    }
}

impl Eq for FiniteSemimodule {}

impl fmt::Debug for FiniteSemimodule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteSemimodule")
            .field("scalars", &self.scalars.labels())
            .field("labels", &self.labels)
            .finish_non_exhaustive()
    }
}

impl FiniteSemimodule {
    pub fn new(
        scalars: Arc<FiniteSemiring>,
        labels: Vec<String>,
        add: Vec<usize>,
        zero: usize,
        action: Vec<usize>,
    ) -> Result<Self> {
        let violations = Self::axiom_violations(&scalars, labels.len(), &add, zero, &action);
        if !violations.is_empty() {
            return Err(Error::AxiomViolation(violations));
        }
        Ok(Self::new_unchecked(scalars, labels, add, zero, action))
    }

    pub(crate) fn new_unchecked(
        scalars: Arc<FiniteSemiring>,
        labels: Vec<String>,
        add: Vec<usize>,
        zero: usize,
        action: Vec<usize>,
    ) -> Self {
        FiniteSemimodule { scalars, labels, add, zero, action, multiplication: OnceLock::new() }
    }

    /// One entry per failed law with its first witness. Witnesses are `(x, y, z)`
    /// for monoid laws and `(s, t, x)` or `(s, x, y)` for action laws.
    pub fn axiom_violations(
        scalars: &FiniteSemiring,
        n: usize,
        add: &[usize],
        zero: usize,
        action: &[usize],
    ) -> Vec<AxiomViolation> {
        let k = scalars.size();
        let mut shape = table_violations(n, &[("add", add)], &[zero]);
        if action.len() != k * n {
            shape.push(AxiomViolation { axiom: Axiom::TableShape, witness: vec![1, action.len()] });
        } else if let Some(pos) = action.iter().position(|&v| v >= n) {
            shape.push(AxiomViolation { axiom: Axiom::ElementRange, witness: vec![1, pos, action[pos]] });
        }
        if !shape.is_empty() {
            return shape;
        }
        let p = |x: usize, y: usize| add[x * n + y];
        let act = |s: usize, x: usize| action[s * n + x];
        let mut out = Vec::new();
        let mut push = |axiom, w: Option<Vec<usize>>| {
            if let Some(witness) = w {
                out.push(AxiomViolation { axiom, witness });
            }
        };
        let pairs = |n: usize| (0..n).flat_map(move |x| (0..n).map(move |y| (x, y)));
        push(Axiom::AddCommutative, pairs(n).find(|&(x, y)| p(x, y) != p(y, x)).map(|(x, y)| vec![x, y]));
        push(
            Axiom::AddAssociative,
            pairs(n)
                .flat_map(|(x, y)| (0..n).map(move |z| (x, y, z)))
                .find(|&(x, y, z)| p(p(x, y), z) != p(x, p(y, z)))
                .map(|(x, y, z)| vec![x, y, z]),
        );
        push(Axiom::AddIdentity, (0..n).find(|&x| p(zero, x) != x).map(|x| vec![x]));
        let triples = |a: usize, b: usize, c: usize| {
            (0..a).flat_map(move |i| (0..b).flat_map(move |j| (0..c).map(move |l| (i, j, l))))
        };
        push(
            Axiom::ActionOverModuleSum,
            triples(k, n, n)
                .find(|&(s, x, y)| act(s, p(x, y)) != p(act(s, x), act(s, y)))
                .map(|(s, x, y)| vec![s, x, y]),
        );
        push(
            Axiom::ActionOverScalarSum,
            triples(k, k, n)
                .find(|&(s, t, x)| act(scalars.add(s, t), x) != p(act(s, x), act(t, x)))
                .map(|(s, t, x)| vec![s, t, x]),
        );
        push(
            Axiom::ActionCompatible,
            triples(k, k, n)
                .find(|&(s, t, x)| act(scalars.mul(s, t), x) != act(s, act(t, x)))
                .map(|(s, t, x)| vec![s, t, x]),
        );
        push(Axiom::ActionUnital, (0..n).find(|&x| act(scalars.one(), x) != x).map(|x| vec![x]));
        push(Axiom::ActionZeroScalar, (0..n).find(|&x| act(scalars.zero(), x) != zero).map(|x| vec![x]));
        push(Axiom::ActionZeroElement, (0..k).find(|&s| act(s, zero) != zero).map(|s| vec![s]));
        out
    }

    pub fn scalars(&self) -> &FiniteSemiring {
        &self.scalars
    }

    pub fn scalars_arc(&self) -> &Arc<FiniteSemiring> {
        &self.scalars
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn add_table(&self) -> &[usize] {
        &self.add
    }

    pub fn action_table(&self) -> &[usize] {
        &self.action
    }

    #[inline]
    pub fn add(&self, x: usize, y: usize) -> usize {
        self.add[x * self.labels.len() + y]
    }

    #[inline]
    pub fn act(&self, s: usize, x: usize) -> usize {
        self.action[s * self.labels.len() + x]
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.size()
    }

    pub fn same_scalars(&self, other: &FiniteSemimodule) -> bool {
        Arc::ptr_eq(&self.scalars, &other.scalars) || self.scalars == other.scalars
    }

    fn check_universe(&self, set: &ElemSet) -> Result<()> {
        if set.universe() != self.size() {
            return Err(Error::ParentMismatch(format!(
                "subset over {} elements used with a semimodule of size {}",
                set.universe(),
                self.size()
            )));
        }
        Ok(())
    }

    fn check_scalar_universe(&self, set: &ElemSet) -> Result<()> {
        if set.universe() != self.scalars.size() {
            return Err(Error::ParentMismatch(format!(
                "scalar subset over {} elements used with scalars of size {}",
                set.universe(),
                self.scalars.size()
            )));
        }
        Ok(())
    }

    pub fn zero_submodule(&self) -> Subsemimodule {
        Subsemimodule(ElemSet::singleton(self.size(), self.zero))
    }

    pub fn whole(&self) -> Subsemimodule {
        Subsemimodule(ElemSet::full(self.size()))
    }

    /// Checks the subsemimodule axioms on an explicit member list.
    pub fn subsemimodule(&self, members: ElemSet) -> Result<Subsemimodule> {
        self.check_universe(&members)?;
        if !members.contains(self.zero) {
            return Err(Error::violation(Axiom::ContainsZero, vec![self.zero]));
        }
        for x in members.iter() {
            for y in members.iter() {
                if !members.contains(self.add(x, y)) {
                    return Err(Error::violation(Axiom::ClosedUnderAdd, vec![x, y]));
                }
            }
            for s in self.scalars.elements() {
                if !members.contains(self.act(s, x)) {
                    return Err(Error::violation(Axiom::ClosedUnderAction, vec![s, x]));
                }
            }
        }
        Ok(Subsemimodule(members))
    }

    /// `{s x : s in S, x in seed}` closed under finite sums.
    pub fn generated(&self, seed: &ElemSet) -> Subsemimodule {
        let mut products = ElemSet::empty(self.size());
        for x in seed.iter() {
            for s in self.scalars.elements() {
                products.insert(self.act(s, x));
            }
        }
        Subsemimodule(lattice::additive_closure(self.size(), self.zero, &products, |a, b| self.add(a, b)))
    }

    pub fn cyclic(&self, x: usize) -> Subsemimodule {
        self.generated(&ElemSet::singleton(self.size(), x))
    }

    /// The full subsemimodule lattice in canonical order.
    pub fn enumerate_subsemimodules(&self, cap: usize) -> Result<Vec<Subsemimodule>> {
        let cyclic: Vec<ElemSet> = self.elements().map(|x| self.cyclic(x).0).collect();
        let all = lattice::enumerate_joins(self.zero_submodule().0, &cyclic, cap, |a, b| {
            lattice::sumset(a, b, |x, y| self.add(x, y))
        })?;
        Ok(all.into_iter().map(Subsemimodule).collect())
    }

    pub fn join(&self, a: &Subsemimodule, b: &Subsemimodule) -> Subsemimodule {
        Subsemimodule(lattice::sumset(&a.0, &b.0, |x, y| self.add(x, y)))
    }

    /// `(N :_S K) = {s : sK ⊆ N}` for arbitrary member sets.
    pub fn colon_set(&self, n: &ElemSet, k: &ElemSet) -> ElemSet {
        let ks: Vec<usize> = k.iter().collect();
        ElemSet::from_iter(
            self.scalars.size(),
            self.scalars.elements().filter(|&s| ks.iter().all(|&x| n.contains(self.act(s, x)))),
        )
    }

    /// `(N :_S M)`.
    pub fn colon_ideal(&self, n: &Subsemimodule) -> Result<Ideal> {
        self.check_universe(&n.0)?;
        self.scalars.ideal(self.colon_set(&n.0, &ElemSet::full(self.size())))
    }

    /// `(N :_M J) = {m : jm in N for every j in J}`.
    pub fn residual(&self, n: &Subsemimodule, j: &ElemSet) -> Result<Subsemimodule> {
        self.check_universe(&n.0)?;
        self.check_scalar_universe(j)?;
        let js: Vec<usize> = j.iter().collect();
        let members = ElemSet::from_iter(
            self.size(),
            self.elements().filter(|&m| js.iter().all(|&s| n.contains(self.act(s, m)))),
        );
        Ok(Subsemimodule(members))
    }

    /// `Ann(M) = (0 :_S M)`.
    pub fn annihilator(&self) -> Ideal {
        self.colon_ideal(&self.zero_submodule()).expect("zero submodule lives in this module")
    }

    /// `(0 :_S x)`, the annihilator of the cyclic subsemimodule `Sx`.
    pub fn element_annihilator(&self, x: usize) -> Ideal {
        let sx = self.cyclic(x);
        let zero = ElemSet::singleton(self.size(), self.zero);
        self.scalars.ideal(self.colon_set(&zero, &sx.0)).expect("annihilators are ideals")
    }

    /// `x in N` and `x + y in N` imply `y in N`.
    pub fn is_subtractive(&self, n: &Subsemimodule) -> bool {
        n.iter().all(|x| self.elements().all(|y| !n.contains(self.add(x, y)) || n.contains(y)))
    }

    /// Every member has an additive inverse inside `N`.
    pub fn is_strong(&self, n: &Subsemimodule) -> bool {
        n.iter().all(|x| n.iter().any(|y| self.add(x, y) == self.zero))
    }

    /// `{p m : p in P, m in K}` as a set.
    pub fn scale_set(&self, p: &ElemSet, k: &ElemSet) -> ElemSet {
        let mut out = ElemSet::empty(self.size());
        let ks: Vec<usize> = k.iter().collect();
        for s in p.iter() {
            for &x in &ks {
                out.insert(self.act(s, x));
            }
        }
        out
    }

    /// Subsemimodule generated by `{i m : i in I, m in M}`.
    pub fn ideal_action(&self, ideal: &Ideal) -> Result<Subsemimodule> {
        self.check_scalar_universe(ideal.members())?;
        Ok(self.scalar_set_action(ideal.members()))
    }

    /// Subsemimodule generated by `{p m : p in P, m in M}` for any scalar subset `P`.
    pub fn scalar_set_action(&self, p: &ElemSet) -> Subsemimodule {
        let products = self.scale_set(p, &ElemSet::full(self.size()));
        Subsemimodule(lattice::additive_closure(self.size(), self.zero, &products, |a, b| self.add(a, b)))
    }

    /// Whether every subsemimodule `N` equals `(N :_S M)M`; the first failing `N`
    /// in canonical order is the witness.
    pub fn is_multiplication(&self, cap: usize) -> Result<Outcome<Subsemimodule>> {
        for n in self.enumerate_subsemimodules(cap)? {
            let back = self.ideal_action(&self.colon_ideal(&n)?)?;
            if back != n {
                return Ok(Outcome::Fails(n));
            }
        }
        Ok(Outcome::Holds)
    }

    /// Cached multiplication test at the default cap; `None` when the lattice exceeds it.
    pub fn is_multiplication_cached(&self) -> Option<bool> {
        *self
            .multiplication
            .get_or_init(|| self.is_multiplication(DEFAULT_CAP).ok().map(|o| o.holds()))
    }

    /// Multiplicative cancellation: `sx = s'x` with `x != 0` forces `s = s'`.
    ///
    /// The witness `(s, s', x)` with `s < s'` is the first by `x`, then `s`, then `s'`,
    /// among collisions with `s != 0`. Collisions with the zero scalar are annihilator
    /// witnesses and are only reported when no other collision exists.
    pub fn is_mc(&self) -> Outcome<(usize, usize, usize)> {
        let k = self.scalars.size();
        let zero_s = self.scalars.zero();
        let mut zero_hit = None;
        for x in self.elements().filter(|&x| x != self.zero) {
            for s in 0..k {
                for t in (s + 1)..k {
                    if self.act(s, x) == self.act(t, x) {
                        if s != zero_s && t != zero_s {
                            return Outcome::Fails((s, t, x));
                        }
                        zero_hit.get_or_insert((s.min(t), s.max(t), x));
                    }
                }
            }
        }
        match zero_hit {
            Some(w) => Outcome::Fails(w),
            None => Outcome::Holds,
        }
    }

    /// Searches `(s, q, x)` with `q` in the maximal ideal, `s + q = 1` and `sM ⊆ Sx`.
    pub fn is_m_cyclic(&self, maximal: &Ideal) -> Result<Option<(usize, usize, usize)>> {
        self.check_scalar_universe(maximal.members())?;
        if !self.scalars.is_maximal(maximal) {
            return Err(Error::NotMaximal);
        }
        let one = self.scalars.one();
        let cyclic: Vec<Subsemimodule> = self.elements().map(|x| self.cyclic(x)).collect();
        for s in self.scalars.elements() {
            let sm = self.scale_set(&ElemSet::singleton(self.scalars.size(), s), &ElemSet::full(self.size()));
            for q in maximal.iter() {
                if self.scalars.add(s, q) != one {
                    continue;
                }
                if let Some(x) = self.elements().find(|&x| sm.is_subset(cyclic[x].members())) {
                    return Ok(Some((s, q, x)));
                }
            }
        }
        Ok(None)
    }

    /// `A B := (A :_S M)(B :_S M) M`.
    pub fn subsemimodule_product(&self, a: &Subsemimodule, b: &Subsemimodule, mode: ProductMode) -> Result<Subsemimodule> {
        if mode == ProductMode::Strict {
            match self.is_multiplication_cached() {
                Some(true) => {}
                Some(false) => return Err(Error::NotMultiplication),
                None => return Err(Error::CapExceeded { cap: DEFAULT_CAP }),
            }
        }
        let ca = self.colon_ideal(a)?;
        let cb = self.colon_ideal(b)?;
        self.ideal_action(&self.scalars.ideal_product(&ca, &cb)?)
    }

    pub fn format_set(&self, set: &ElemSet) -> String {
        let items: Vec<&str> = set.iter().map(|x| self.label(x)).collect();
        format!("{{{}}}", items.join(","))
    }
}
