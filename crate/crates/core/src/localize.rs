//! Localization of a semimodule at a multiplicatively closed set of scalars.
//!
//! Fractions `m/t` are pairs `(m, t)` with `(m, t) ~ (m', t')` when
//! `s t m' = s t' m` for some `s` in `T`. Each class is represented by its
//! smallest pair in (module index, position in `T`) order, and classes are
//! numbered in order of their representatives.

use std::sync::Arc;

use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::semimodule::{FiniteSemimodule, Subsemimodule};
use crate::semiring::{FiniteSemiring, MultClosedSet};

/// Partition of `carrier × T` into fraction classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FractionClasses {
    tset: Vec<usize>,
    /// Class of pair `x * |T| + i` for the fraction `x / tset[i]`.
    class_of: Vec<usize>,
    reps: Vec<(usize, usize)>,
}

impl FractionClasses {
    fn compute(size: usize, tset: &[usize], act: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let k = tset.len();
        let pairs = size * k;
        let related = |p: usize, q: usize| {
            let (m, t) = (p / k, tset[p % k]);
            let (m2, t2) = (q / k, tset[q % k]);
            let lhs = act(t, m2);
            let rhs = act(t2, m);
            tset.iter().any(|&s| act(s, lhs) == act(s, rhs))
        };
        let rows: Vec<ElemSet> = (0..pairs).map(|p| ElemSet::from_iter(pairs, (0..pairs).filter(|&q| related(p, q)))).collect();
        // An equivalence relation: reflexive, and related pairs have identical rows.
        for p in 0..pairs {
            if !rows[p].contains(p) {
                return Err(Error::IllDefined(vec![p]));
            }
            if let Some(q) = rows[p].iter().find(|&q| rows[q] != rows[p]) {
                return Err(Error::IllDefined(vec![p, q]));
            }
        }
        let mut class_of = vec![usize::MAX; pairs];
        let mut reps = Vec::new();
        for p in 0..pairs {
            if class_of[p] == usize::MAX {
                for q in rows[p].iter() {
                    class_of[q] = reps.len();
                }
                reps.push((p / k, tset[p % k]));
            }
        }
        Ok(FractionClasses { tset: tset.to_vec(), class_of, reps })
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    /// Class of the fraction `x / t`; `None` when `t` is not in `T`.
    pub fn class(&self, x: usize, t: usize) -> Option<usize> {
        let i = self.tset.iter().position(|&u| u == t)?;
        Some(self.class_of[x * self.tset.len() + i])
    }

    /// Smallest `(x, t)` in the class.
    pub fn representative(&self, c: usize) -> (usize, usize) {
        self.reps[c]
    }

    fn pairs(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        let k = self.tset.len();
        self.class_of.iter().enumerate().map(move |(p, &c)| (p / k, self.tset[p % k], c))
    }
}

/// `T⁻¹M` over `T⁻¹S`.
#[derive(Debug, Clone)]
pub struct LocalizedSemimodule {
    base: FiniteSemimodule,
    tset: MultClosedSet,
    scalar_classes: FractionClasses,
    classes: FractionClasses,
    /// `None` when `0 ∈ T`: then `T⁻¹S` has `1 = 0` and is not a semiring in our sense.
    module: Option<FiniteSemimodule>,
}

/// Builds `T⁻¹M` and checks that the induced tables do not depend on representatives.
pub fn localize(m: &FiniteSemimodule, t: &MultClosedSet) -> Result<LocalizedSemimodule> {
    let s = m.scalars();
    if t.members().universe() != s.size() {
        return Err(Error::ParentMismatch("multiplicative set from another semiring".into()));
    }
    let tlist = t.to_vec();
    let scalar_classes = FractionClasses::compute(s.size(), &tlist, |a, b| s.mul(a, b))?;
    let classes = FractionClasses::compute(m.size(), &tlist, |a, x| m.act(a, x))?;
    let module = if t.contains(s.zero()) {
        None
    } else {
        let ring = Arc::new(localized_ring(s, &scalar_classes)?);
        Some(localized_module(m, &ring, &scalar_classes, &classes)?)
    };
    Ok(LocalizedSemimodule { base: m.clone(), tset: t.clone(), scalar_classes, classes, module })
}

/// Induces a binary table on classes and checks every pair of representatives.
fn induced_table(
    lhs: &FractionClasses,
    rhs: &FractionClasses,
    out: &FractionClasses,
    op: impl Fn((usize, usize), (usize, usize)) -> (usize, usize),
) -> Result<Vec<usize>> {
    let (nl, nr) = (lhs.len(), rhs.len());
    let mut table = vec![0; nl * nr];
    for a in 0..nl {
        for b in 0..nr {
            let (x, t) = op(lhs.representative(a), rhs.representative(b));
            table[a * nr + b] = out.class(x, t).expect("T is multiplicatively closed");
        }
    }
    for (x1, t1, c1) in lhs.pairs() {
        for (x2, t2, c2) in rhs.pairs() {
            let (x, t) = op((x1, t1), (x2, t2));
            if out.class(x, t) != Some(table[c1 * nr + c2]) {
                return Err(Error::IllDefined(vec![x1, t1, x2, t2]));
            }
        }
    }
    Ok(table)
}

fn fraction_labels(labels: &[String], classes: &FractionClasses) -> Vec<String> {
    (0..classes.len())
        .map(|c| {
            let (x, t) = classes.representative(c);
            format!("{}/{}", labels[x], labels[t])
        })
        .collect()
}

fn localized_ring(s: &FiniteSemiring, sc: &FractionClasses) -> Result<FiniteSemiring> {
    let add = induced_table(sc, sc, sc, |(a, t), (b, u)| (s.add(s.mul(u, a), s.mul(t, b)), s.mul(t, u)))?;
    let mul = induced_table(sc, sc, sc, |(a, t), (b, u)| (s.mul(a, b), s.mul(t, u)))?;
    let one = s.one();
    let zero = sc.class(s.zero(), one).expect("1 is in T");
    let unit = sc.class(one, one).expect("1 is in T");
    FiniteSemiring::new(fraction_labels(s.labels(), sc), add, mul, zero, unit)
}

fn localized_module(
    m: &FiniteSemimodule,
    ring: &Arc<FiniteSemiring>,
    sc: &FractionClasses,
    mc: &FractionClasses,
) -> Result<FiniteSemimodule> {
    let s = m.scalars();
    let add = induced_table(mc, mc, mc, |(x, t), (y, u)| (m.add(m.act(u, x), m.act(t, y)), s.mul(t, u)))?;
    let action = induced_table(sc, mc, mc, |(a, t), (x, u)| (m.act(a, x), s.mul(t, u)))?;
    let labels = mc
        .reps
        .iter()
        .map(|&(x, t)| format!("{}/{}", m.label(x), s.label(t)))
        .collect();
    let zero = mc.class(m.zero(), s.one()).expect("1 is in T");
    FiniteSemimodule::new(Arc::clone(ring), labels, add, zero, action)
}

impl LocalizedSemimodule {
    pub fn base(&self) -> &FiniteSemimodule {
        &self.base
    }

    pub fn tset(&self) -> &MultClosedSet {
        &self.tset
    }

    /// Number of classes of `M × T`.
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn classes(&self) -> &FractionClasses {
        &self.classes
    }

    pub fn scalar_classes(&self) -> &FractionClasses {
        &self.scalar_classes
    }

    pub fn is_collapsed(&self) -> bool {
        self.module.is_none()
    }

    /// `T⁻¹M` as a semimodule over `T⁻¹S`, unless `0 ∈ T`.
    pub fn module(&self) -> Option<&FiniteSemimodule> {
        self.module.as_ref()
    }

    /// `T⁻¹N`: the classes of `n/t` with `n ∈ N`. `None` when `0 ∈ T`.
    pub fn localize_subsemimodule(&self, n: &Subsemimodule) -> Result<Option<Subsemimodule>> {
        if n.members().universe() != self.base.size() {
            return Err(Error::ParentMismatch("subsemimodule from another module".into()));
        }
        let Some(module) = &self.module else { return Ok(None) };
        let members = ElemSet::from_iter(
            module.size(),
            n.iter().flat_map(|x| self.tset.iter().map(move |t| (x, t))).map(|(x, t)| {
                self.classes.class(x, t).expect("t is in T")
            }),
        );
        module.subsemimodule(members).map(Some)
    }
}
