//! Builders for the standard semirings and semimodules, and semimodule
//! homomorphisms with image, preimage and kernel.

use std::sync::Arc;

use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::semimodule::{FiniteSemimodule, Subsemimodule};
use crate::semiring::FiniteSemiring;

fn table(n: usize, f: impl Fn(usize, usize) -> usize) -> Vec<usize> {
    (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).map(|(a, b)| f(a, b)).collect()
}

fn numeric_labels(n: usize) -> Vec<String> {
    (0..n).map(|i| i.to_string()).collect()
}

/// The Boolean semiring `{0, 1}` with `1 + 1 = 1`.
pub fn make_boolean() -> FiniteSemiring {
    FiniteSemiring::new(numeric_labels(2), vec![0, 1, 1, 1], vec![0, 0, 0, 1], 0, 1).expect("boolean semiring")
}

/// Integers modulo `n`.
pub fn make_zmod(n: usize) -> Result<FiniteSemiring> {
    if n < 2 {
        return Err(Error::InvalidParam(format!("zmod needs n >= 2, got {n}")));
    }
    FiniteSemiring::new(numeric_labels(n), table(n, |a, b| (a + b) % n), table(n, |a, b| (a * b) % n), 0, 1)
}

/// Class representative of `k` in the quotient of the non-negative integers that
/// identifies `i` and `j` once both are at least `r` and `i ≡ j (mod d)`.
pub fn ntrunc_normalize(r: usize, d: usize, k: usize) -> usize {
    if k < r {
        k
    } else {
        r + (k - r) % d
    }
}

/// The monogenic quotient semiring with carrier `{0, .., r + d - 1}`.
pub fn make_ntrunc(r: usize, d: usize) -> Result<FiniteSemiring> {
    if r < 1 || d < 1 {
        return Err(Error::InvalidParam(format!("ntrunc needs r >= 1 and d >= 1, got r={r}, d={d}")));
    }
    let n = r + d;
    let norm = |k| ntrunc_normalize(r, d, k);
    FiniteSemiring::new(numeric_labels(n), table(n, |a, b| norm(a + b)), table(n, |a, b| norm(a * b)), 0, 1)
}

/// Pairs are indexed with the first coordinate varying fastest.
fn pair_index(n1: usize, a: usize, b: usize) -> usize {
    a + n1 * b
}

fn pair_labels(l1: &[String], l2: &[String]) -> Vec<String> {
    l2.iter().flat_map(|b| l1.iter().map(move |a| format!("({a},{b})"))).collect()
}

/// Componentwise product semiring.
pub fn make_product(s1: &FiniteSemiring, s2: &FiniteSemiring) -> Result<FiniteSemiring> {
    let (n1, n2) = (s1.size(), s2.size());
    let n = n1 * n2;
    let split = |x: usize| (x % n1, x / n1);
    let add = table(n, |x, y| {
        let ((a1, b1), (a2, b2)) = (split(x), split(y));
        pair_index(n1, s1.add(a1, a2), s2.add(b1, b2))
    });
    let mul = table(n, |x, y| {
        let ((a1, b1), (a2, b2)) = (split(x), split(y));
        pair_index(n1, s1.mul(a1, a2), s2.mul(b1, b2))
    });
    FiniteSemiring::new(
        pair_labels(s1.labels(), s2.labels()),
        add,
        mul,
        pair_index(n1, s1.zero(), s2.zero()),
        pair_index(n1, s1.one(), s2.one()),
    )
}

/// A semiring acting on itself by multiplication.
pub fn module_self(s: Arc<FiniteSemiring>) -> FiniteSemimodule {
    let labels = s.labels().to_vec();
    let add = s.add_table().to_vec();
    let action = s.mul_table().to_vec();
    let zero = s.zero();
    FiniteSemimodule::new_unchecked(s, labels, add, zero, action)
}

/// `Z_n` with `s · x = (s mod n) x mod n`, reading each scalar label as an integer.
pub fn module_zmod_action(s: Arc<FiniteSemiring>, n: usize) -> Result<FiniteSemimodule> {
    if n < 1 {
        return Err(Error::InvalidParam("zmod-action needs n >= 1".into()));
    }
    let values: Vec<usize> = s
        .labels()
        .iter()
        .map(|l| l.parse::<usize>().map_err(|_| Error::InvalidParam(format!("scalar label `{l}` is not an integer"))))
        .collect::<Result<_>>()?;
    let add = table(n, |a, b| (a + b) % n);
    let action: Vec<usize> = values.iter().flat_map(|&v| (0..n).map(move |x| (v % n) * x % n)).collect();
    FiniteSemimodule::new(s, numeric_labels(n), add, 0, action)
}

/// Componentwise product semimodule over shared scalars.
pub fn module_product(m1: &FiniteSemimodule, m2: &FiniteSemimodule) -> Result<FiniteSemimodule> {
    if !m1.same_scalars(m2) {
        return Err(Error::ParentMismatch("product factors have different scalars".into()));
    }
    let (n1, n2) = (m1.size(), m2.size());
    let n = n1 * n2;
    let split = |x: usize| (x % n1, x / n1);
    let add = table(n, |x, y| {
        let ((a1, b1), (a2, b2)) = (split(x), split(y));
        pair_index(n1, m1.add(a1, a2), m2.add(b1, b2))
    });
    let k = m1.scalars().size();
    let action: Vec<usize> = (0..k)
        .flat_map(|s| {
            (0..n).map(move |x| {
                let (a, b) = split(x);
                pair_index(n1, m1.act(s, a), m2.act(s, b))
            })
        })
        .collect();
    FiniteSemimodule::new(
        Arc::clone(m1.scalars_arc()),
        pair_labels(m1.labels(), m2.labels()),
        add,
        pair_index(n1, m1.zero(), m2.zero()),
        action,
    )
}

/// A validated semimodule homomorphism between modules over the same scalars.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomTable {
    source: FiniteSemimodule,
    target: FiniteSemimodule,
    map: Vec<usize>,
}

/// Checks additivity, linearity and `f(0) = 0`.
pub fn hom_validate(source: FiniteSemimodule, target: FiniteSemimodule, map: Vec<usize>) -> Result<HomTable> {
    if !source.same_scalars(&target) {
        return Err(Error::ParentMismatch("homomorphism between modules over different scalars".into()));
    }
    if map.len() != source.size() {
        return Err(Error::NotAHomomorphism { axiom: "total map", witness: vec![map.len()] });
    }
    if let Some(x) = map.iter().position(|&y| y >= target.size()) {
        return Err(Error::NotAHomomorphism { axiom: "target range", witness: vec![x, map[x]] });
    }
    if map[source.zero()] != target.zero() {
        return Err(Error::NotAHomomorphism { axiom: "f(0) = 0", witness: vec![source.zero()] });
    }
    for x in source.elements() {
        for y in source.elements() {
            if map[source.add(x, y)] != target.add(map[x], map[y]) {
                return Err(Error::NotAHomomorphism { axiom: "f(x+y) = f(x)+f(y)", witness: vec![x, y] });
            }
        }
    }
    for s in source.scalars().elements() {
        for x in source.elements() {
            if map[source.act(s, x)] != target.act(s, map[x]) {
                return Err(Error::NotAHomomorphism { axiom: "f(sx) = sf(x)", witness: vec![s, x] });
            }
        }
    }
    Ok(HomTable { source, target, map })
}

/// Builds the map from a function on carrier indices and validates it.
pub fn hom_from_fn(source: &FiniteSemimodule, target: &FiniteSemimodule, f: impl Fn(usize) -> usize) -> Result<HomTable> {
    let map = source.elements().map(f).collect();
    hom_validate(source.clone(), target.clone(), map)
}

/// `x ↦ s x`, an endomorphism because the scalars commute.
pub fn scalar_endomorphism(m: &FiniteSemimodule, s: usize) -> HomTable {
    HomTable { source: m.clone(), target: m.clone(), map: m.elements().map(|x| m.act(s, x)).collect() }
}

impl HomTable {
    pub fn source(&self) -> &FiniteSemimodule {
        &self.source
    }

    pub fn target(&self) -> &FiniteSemimodule {
        &self.target
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn is_surjective(&self) -> bool {
        ElemSet::from_iter(self.target.size(), self.map.iter().copied()).is_full()
    }

    pub fn image(&self, n: &Subsemimodule) -> Subsemimodule {
        let members = ElemSet::from_iter(self.target.size(), n.iter().map(|x| self.map[x]));
        self.target.subsemimodule(members).expect("images of subsemimodules are subsemimodules")
    }

    pub fn full_image(&self) -> Subsemimodule {
        self.image(&self.source.whole())
    }

    pub fn preimage(&self, n: &Subsemimodule) -> Subsemimodule {
        let members = ElemSet::from_iter(self.source.size(), self.source.elements().filter(|&x| n.contains(self.map[x])));
        self.source.subsemimodule(members).expect("preimages of subsemimodules are subsemimodules")
    }

    pub fn kernel(&self) -> Subsemimodule {
        self.preimage(&self.target.zero_submodule())
    }
}
