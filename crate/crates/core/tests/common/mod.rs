//! Naive reference implementations over bitmasks. They use only the raw
//! operation tables, never the library's closures, lattices or predicates.
#![allow(dead_code)]

use std::sync::Arc;

use semimod::constructions::{make_ntrunc, make_zmod, module_self, module_zmod_action};
use semimod::{ElemSet, FiniteSemimodule, FiniteSemiring};

pub type Mask = u64;

pub fn mask(set: &ElemSet) -> Mask {
    set.iter().fold(0, |acc, x| acc | 1 << x)
}

pub fn mask_of(items: &[usize]) -> Mask {
    items.iter().fold(0, |acc, &x| acc | 1 << x)
}

/// Elements past 63 are never members, so small sets of large carriers still work.
pub fn has(m: Mask, x: usize) -> bool {
    x < 64 && m >> x & 1 == 1
}

pub fn members(m: Mask) -> Vec<usize> {
    (0..64).filter(|&x| has(m, x)).collect()
}

pub fn full(n: usize) -> Mask {
    if n == 64 {
        Mask::MAX
    } else {
        (1 << n) - 1
    }
}

pub fn subset(a: Mask, b: Mask) -> bool {
    a & !b == 0
}

pub fn zmod(n: usize) -> Arc<FiniteSemiring> {
    Arc::new(make_zmod(n).unwrap())
}

pub fn ntrunc(r: usize, d: usize) -> Arc<FiniteSemiring> {
    Arc::new(make_ntrunc(r, d).unwrap())
}

pub fn own(s: &Arc<FiniteSemiring>) -> FiniteSemimodule {
    module_self(Arc::clone(s))
}

pub fn over(s: &Arc<FiniteSemiring>, n: usize) -> FiniteSemimodule {
    module_zmod_action(Arc::clone(s), n).unwrap()
}

pub fn units(s: &FiniteSemiring) -> Mask {
    (0..s.size()).filter(|&a| (0..s.size()).any(|b| s.mul(a, b) == s.one())).fold(0, |acc, a| acc | 1 << a)
}

pub fn nonunits(s: &FiniteSemiring) -> Vec<usize> {
    let u = units(s);
    (0..s.size()).filter(|&a| !has(u, a)).collect()
}

/// Local iff the nonunits are closed under addition.
pub fn local(s: &FiniteSemiring) -> bool {
    let nu = nonunits(s);
    nu.iter().all(|&a| nu.iter().all(|&b| !has(units(s), s.add(a, b))))
}

pub fn is_ideal(s: &FiniteSemiring, m: Mask) -> bool {
    let n = s.size();
    has(m, s.zero())
        && (0..n).all(|a| !has(m, a) || (0..n).all(|b| (!has(m, b) || has(m, s.add(a, b))) && has(m, s.mul(b, a))))
}

pub fn is_sub(md: &FiniteSemimodule, m: Mask) -> bool {
    let n = md.size();
    let k = md.scalars().size();
    has(m, md.zero())
        && (0..n).all(|x| !has(m, x) || ((0..n).all(|y| !has(m, y) || has(m, md.add(x, y))) && (0..k).all(|s| has(m, md.act(s, x)))))
}

/// Every subset of a carrier of at most 24 elements passing `keep`, in mask order.
pub fn subsets_where(n: usize, keep: impl Fn(Mask) -> bool) -> Vec<Mask> {
    assert!(n <= 24);
    (0..1u64 << n).filter(|&m| has(m, 0) && keep(m)).collect()
}

pub fn ideals(s: &FiniteSemiring) -> Vec<Mask> {
    subsets_where(s.size(), |m| is_ideal(s, m))
}

pub fn lattice(md: &FiniteSemimodule) -> Vec<Mask> {
    subsets_where(md.size(), |m| is_sub(md, m))
}

/// The smallest member of `family` containing `seed`.
pub fn smallest_containing(family: &[Mask], seed: Mask) -> Mask {
    family.iter().copied().filter(|&m| subset(seed, m)).fold(Mask::MAX, |acc, m| acc & m)
}

pub fn colon(md: &FiniteSemimodule, n: Mask) -> Mask {
    let k = md.scalars().size();
    (0..k).filter(|&s| (0..md.size()).all(|x| has(n, md.act(s, x)))).fold(0, |acc, s| acc | 1 << s)
}

/// `{ s x : s ∈ p, x ∈ k }` as a raw set, without closing under sums.
pub fn act_set(md: &FiniteSemimodule, p: Mask, k: Mask) -> Mask {
    let mut out = 0;
    for s in members(p) {
        for x in members(k) {
            out |= 1 << md.act(s, x);
        }
    }
    out
}

/// `{ a b : a ∈ p, b ∈ q }` as a raw set.
pub fn mul_set(s: &FiniteSemiring, p: Mask, q: Mask) -> Mask {
    let mut out = 0;
    for a in members(p) {
        for b in members(q) {
            out |= 1 << s.mul(a, b);
        }
    }
    out
}

/// Closure of a raw set of module elements under addition.
pub fn sum_closure(md: &FiniteSemimodule, mut m: Mask) -> Mask {
    m |= 1 << md.zero();
    loop {
        let mut next = m;
        for x in members(m) {
            for y in members(m) {
                next |= 1 << md.add(x, y);
            }
        }
        if next == m {
            return m;
        }
        m = next;
    }
}

/// Closure of a raw set of scalars under addition.
pub fn scalar_sum_closure(s: &FiniteSemiring, mut m: Mask) -> Mask {
    m |= 1 << s.zero();
    loop {
        let mut next = m;
        for x in members(m) {
            for y in members(m) {
                next |= 1 << s.add(x, y);
            }
        }
        if next == m {
            return m;
        }
        m = next;
    }
}

/// `IM` as a subsemimodule.
pub fn ideal_action(md: &FiniteSemimodule, i: Mask) -> Mask {
    sum_closure(md, act_set(md, i, full(md.size())))
}

pub fn ideal_product(s: &FiniteSemiring, i: Mask, j: Mask) -> Mask {
    scalar_sum_closure(s, mul_set(s, i, j))
}

/// `(a, m)` with `am ∈ N`, `m ∉ N` and `a ∉ (N :_S M)`.
pub fn prime_violations(md: &FiniteSemimodule, n: Mask) -> Vec<(usize, usize)> {
    let c = colon(md, n);
    let mut out = Vec::new();
    for a in 0..md.scalars().size() {
        for x in 0..md.size() {
            if has(n, md.act(a, x)) && !has(n, x) && !has(c, a) {
                out.push((a, x));
            }
        }
    }
    out
}

/// `(a, b, m)` with nonunits `a, b`, `abm ∈ N` (and nonzero if `weakly`), `ab ∉ (N :_S M)`, `m ∉ N`.
pub fn absorbing_violations(md: &FiniteSemimodule, n: Mask, weakly: bool) -> Vec<(usize, usize, usize)> {
    let s = md.scalars();
    let c = colon(md, n);
    let nu = nonunits(s);
    let mut out = Vec::new();
    for &a in &nu {
        for &b in &nu {
            for x in 0..md.size() {
                let abx = md.act(a, md.act(b, x));
                if has(n, abx) && !(weakly && abx == md.zero()) && !has(c, s.mul(a, b)) && !has(n, x) {
                    out.push((a, b, x));
                }
            }
        }
    }
    out
}

/// `(a, b, m)` with nonunits `a, b`, `abm = 0`, `ab ∉ (N :_S M)`, `m ∉ N`.
pub fn triple_zeros(md: &FiniteSemimodule, n: Mask) -> Vec<(usize, usize, usize)> {
    let s = md.scalars();
    let c = colon(md, n);
    let nu = nonunits(s);
    let mut out = Vec::new();
    for &a in &nu {
        for &b in &nu {
            for x in 0..md.size() {
                if md.act(a, md.act(b, x)) == md.zero() && !has(c, s.mul(a, b)) && !has(n, x) {
                    out.push((a, b, x));
                }
            }
        }
    }
    out
}

pub fn subtractive(md: &FiniteSemimodule, n: Mask) -> bool {
    (0..md.size()).all(|x| (0..md.size()).all(|y| !(has(n, x) && has(n, md.add(x, y))) || has(n, y)))
}

/// Ideal-level predicates over the semiring acting on itself.
pub fn ideal_absorbing_violations(s: &FiniteSemiring, i: Mask, weakly: bool) -> Vec<(usize, usize, usize)> {
    let nu = nonunits(s);
    let mut out = Vec::new();
    for &a in &nu {
        for &b in &nu {
            for c in 0..s.size() {
                let abc = s.mul(s.mul(a, b), c);
                if has(i, abc) && !(weakly && abc == s.zero()) && !has(i, s.mul(a, b)) && !has(i, c) {
                    out.push((a, b, c));
                }
            }
        }
    }
    out
}

pub fn ideal_prime_violations(s: &FiniteSemiring, i: Mask) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for a in 0..s.size() {
        for b in 0..s.size() {
            if has(i, s.mul(a, b)) && !has(i, a) && !has(i, b) {
                out.push((a, b));
            }
        }
    }
    out
}

/// Fraction classes of `carrier × T` under `(x,t) ~ (x',t')` iff `u t' x = u t x'` for some `u ∈ T`.
pub fn fraction_class_count(md: &FiniteSemimodule, t: &[usize]) -> usize {
    let s = md.scalars();
    let pairs: Vec<(usize, usize)> = (0..md.size()).flat_map(|x| t.iter().map(move |&u| (x, u))).collect();
    let related = |(x, a): (usize, usize), (y, b): (usize, usize)| {
        t.iter().any(|&u| md.act(s.mul(u, b), x) == md.act(s.mul(u, a), y))
    };
    let mut class: Vec<Option<usize>> = vec![None; pairs.len()];
    let mut count = 0;
    for i in 0..pairs.len() {
        if class[i].is_some() {
            continue;
        }
        for j in i..pairs.len() {
            if related(pairs[i], pairs[j]) {
                class[j] = Some(count);
            }
        }
        count += 1;
    }
    count
}

/// Smallest subsemimodule containing a raw set.
pub fn sub_closure(md: &FiniteSemimodule, m: Mask) -> Mask {
    let mut m = sum_closure(md, m);
    loop {
        let next = sum_closure(md, m | act_set(md, full(md.scalars().size()), m));
        if next == m {
            return m;
        }
        m = next;
    }
}

/// Smallest ideal containing a raw set.
pub fn ideal_closure(s: &FiniteSemiring, m: Mask) -> Mask {
    let mut m = scalar_sum_closure(s, m);
    loop {
        let next = scalar_sum_closure(s, m | mul_set(s, full(s.size()), m));
        if next == m {
            return m;
        }
        m = next;
    }
}

/// Every set closed under `close`, found by adjoining one element at a time from `{0}`.
pub fn closed_family(n: usize, close: impl Fn(Mask) -> Mask) -> Vec<Mask> {
    let mut found = vec![close(0)];
    let mut i = 0;
    while i < found.len() {
        let base = found[i];
        for x in (0..n).filter(|&x| !has(base, x)) {
            let c = close(base | 1 << x);
            if !found.contains(&c) {
                found.push(c);
            }
        }
        i += 1;
    }
    found.sort_unstable();
    found
}

pub fn lattice_by_closure(md: &FiniteSemimodule) -> Vec<Mask> {
    closed_family(md.size(), |m| sub_closure(md, m))
}

pub fn ideals_by_closure(s: &FiniteSemiring) -> Vec<Mask> {
    closed_family(s.size(), |m| ideal_closure(s, m))
}

/// `{ m : a m ∈ N }`.
pub fn residual(md: &FiniteSemimodule, n: Mask, a: usize) -> Mask {
    (0..md.size()).filter(|&x| has(n, md.act(a, x))).fold(0, |acc, x| acc | 1 << x)
}
