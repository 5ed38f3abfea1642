//! Closure and lattice enumeration shared by ideals and subsemimodules.

use std::collections::{HashSet, VecDeque};

use crate::elemset::ElemSet;
use crate::error::{Error, Result};

/// Default bound on the number of ideals or subsemimodules enumerated per structure.
pub const DEFAULT_CAP: usize = 20_000;

/// All finite sums of elements of `gens`, including the empty sum `zero`.
pub(crate) fn additive_closure(
    universe: usize,
    zero: usize,
    gens: &ElemSet,
    add: impl Fn(usize, usize) -> usize,
) -> ElemSet {
    let gens: Vec<usize> = gens.iter().filter(|&g| g != zero).collect();
    let mut out = ElemSet::singleton(universe, zero);
    let mut queue = VecDeque::from([zero]);
    while let Some(x) = queue.pop_front() {
        for &g in &gens {
            let y = add(x, g);
            if out.insert(y) {
                queue.push_back(y);
            }
        }
    }
    out
}

/// `{a + b : a in lhs, b in rhs}`. For two substructures this is their join.
pub(crate) fn sumset(lhs: &ElemSet, rhs: &ElemSet, add: impl Fn(usize, usize) -> usize) -> ElemSet {
    let mut out = ElemSet::empty(lhs.universe());
    let rhs: Vec<usize> = rhs.iter().collect();
    for a in lhs.iter() {
        for &b in &rhs {
            out.insert(add(a, b));
        }
    }
    out
}

/// Every join of cyclic substructures, found by joining the worklist against the
/// cyclic generators until nothing new appears. Returned in canonical order.
pub(crate) fn enumerate_joins(
    bottom: ElemSet,
    cyclic: &[ElemSet],
    cap: usize,
    join: impl Fn(&ElemSet, &ElemSet) -> ElemSet,
) -> Result<Vec<ElemSet>> {
    let mut gens: Vec<ElemSet> = cyclic.to_vec();
    gens.sort();
    gens.dedup();
    let mut seen: HashSet<ElemSet> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(bottom.clone());
    queue.push_back(bottom);
    while let Some(cur) = queue.pop_front() {
        for g in &gens {
            if g.is_subset(&cur) {
                continue;
            }
            let next = join(&cur, g);
            if !seen.contains(&next) {
                if seen.len() >= cap {
                    return Err(Error::CapExceeded { cap });
                }
                seen.insert(next.clone());
                queue.push_back(next);
            }
        }
    }
    let mut all: Vec<ElemSet> = seen.into_iter().collect();
    all.sort();
    Ok(all)
}
