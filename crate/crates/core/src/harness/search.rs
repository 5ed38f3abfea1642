use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::classify::{is_one_absorbing_prime, is_prime_subsemimodule, is_weakly_one_absorbing_prime};
use crate::error::{Error, Result};
use crate::semimodule::{FiniteSemimodule, Subsemimodule};
use crate::semiring::FiniteSemiring;

use super::instance::Instance;

/// Separations between the primeness notions that a search can look for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Relation {
    /// Weakly 1-absorbing prime but not 1-absorbing prime.
    WeaklyNotOneAbsorbing,
    /// 1-absorbing prime but not prime.
    OneAbsorbingNotPrime,
    /// As above, over scalars that are not local.
    OneAbsorbingNotPrimeNonlocal,
    /// Prime but not 1-absorbing prime.
    PrimeNotOneAbsorbing,
    /// `(N :_S M)` is a 1-absorbing prime ideal but `N` is not 1-absorbing prime.
    ColonConverseFails,
}

pub const RELATIONS: &[&str] =
    &["weakly-not-1abs", "1abs-not-prime", "1abs-not-prime-nonlocal", "prime-not-1abs", "colon-converse-fails"];

impl FromStr for Relation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "weakly-not-1abs" => Relation::WeaklyNotOneAbsorbing,
            "1abs-not-prime" => Relation::OneAbsorbingNotPrime,
            "1abs-not-prime-nonlocal" => Relation::OneAbsorbingNotPrimeNonlocal,
            "prime-not-1abs" => Relation::PrimeNotOneAbsorbing,
            "colon-converse-fails" => Relation::ColonConverseFails,
            other => return Err(Error::UnknownRelation(other.to_string())),
        })
    }
}

impl Relation {
    pub fn id(self) -> &'static str {
        match self {
            Relation::WeaklyNotOneAbsorbing => "weakly-not-1abs",
            Relation::OneAbsorbingNotPrime => "1abs-not-prime",
            Relation::OneAbsorbingNotPrimeNonlocal => "1abs-not-prime-nonlocal",
            Relation::PrimeNotOneAbsorbing => "prime-not-1abs",
            Relation::ColonConverseFails => "colon-converse-fails",
        }
    }

    /// Whether the proper subsemimodule `n` of `m` exhibits the relation.
    pub fn holds(self, m: &FiniteSemimodule, n: &Subsemimodule) -> Result<bool> {
        let one_abs = || Ok::<bool, Error>(is_one_absorbing_prime(m, n)?.holds());
        let prime = || Ok::<bool, Error>(is_prime_subsemimodule(m, n)?.holds());
        Ok(match self {
            Relation::WeaklyNotOneAbsorbing => is_weakly_one_absorbing_prime(m, n)?.holds() && !one_abs()?,
            Relation::OneAbsorbingNotPrime => one_abs()? && !prime()?,
            Relation::OneAbsorbingNotPrimeNonlocal => m.scalars().is_local().is_none() && one_abs()? && !prime()?,
            Relation::PrimeNotOneAbsorbing => prime()? && !one_abs()?,
            Relation::ColonConverseFails => {
                let colon = m.colon_ideal(n)?;
                m.scalars().classify_ideal(&colon)?.one_absorbing.holds() && !one_abs()?
            }
        })
    }
}

/// The smallest instance exhibiting a relation, with the offending subsemimodule.
#[derive(Debug, Clone)]
pub struct SearchHit {
    pub instance: String,
    pub module: FiniteSemimodule,
    pub subsemimodule: Subsemimodule,
}

fn search_key(m: &FiniteSemimodule) -> (usize, usize, Vec<usize>, Vec<usize>, Vec<usize>, Vec<usize>) {
    let s = m.scalars();
    (
        s.size() + m.size(),
        s.size(),
        s.add_table().to_vec(),
        s.mul_table().to_vec(),
        m.add_table().to_vec(),
        m.action_table().to_vec(),
    )
}

/// Scans instances whose scalars and module both have at most `cap` elements,
/// smallest total carrier size first, then by tables; within an instance,
/// proper subsemimodules are tried in canonical order.
pub fn search_counterexample(relation: Relation, instances: &[Instance], cap: usize, lattice_cap: usize) -> Result<Option<SearchHit>> {
    let mut order: Vec<&Instance> =
        instances.iter().filter(|i| i.module.size() <= cap && i.module.scalars().size() <= cap).collect();
    order.sort_by_cached_key(|i| search_key(&i.module));
    for inst in order {
        let m = &inst.module;
        for n in m.enumerate_subsemimodules(lattice_cap)?.into_iter().filter(|n| n.is_proper()) {
            if relation.holds(m, &n)? {
                return Ok(Some(SearchHit { instance: inst.name.clone(), module: m.clone(), subsemimodule: n }));
            }
        }
    }
    Ok(None)
}

const UNSET: usize = usize::MAX;
const NODE_LIMIT: usize = 4_000;

struct Filler<'r, R: Rng> {
    n: usize,
    add: Vec<usize>,
    mul: Vec<usize>,
    rng: &'r mut R,
    nodes: usize,
}

impl<R: Rng> Filler<'_, R> {
    fn get(t: &[usize], n: usize, a: usize, b: usize) -> usize {
        t[a * n + b]
    }

    fn associative(&self, t: &[usize]) -> bool {
        let n = self.n;
        for a in 0..n {
            for b in 0..n {
                let ab = Self::get(t, n, a, b);
                if ab == UNSET {
                    continue;
                }
                for c in 0..n {
                    let bc = Self::get(t, n, b, c);
                    if bc == UNSET {
                        continue;
                    }
                    let lhs = Self::get(t, n, ab, c);
                    let rhs = Self::get(t, n, a, bc);
                    if lhs != UNSET && rhs != UNSET && lhs != rhs {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn distributive(&self) -> bool {
        let n = self.n;
        for a in 0..n {
            for b in 0..n {
                let ab = Self::get(&self.mul, n, a, b);
                if ab == UNSET {
                    continue;
                }
                for c in 0..n {
                    let ac = Self::get(&self.mul, n, a, c);
                    let lhs = Self::get(&self.mul, n, a, Self::get(&self.add, n, b, c));
                    if ac != UNSET && lhs != UNSET && lhs != Self::get(&self.add, n, ab, ac) {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn fill(&mut self, cells: &[(usize, usize)], multiplicative: bool) -> bool {
        let Some((&(a, b), rest)) = cells.split_first() else { return true };
        let mut values: Vec<usize> = (0..self.n).collect();
        values.shuffle(self.rng);
        for v in values {
            self.nodes += 1;
            if self.nodes > NODE_LIMIT {
                return false;
            }
            let n = self.n;
            let table = if multiplicative { &mut self.mul } else { &mut self.add };
            table[a * n + b] = v;
            table[b * n + a] = v;
            let ok = if multiplicative {
                self.associative(&self.mul) && self.distributive()
            } else {
                self.associative(&self.add)
            };
            if ok && self.fill(rest, multiplicative) {
                return true;
            }
            let table = if multiplicative { &mut self.mul } else { &mut self.add };
            table[a * n + b] = UNSET;
            table[b * n + a] = UNSET;
        }
        false
    }
}

/// A uniformly seeded random semiring on `n >= 2` elements with `0` at index 0
/// and `1` at index 1, found by randomized backtracking over the tables.
/// Returns `None` when the search gives up.
pub fn random_semiring<R: Rng>(rng: &mut R, n: usize) -> Option<FiniteSemiring> {
    assert!(n >= 2, "a semiring with 1 != 0 needs two elements");
    let mut add = vec![UNSET; n * n];
    let mut mul = vec![UNSET; n * n];
    for x in 0..n {
        add[x] = x;
        add[x * n] = x;
        mul[x] = 0;
        mul[x * n] = 0;
        mul[n + x] = x;
        mul[x * n + 1] = x;
    }
    let add_cells: Vec<(usize, usize)> = (1..n).flat_map(|a| (a..n).map(move |b| (a, b))).collect();
    let mul_cells: Vec<(usize, usize)> = (2..n).flat_map(|a| (a..n).map(move |b| (a, b))).collect();
    let mut filler = Filler { n, add, mul, rng, nodes: 0 };
    if !filler.fill(&add_cells, false) {
        return None;
    }
    filler.nodes = 0;
    if !filler.fill(&mul_cells, true) {
        return None;
    }
    let labels = (0..n).map(|i| i.to_string()).collect();
    FiniteSemiring::new(labels, filler.add, filler.mul, 0, 1).ok()
}

/// `count` valid random semirings with sizes cycling through `2..=max_size`,
/// reproducible from `seed`.
pub fn random_semirings(seed: u64, count: usize, max_size: usize) -> Vec<FiniteSemiring> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sizes: Vec<usize> = (2..=max_size).collect();
    let mut out = Vec::with_capacity(count);
    let mut i = 0;
    while out.len() < count {
        let n = sizes[i % sizes.len()];
        i += 1;
        if let Some(s) = random_semiring(&mut rng, n) {
            out.push(s);
        }
    }
    out
}
