//! Documented example values, each recomputed by a naive oracle from `common`
//! and compared with the library.

mod common;

use std::sync::Arc;

use common::*;
use semimod::classify::{classify, find_triple_zeros, is_one_absorbing_prime, is_prime_subsemimodule, is_weakly_one_absorbing_prime};
use semimod::constructions::{make_boolean, make_product, module_product, module_self, ntrunc_normalize, scalar_endomorphism};
use semimod::harness::{self, default_catalog, Instance, Status};
use semimod::{localize, Axiom, ElemSet, Error, FiniteSemimodule, FiniteSemiring, Outcome, ProductMode, Subsemimodule, DEFAULT_CAP};

fn set(universe: usize, xs: &[usize]) -> ElemSet {
    ElemSet::from_iter(universe, xs.iter().copied())
}

fn sub(m: &FiniteSemimodule, xs: &[usize]) -> Subsemimodule {
    m.subsemimodule(set(m.size(), xs)).unwrap()
}

fn from_mask(m: &FiniteSemimodule, n: Mask) -> Subsemimodule {
    sub(m, &members(n))
}

#[test]
fn units_and_locality() {
    for (s, expected_units) in [(zmod(4), vec![1, 3]), (Arc::new(make_boolean()), vec![1]), (ntrunc(3, 8), vec![1])] {
        assert_eq!(units(&s), mask_of(&expected_units));
        assert_eq!(mask(s.units()), units(&s));
        assert!(local(&s));
        let maximal = s.is_local().expect("local");
        assert_eq!(mask(maximal.members()), full(s.size()) & !units(&s));
    }
    let z6 = zmod(6);
    assert!(!local(&z6));
    assert!(z6.is_local().is_none());
}

#[test]
fn generated_ideals_are_smallest() {
    let n38 = ntrunc(3, 8);
    let family = ideals(&n38);
    let expected = smallest_containing(&family, mask_of(&[2]));
    assert_eq!(expected, mask_of(&[0, 2, 4, 6, 8, 10]));
    assert_eq!(mask(n38.ideal_generated(&set(11, &[2])).members()), expected);
    let z6 = zmod(6);
    assert_eq!(mask(z6.ideal_generated(&set(6, &[2])).members()), smallest_containing(&ideals(&z6), mask_of(&[2])));
    let b = make_boolean();
    assert_eq!(mask(b.ideal_generated(&ElemSet::empty(2)).members()), 1);
}

#[test]
fn ideal_lattices() {
    for (s, count) in [(zmod(4), 3), (zmod(6), 4), (Arc::new(make_boolean()), 2)] {
        let naive = ideals(&s);
        assert_eq!(naive.len(), count);
        let lib: Vec<Mask> = s.enumerate_ideals(DEFAULT_CAP).unwrap().iter().map(|i| mask(i.members())).collect();
        let mut sorted = lib.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, naive);
    }
    let n320 = ntrunc(3, 20);
    let mut lib: Vec<Mask> = n320.enumerate_ideals(DEFAULT_CAP).unwrap().iter().map(|i| mask(i.members())).collect();
    lib.sort_unstable();
    assert_eq!(lib, ideals(&n320));
}

#[test]
fn ideal_products() {
    let n320 = ntrunc(3, 20);
    let i = n320.ideal(set(23, &[0, 20])).unwrap();
    assert_eq!(mask(n320.ideal_product(&i, &i).unwrap().members()), ideal_product(&n320, mask_of(&[0, 20]), mask_of(&[0, 20])));
    assert_eq!(ideal_product(&n320, mask_of(&[0, 20]), mask_of(&[0, 20])), mask_of(&[0, 20]));
    let z4 = zmod(4);
    assert_eq!(ideal_product(&z4, mask_of(&[0, 2]), mask_of(&[0, 2])), 1);
    let z6 = zmod(6);
    assert_eq!(ideal_product(&z6, mask_of(&[0, 2, 4]), mask_of(&[0, 3])), 1);
}

#[test]
fn subtractive_and_strong() {
    let n38 = own(&ntrunc(3, 8));
    let evens = mask_of(&[0, 2, 4, 6, 8, 10]);
    assert!(subtractive(&n38, evens));
    assert!(n38.scalars().is_subtractive_ideal(&n38.scalars().ideal(set(11, &members(evens))).unwrap()));
    let n23 = own(&ntrunc(2, 3));
    let i = mask_of(&[0, 2, 3, 4]);
    assert!(is_ideal(n23.scalars(), i));
    assert!(!subtractive(&n23, i));
    let n = from_mask(&n23, i);
    assert!(!n23.is_subtractive(&n));
    // Strong: every x in N has some y in N with x + y = 0.
    let strong = members(i).iter().all(|&x| members(i).iter().any(|&y| n23.add(x, y) == 0));
    assert!(!strong);
    assert!(!n23.is_strong(&n));
    let z20 = over(&ntrunc(3, 20), 20);
    assert!(subtractive(&z20, mask_of(&[0, 10])));
    assert!(z20.is_subtractive(&sub(&z20, &[0, 10])));
}

#[test]
fn ntrunc_tables_match_the_formula() {
    for (r, d) in [(2, 3), (3, 8), (3, 20)] {
        let s = ntrunc(r, d);
        let norm = |k: usize| if k < r { k } else { r + (k - r) % d };
        assert_eq!(s.size(), r + d);
        for a in 0..r + d {
            for b in 0..r + d {
                assert_eq!(s.add(a, b), norm(a + b));
                assert_eq!(s.mul(a, b), norm(a * b));
                assert_eq!(ntrunc_normalize(r, d, a * b), norm(a * b));
            }
        }
    }
    assert_eq!(units(&ntrunc(3, 8)), mask_of(&[1]));
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

fn isomorphisms(a: &FiniteSemiring, b: &FiniteSemiring) -> Vec<Vec<usize>> {
    if a.size() != b.size() {
        return Vec::new();
    }
    let n = a.size();
    permutations(n)
        .into_iter()
        .filter(|f| {
            (0..n).all(|x| (0..n).all(|y| f[a.add(x, y)] == b.add(f[x], f[y]) && f[a.mul(x, y)] == b.mul(f[x], f[y])))
        })
        .collect()
}

#[test]
fn z2_times_z3_is_z6() {
    let p = make_product(&zmod(2), &zmod(3)).unwrap();
    let isos = isomorphisms(&p, &zmod(6));
    assert_eq!(isos.len(), 1);
    // (a, b) with index a + 2b maps to the residue congruent to a mod 2 and b mod 3.
    for (idx, &image) in isos[0].iter().enumerate() {
        assert_eq!((image % 2, image % 3), (idx % 2, idx / 2));
    }
    assert!(isomorphisms(&make_product(&zmod(2), &zmod(2)).unwrap(), &zmod(4)).is_empty());
}

#[test]
fn actions_of_ntrunc() {
    let n38 = ntrunc(3, 8);
    let z8 = over(&n38, 8);
    for s in 0..11 {
        for x in 0..8 {
            assert_eq!(z8.act(s, x), s * x % 8);
        }
    }
    let err = semimod::constructions::module_zmod_action(Arc::clone(&n38), 5).unwrap_err();
    let Error::AxiomViolation(v) = err else { panic!("{err}") };
    assert!(v.iter().any(|w| w.axiom == Axiom::ActionOverScalarSum));
    // normalize(4 + 7) = 3, but 11 · 1 = 1 mod 5 differs from 3 · 1.
    assert_eq!(n38.add(4, 7), 3);
    assert_ne!((4 + 7) % 5, 3);
}

#[test]
fn z20_over_ntrunc_lattice_and_colons() {
    let m = over(&ntrunc(3, 20), 20);
    let naive = lattice(&m);
    assert_eq!(naive.len(), 6);
    let divisors = [1usize, 2, 4, 5, 10, 20];
    let mut by_divisor: Vec<Mask> = divisors.iter().map(|&d| mask_of(&(0..20).step_by(d).collect::<Vec<_>>())).collect();
    by_divisor.sort_unstable();
    assert_eq!(naive, by_divisor);
    let mut lib: Vec<Mask> = m.enumerate_subsemimodules(DEFAULT_CAP).unwrap().iter().map(|n| mask(n.members())).collect();
    lib.sort_unstable();
    assert_eq!(lib, naive);

    let gen5 = smallest_containing(&naive, mask_of(&[5]));
    assert_eq!(gen5, mask_of(&[0, 5, 10, 15]));
    assert_eq!(mask(m.generated(&set(20, &[5])).members()), gen5);

    let zero = m.zero_submodule();
    assert_eq!(colon(&m, 1), mask_of(&[0, 20]));
    assert_eq!(mask(m.colon_ideal(&zero).unwrap().members()), colon(&m, 1));
    assert_eq!(mask(m.annihilator().members()), mask_of(&[0, 20]));

    let residual: Mask = (0..20).filter(|&x| m.act(4, x) == 0).fold(0, |acc, x| acc | 1 << x);
    assert_eq!(residual, mask_of(&[0, 5, 10, 15]));
    assert_eq!(mask(m.residual(&zero, &set(23, &[4])).unwrap().members()), residual);

    let evens: Vec<usize> = (0..23).filter(|&s| s % 2 == 0).collect();
    let i = mask_of(&evens);
    assert!(is_ideal(m.scalars(), i));
    let im = ideal_action(&m, i);
    assert_eq!(im, mask_of(&(0..20).step_by(2).collect::<Vec<_>>()));
    assert_eq!(mask(m.ideal_action(&m.scalars().ideal(set(23, &evens)).unwrap()).unwrap().members()), im);
}

#[test]
fn z4_residual_and_colon() {
    let z4 = own(&zmod(4));
    let n = sub(&z4, &[0, 2]);
    assert_eq!(colon(&z4, mask_of(&[0, 2])), mask_of(&[0, 2]));
    assert_eq!(mask(z4.colon_ideal(&n).unwrap().members()), mask_of(&[0, 2]));
    assert_eq!(mask(z4.residual(&n, &set(4, &[2])).unwrap().members()), full(4));
    assert_eq!(mask(z4.colon_ideal(&z4.whole()).unwrap().members()), full(4));
    assert_eq!(mask(z4.annihilator().members()), 1);
}

fn multiplication_failures(m: &FiniteSemimodule) -> Vec<Mask> {
    lattice(m).into_iter().filter(|&n| ideal_action(m, colon(m, n)) != n).collect()
}

#[test]
fn multiplication_semimodules() {
    let z4 = own(&zmod(4));
    assert!(multiplication_failures(&z4).is_empty());
    assert!(z4.is_multiplication(DEFAULT_CAP).unwrap().holds());

    let z2 = own(&zmod(2));
    let z2z2 = module_product(&z2, &z2).unwrap();
    let failures = multiplication_failures(&z2z2);
    assert_eq!(failures.len(), 3);
    let Outcome::Fails(w) = z2z2.is_multiplication(DEFAULT_CAP).unwrap() else { panic!() };
    assert!(failures.contains(&mask(w.members())));
    assert_eq!(z2z2.format_set(w.members()), "{(0,0),(1,0)}");

    let z20 = over(&ntrunc(3, 20), 20);
    assert!(multiplication_failures(&z20).is_empty());
    assert!(z20.is_multiplication(DEFAULT_CAP).unwrap().holds());
}

/// `(s, s', x)` with `s < s'`, `x != 0` and `sx = s'x`.
fn mc_collisions(m: &FiniteSemimodule) -> Vec<(usize, usize, usize)> {
    let k = m.scalars().size();
    let mut out = Vec::new();
    for x in 1..m.size() {
        for s in 0..k {
            for t in s + 1..k {
                if m.act(s, x) == m.act(t, x) {
                    out.push((s, t, x));
                }
            }
        }
    }
    out
}

#[test]
fn mc_detection() {
    let b = module_self(Arc::new(make_boolean()));
    assert!(mc_collisions(&b).is_empty());
    assert!(b.is_mc().holds());
    let z4 = own(&zmod(4));
    assert!(mc_collisions(&z4).contains(&(1, 3, 2)));
    assert_eq!(z4.is_mc(), Outcome::Fails((1, 3, 2)));
    let z20 = over(&ntrunc(3, 20), 20);
    assert!(mc_collisions(&z20).contains(&(1, 21, 1)));
    assert_eq!(z20.is_mc(), Outcome::Fails((1, 21, 1)));
}

/// Naive m-cyclic test: some `s` with `s + q = 1` for a `q` in the maximal ideal and `sM ⊆ Sx`.
fn m_cyclic(m: &FiniteSemimodule, maximal: Mask) -> bool {
    let s = m.scalars();
    let family = lattice(m);
    (0..s.size()).any(|a| {
        members(maximal).iter().any(|&q| s.add(a, q) == s.one())
            && (0..m.size()).any(|x| {
                let cyclic = smallest_containing(&family, 1 << x);
                subset(act_set(m, 1 << a, full(m.size())), cyclic)
            })
    })
}

#[test]
fn m_cyclic_detection() {
    let b = module_self(Arc::new(make_boolean()));
    assert!(m_cyclic(&b, 1));
    assert_eq!(b.is_m_cyclic(&b.scalars().ideal(set(2, &[0])).unwrap()).unwrap(), Some((1, 0, 1)));
    let z4 = own(&zmod(4));
    assert!(m_cyclic(&z4, mask_of(&[0, 2])));
    assert_eq!(z4.is_m_cyclic(&z4.scalars().ideal(set(4, &[0, 2])).unwrap()).unwrap(), Some((1, 0, 1)));
    let z2 = own(&zmod(2));
    let z2z2 = module_product(&z2, &z2).unwrap();
    assert!(!m_cyclic(&z2z2, 1));
    assert_eq!(z2z2.is_m_cyclic(&z2z2.scalars().ideal(set(2, &[0])).unwrap()).unwrap(), None);
}

#[test]
fn subsemimodule_products() {
    let z4 = own(&zmod(4));
    let n = sub(&z4, &[0, 2]);
    let naive = ideal_action(&z4, ideal_product(z4.scalars(), colon(&z4, mask_of(&[0, 2])), colon(&z4, mask_of(&[0, 2]))));
    assert_eq!(naive, 1);
    assert_eq!(mask(z4.subsemimodule_product(&n, &n, ProductMode::Strict).unwrap().members()), naive);

    let z20 = over(&ntrunc(3, 20), 20);
    let five = mask_of(&[0, 5, 10, 15]);
    let two = mask_of(&(0..20).step_by(2).collect::<Vec<_>>());
    let naive = ideal_action(&z20, ideal_product(z20.scalars(), colon(&z20, five), colon(&z20, two)));
    assert_eq!(naive, mask_of(&[0, 10]));
    let lib = z20.subsemimodule_product(&from_mask(&z20, five), &from_mask(&z20, two), ProductMode::Strict).unwrap();
    assert_eq!(mask(lib.members()), naive);
}

/// Literal reading of the multiplication characterization, with products of
/// subsemimodules: N1N2N3 ⊆ N gives N1N2 ⊆ N or N3 ⊆ N. It fails on Z4 for N = {0},
/// although {0} is 1-absorbing prime there.
#[test]
fn literal_product_characterization_fails_on_z4() {
    let z4 = own(&zmod(4));
    let zero = z4.zero_submodule();
    assert!(absorbing_violations(&z4, 1, false).is_empty());
    assert!(is_one_absorbing_prime(&z4, &zero).unwrap().holds());
    let m = z4.whole();
    let half = sub(&z4, &[0, 2]);
    let n1n2 = z4.subsemimodule_product(&m, &half, ProductMode::Strict).unwrap();
    let n1n2n3 = z4.subsemimodule_product(&n1n2, &half, ProductMode::Strict).unwrap();
    assert_eq!(n1n2n3, zero);
    assert_eq!(n1n2.to_vec(), vec![0, 2]);
    assert!(!n1n2.is_subset(&zero) && !half.is_subset(&zero));
    // The repaired clause ranges over proper ideals I1, I2: I1 I2 (K : M) M ⊆ N gives I1 I2 M ⊆ N or K ⊆ N.
    let proper: Vec<Mask> = ideals(z4.scalars()).into_iter().filter(|&i| i != full(4)).collect();
    for &i1 in &proper {
        for &i2 in &proper {
            let i1i2 = ideal_product(z4.scalars(), i1, i2);
            for k in lattice(&z4) {
                let lhs = ideal_action(&z4, ideal_product(z4.scalars(), i1i2, colon(&z4, k)));
                if subset(lhs, 1) {
                    assert!(subset(ideal_action(&z4, i1i2), 1) || subset(k, 1));
                }
            }
        }
    }
}

#[test]
fn prime_examples() {
    let z4 = own(&zmod(4));
    assert!(prime_violations(&z4, mask_of(&[0, 2])).is_empty());
    assert!(is_prime_subsemimodule(&z4, &sub(&z4, &[0, 2])).unwrap().holds());
    assert_eq!(prime_violations(&z4, 1)[0], (2, 2));
    assert_eq!(is_prime_subsemimodule(&z4, &z4.zero_submodule()).unwrap(), Outcome::Fails((2, 2)));
    let z6 = own(&zmod(6));
    assert_eq!(prime_violations(&z6, 1)[0], (2, 3));
    assert_eq!(is_prime_subsemimodule(&z6, &z6.zero_submodule()).unwrap(), Outcome::Fails((2, 3)));
}

#[test]
fn one_absorbing_examples() {
    let z4 = own(&zmod(4));
    for n in lattice(&z4).into_iter().filter(|&n| n != full(4)) {
        assert!(absorbing_violations(&z4, n, false).is_empty());
        assert!(is_one_absorbing_prime(&z4, &from_mask(&z4, n)).unwrap().holds());
    }
    let z6 = own(&zmod(6));
    assert_eq!(absorbing_violations(&z6, 1, false)[0], (2, 2, 3));
    assert_eq!(is_one_absorbing_prime(&z6, &z6.zero_submodule()).unwrap(), Outcome::Fails((2, 2, 3)));

    // 2S × {0} in S × S over S = N(3,8).
    let s = own(&ntrunc(3, 8));
    let ss = module_product(&s, &s).unwrap();
    let n: Vec<usize> = vec![0, 2, 4, 6, 8, 10];
    let nm = mask_of(&n);
    assert!(is_sub(&ss, nm));
    let v = absorbing_violations(&ss, nm, false);
    assert_eq!(v[0], (2, 2, 1));
    assert_eq!(ss.label(1), "(1,0)");
    assert_eq!(is_one_absorbing_prime(&ss, &from_mask(&ss, nm)).unwrap(), Outcome::Fails((2, 2, 1)));
    // Its colon ideal is {0}, which is a 1-absorbing prime ideal of N(3,8).
    let c = colon(&ss, nm);
    assert_eq!(c, 1);
    assert!(ideal_absorbing_violations(ss.scalars(), c, false).is_empty());
}

#[test]
fn weakly_examples() {
    let z8 = over(&ntrunc(3, 8), 8);
    assert!(absorbing_violations(&z8, 1, true).is_empty());
    assert!(is_weakly_one_absorbing_prime(&z8, &z8.zero_submodule()).unwrap().holds());
    assert_eq!(absorbing_violations(&z8, 1, false)[0], (2, 2, 2));
    assert_eq!(is_one_absorbing_prime(&z8, &z8.zero_submodule()).unwrap(), Outcome::Fails((2, 2, 2)));
    let z4 = own(&zmod(4));
    assert!(is_weakly_one_absorbing_prime(&z4, &sub(&z4, &[0, 2])).unwrap().holds());
}

fn as_tuples(v: &[semimod::TripleZero]) -> Vec<(usize, usize, usize)> {
    v.iter().map(|t| (t.a, t.b, t.m)).collect()
}

#[test]
fn triple_zero_examples() {
    let z20 = over(&ntrunc(3, 20), 20);
    let naive = triple_zeros(&z20, 1);
    assert!(naive.contains(&(2, 2, 5)));
    let lib = find_triple_zeros(&z20, &z20.zero_submodule()).unwrap();
    assert_eq!(as_tuples(&lib), naive);

    let z8 = over(&ntrunc(3, 8), 8);
    let lib = find_triple_zeros(&z8, &z8.zero_submodule()).unwrap();
    assert!(as_tuples(&lib).contains(&(2, 2, 2)));
    assert_eq!(as_tuples(&lib), triple_zeros(&z8, 1));

    let z4 = own(&zmod(4));
    assert!(triple_zeros(&z4, mask_of(&[0, 2])).is_empty());
    assert!(find_triple_zeros(&z4, &sub(&z4, &[0, 2])).unwrap().is_empty());
}

#[test]
fn classification_records() {
    let z4 = own(&zmod(4));
    let r = classify(&z4, &sub(&z4, &[0, 2])).unwrap();
    let p = r.predicates.unwrap();
    assert!(p.prime.holds() && p.one_absorbing.holds() && p.weakly_one_absorbing.holds());
    assert!(p.triple_zeros.is_empty());

    let z20 = over(&ntrunc(3, 20), 20);
    let p = classify(&z20, &z20.zero_submodule()).unwrap().predicates.unwrap();
    assert!(!p.prime.holds() && !p.one_absorbing.holds() && p.weakly_one_absorbing.holds());
    assert!(as_tuples(&p.triple_zeros).contains(&(2, 2, 5)));

    let whole = classify(&z4, &z4.whole()).unwrap();
    assert!(!whole.proper && whole.predicates.is_none());
}

#[test]
fn ideal_classification() {
    let z4 = zmod(4);
    let c = z4.classify_ideal(&z4.ideal(set(4, &[0, 2])).unwrap()).unwrap();
    assert!(ideal_prime_violations(&z4, mask_of(&[0, 2])).is_empty());
    assert!(c.prime.holds() && c.one_absorbing.holds() && c.weakly_one_absorbing.holds());

    let c = z4.classify_ideal(&z4.zero_ideal()).unwrap();
    assert_eq!(ideal_prime_violations(&z4, 1)[0], (2, 2));
    assert!(!c.prime.holds());
    assert!(ideal_absorbing_violations(&z4, 1, false).is_empty());
    assert!(c.one_absorbing.holds());

    let z12 = zmod(12);
    let c = z12.classify_ideal(&z12.zero_ideal()).unwrap();
    assert!(ideal_absorbing_violations(&z12, 1, true).is_empty());
    assert!(c.weakly_one_absorbing.holds());
    assert!(ideal_absorbing_violations(&z12, 1, false).contains(&(2, 2, 3)));
    assert_eq!(c.one_absorbing, Outcome::Fails((2, 2, 3)));
}

#[test]
fn localization_class_counts() {
    let z6 = own(&zmod(6));
    assert_eq!(fraction_class_count(&z6, &[1, 2, 4]), 3);
    let t = z6.scalars().mult_closed(set(6, &[1, 2, 4])).unwrap();
    assert_eq!(localize(&z6, &t).unwrap().class_count(), 3);

    let z4 = own(&zmod(4));
    assert_eq!(fraction_class_count(&z4, &[1, 3]), 4);
    let t = z4.scalars().mult_closed(set(4, &[1, 3])).unwrap();
    assert_eq!(localize(&z4, &t).unwrap().class_count(), 4);

    let t = z4.scalars().mult_closed(set(4, &[0, 1])).unwrap();
    assert_eq!(fraction_class_count(&z4, &[0, 1]), 1);
    assert_eq!(localize(&z4, &t).unwrap().class_count(), 1);

    let z20 = over(&ntrunc(3, 20), 20);
    let powers = z20.scalars().mult_closed_generated(&set(23, &[2]));
    assert_eq!(fraction_class_count(&z20, &powers.to_vec()), 5);
    assert_eq!(localize(&z20, &powers).unwrap().class_count(), 5);
}

#[test]
fn homomorphisms() {
    let z4 = own(&zmod(4));
    let double = scalar_endomorphism(&z4, 2);
    assert_eq!(double.full_image().to_vec(), vec![0, 2]);
    assert_eq!(double.kernel().to_vec(), vec![0, 2]);
    let inst = default_catalog().into_iter().find(|i| i.name == "Z4").unwrap();
    let reduce = &inst.homs.iter().find(|h| h.name == "reduce-mod-2").unwrap().value;
    assert_eq!(reduce.kernel().to_vec(), vec![0, 2]);
    assert!(reduce.is_surjective());
}

fn instance_with(name: &str, m: FiniteSemimodule) -> Instance {
    Instance::new(name, m)
}

#[test]
fn harness_examples() {
    let z4 = own(&zmod(4));
    let inst = instance_with("Z4", z4.clone()).with_subsemimodule("N", sub(&z4, &[0, 2]));
    let v = harness::verify("char-1abs", &inst).unwrap();
    assert_eq!(v.status, Status::Pass);
    assert_eq!(v.checked, 1);

    let z6 = own(&zmod(6));
    assert_eq!(harness::verify("local-necessity", &instance_with("Z6", z6)).unwrap().status, Status::Pass);

    let z20 = over(&ntrunc(3, 20), 20);
    let inst = instance_with("Z20", z20.clone()).with_subsemimodule("N", z20.zero_submodule());
    let v = harness::verify("tz-ncube", &inst).unwrap();
    assert!(v.is_substantive_pass());
    // N³ = (N : M)³ M with (N : M) = {0, 20}.
    let c = colon(&z20, 1);
    let cube = ideal_product(z20.scalars(), ideal_product(z20.scalars(), c, c), c);
    assert_eq!(ideal_action(&z20, cube), 1);

    let inst = instance_with("Z4", z4.clone()).with_ideal("I", z4.scalars().ideal(set(4, &[0, 2])).unwrap());
    assert_eq!(harness::verify("mc-im-equiv", &inst).unwrap().status, Status::Vacuous);

    assert!(matches!(harness::verify("nope", &inst), Err(Error::UnknownTheorem(_))));
    let empty = harness::sweep(&[], &harness::theorem_ids().collect::<Vec<_>>()).unwrap();
    assert!(empty.cells.is_empty());
}

#[test]
fn mc_ids_pass_only_on_boolean_and_prime_fields() {
    let ids = ["mc-lift", "mc-im-equiv", "mc-colon-corr", "weakly-mc-lift", "weakly-mc-im-equiv", "weakly-colon-corr"];
    let report = harness::sweep(&default_catalog(), &ids).unwrap();
    for cell in &report.cells {
        let v = cell.verdict().expect("no errors");
        let expected = if ["B", "Z2", "Z3"].contains(&cell.instance.as_str()) { Status::Pass } else { Status::Vacuous };
        assert_eq!(v.status, expected, "{} {}", cell.instance, cell.theorem);
    }
}

#[test]
fn search_finds_smallest_weakly_not_one_absorbing() {
    use semimod::harness::{search_counterexample, Relation};
    let catalog = default_catalog();
    let hit = search_counterexample(Relation::WeaklyNotOneAbsorbing, &catalog, 24, DEFAULT_CAP).unwrap().unwrap();
    // Naive: among catalog instances ordered by |S| + |M|, the first with a weakly-not-1abs N.
    let mut ordered: Vec<&Instance> = catalog.iter().collect();
    ordered.sort_by_key(|i| i.module.size() + i.module.scalars().size());
    let first = ordered
        .iter()
        .find(|i| {
            lattice(&i.module).into_iter().filter(|&n| n != full(i.module.size())).any(|n| {
                absorbing_violations(&i.module, n, true).is_empty() && !absorbing_violations(&i.module, n, false).is_empty()
            })
        })
        .unwrap();
    assert_eq!(hit.module.size() + hit.module.scalars().size(), first.module.size() + first.module.scalars().size());
    assert_eq!(hit.instance, "BxB");
    assert_eq!(hit.subsemimodule.to_vec(), vec![0]);
    // The catalog also holds the separating example over N(3,8).
    let z8 = catalog.iter().find(|i| i.name == "Z8 over N(3,8)").unwrap();
    assert!(semimod::harness::Relation::WeaklyNotOneAbsorbing.holds(&z8.module, &z8.module.zero_submodule()).unwrap());
}
