use std::collections::BTreeSet;

use serde_json::{json, Value};

use crate::classify::{is_one_absorbing_prime, is_weakly_one_absorbing_prime, triple_zero_solutions};
use crate::constructions::HomTable;
use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::lattice::DEFAULT_CAP;
use crate::localize::localize;
use crate::semimodule::{FiniteSemimodule, Subsemimodule};
use crate::semiring::Ideal;

use super::context::{Candidate, Context};
use super::{Hypothesis, Status, Verdict};

pub(super) fn run(id: &'static str, cx: &Context) -> Result<Verdict> {
    let check: fn(&mut Tally, &Context) -> Result<Option<Value>> = match id {
        "char-1abs" => char_one_absorbing,
        "mult-char" => |t, cx| mult_char(t, cx, false),
        "local-necessity" => local_necessity,
        "nonlocal-prime" => nonlocal_prime,
        "colon-corr" => colon_corr,
        "mc-lift" => |t, cx| mc_lift(t, cx, false),
        "mc-im-equiv" => |t, cx| mc_im_equiv(t, cx, false),
        "mc-colon-corr" => |t, cx| mc_colon_corr(t, cx, false),
        "hom-colon" => hom_colon,
        "hom-transfer" => hom_transfer,
        "loc-transfer" => |t, cx| loc_transfer(t, cx, false),
        "char-weakly" => char_weakly,
        "weakly-mult-char" => |t, cx| mult_char(t, cx, true),
        "weakly-mc-lift" => |t, cx| mc_lift(t, cx, true),
        "weakly-mc-im-equiv" => |t, cx| mc_im_equiv(t, cx, true),
        "weakly-colon-corr" => |t, cx| mc_colon_corr(t, cx, true),
        "weakly-loc-transfer" => |t, cx| loc_transfer(t, cx, true),
        "cyclic-equiv" => cyclic_equiv,
        "subtractive-union" => subtractive_union,
        "tz-products" => tz_products,
        "tz-square" => |t, cx| tz_colon_powers(t, cx, TzPower::Square),
        "tz-cube-ann" => |t, cx| tz_colon_powers(t, cx, TzPower::CubeAnn),
        "tz-ncube" => |t, cx| tz_colon_powers(t, cx, TzPower::NCube),
        "icubed-equiv" => icubed_equiv,
        other => return Err(Error::UnknownTheorem(other.to_string())),
    };
    let mut tally = Tally { hypotheses: Vec::new(), checked: 0 };
    let witness = check(&mut tally, cx)?;
    let status = if witness.is_some() {
        Status::Fail
    } else if tally.hypotheses.iter().any(|h| !h.held) {
        Status::Vacuous
    } else {
        Status::Pass
    };
    Ok(Verdict { theorem: id.to_string(), status, witness, hypotheses: tally.hypotheses, checked: tally.checked })
}

/// Hypotheses and qualifying-tuple count gathered while a check runs.
struct Tally {
    hypotheses: Vec<Hypothesis>,
    checked: usize,
}

impl Tally {
    /// Records instance-level hypotheses; returns whether all of them held.
    fn require(&mut self, hyps: &[(&str, bool)]) -> bool {
        for &(name, held) in hyps {
            self.hypotheses.push(Hypothesis { name: name.to_string(), held });
        }
        hyps.iter().all(|h| h.1)
    }
}

fn zero_only(m: &FiniteSemimodule, set: &ElemSet) -> bool {
    set.iter().all(|x| x == m.zero())
}

fn scalar_set(cx: &Context, items: impl IntoIterator<Item = usize>) -> ElemSet {
    ElemSet::from_iter(cx.scalars().size(), items)
}

/// `{x : P x ⊆ N}` by direct evaluation.
fn residual_by_set(m: &FiniteSemimodule, n: &ElemSet, p: &ElemSet) -> ElemSet {
    ElemSet::from_iter(m.size(), m.elements().filter(|&x| p.iter().all(|a| n.contains(m.act(a, x)))))
}

/// `{s : s M ⊆ N}` by direct evaluation.
fn colon_by_scan(m: &FiniteSemimodule, n: &ElemSet) -> ElemSet {
    ElemSet::from_iter(m.scalars().size(), m.scalars().elements().filter(|&s| m.elements().all(|x| n.contains(m.act(s, x)))))
}

/// Distinct scalar sets with their products against every lattice member.
struct ProductSets {
    sets: Vec<ElemSet>,
    /// `images[i][k]` is `sets[i] · lattice[k]` as a set of module elements.
    images: Vec<Vec<ElemSet>>,
}

impl ProductSets {
    fn new(m: &FiniteSemimodule, lattice: &[Subsemimodule], sets: impl IntoIterator<Item = ElemSet>) -> Self {
        let sets: Vec<ElemSet> = sets.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
        let images = sets.iter().map(|p| lattice.iter().map(|k| m.scale_set(p, k.members())).collect()).collect();
        ProductSets { sets, images }
    }
}

fn pairwise_products(cx: &Context, ideals: &[Ideal]) -> Vec<ElemSet> {
    let s = cx.scalars();
    ideals.iter().flat_map(|i| ideals.iter().map(move |j| s.product_set(i.members(), j.members()))).collect()
}

fn char_one_absorbing(t: &mut Tally, cx: &Context) -> Result<Option<Value>> {
    let m = cx.module();
    let s = cx.scalars();
    let nu = cx.nonunits();
    let elems: Vec<ElemSet> = nu.iter().flat_map(|&a| nu.iter().map(move |&b| (a, b))).map(|(a, b)| scalar_set(cx, [s.mul(a, b)])).collect();
    let single = ProductSets::new(m, &cx.lattice, elems);
    let ideal = ProductSets::new(m, &cx.lattice, pairwise_products(cx, &cx.proper_ideals));
    for c in &cx.candidates {
        let n = c.n.members();
        let colon = colon_by_scan(m, n);
        let st1 = nu.iter().all(|&a| {
            nu.iter().all(|&b| {
                m.elements().all(|x| {
                    !n.contains(m.act(a, m.act(b, x))) || colon.contains(s.mul(a, b)) || n.contains(x)
                })
            })
        });
        let st2 = nu.iter().all(|&a| {
            nu.iter().all(|&b| {
                let ab = scalar_set(cx, [s.mul(a, b)]);
                colon.contains(s.mul(a, b)) || residual_by_set(m, n, &ab).is_subset(n)
            })
        });
        let clause = |ps: &ProductSets| {
            ps.sets.iter().zip(&ps.images).all(|(p, imgs)| {
                p.is_subset(&colon) || imgs.iter().zip(&cx.lattice).all(|(img, k)| !img.is_subset(n) || k.is_subset(&c.n))
            })
        };
        let st3 = clause(&single);
        let st4 = clause(&ideal);
        t.checked += 1;
        let all = [st1, st2, st3, st4];
        if all.iter().any(|&v| v != st1) {
            return Ok(Some(json!({"N": c.name, "statements": all})));
        }
    }
    Ok(None)
}

fn char_weakly(t: &mut Tally, cx: &Context) -> Result<Option<Value>> {
    let m = cx.module();
    let s = cx.scalars();
    let nu = cx.nonunits();
    let zero = ElemSet::singleton(m.size(), m.zero());
    let elems: Vec<ElemSet> = nu.iter().flat_map(|&a| nu.iter().map(move |&b| (a, b))).map(|(a, b)| scalar_set(cx, [s.mul(a, b)])).collect();
    let single = ProductSets::new(m, &cx.lattice, elems);
    let scaled_ideals = nu.iter().flat_map(|&a| cx.proper_ideals.iter().map(move |j| (a, j))).map(|(a, j)| {
        scalar_set(cx, j.iter().map(|b| s.mul(a, b)))
    });
    let element_ideal = ProductSets::new(m, &cx.lattice, scaled_ideals.collect::<Vec<_>>());
    let ideal = ProductSets::new(m, &cx.lattice, pairwise_products(cx, &cx.proper_ideals));
    for c in cx.candidates.iter().filter(|c| c.subtractive) {
        let n = c.n.members();
        let colon = colon_by_scan(m, n);
        let w1 = nu.iter().all(|&a| {
            nu.iter().all(|&b| {
                m.elements().all(|x| {
                    let abx = m.act(a, m.act(b, x));
                    abx == m.zero() || !n.contains(abx) || colon.contains(s.mul(a, b)) || n.contains(x)
                })
            })
        });
        let residual_pairs: Vec<(ElemSet, ElemSet)> = nu
            .iter()
            .flat_map(|&a| nu.iter().map(move |&b| s.mul(a, b)))
            .filter(|&ab| !colon.contains(ab))
            .map(|ab| {
                let p = scalar_set(cx, [ab]);
                (residual_by_set(m, n, &p), residual_by_set(m, &zero, &p))
            })
            .collect();
        let w2 = residual_pairs.iter().all(|(r, z)| *r == z.union(n));
        let w3 = residual_pairs.iter().all(|(r, z)| r == z || r == n);
        let clause = |ps: &ProductSets| {
            ps.sets.iter().zip(&ps.images).all(|(p, imgs)| {
                p.is_subset(&colon)
                    || imgs.iter().zip(&cx.lattice).all(|(img, k)| zero_only(m, img) || !img.is_subset(n) || k.is_subset(&c.n))
            })
        };
        let w4 = clause(&single);
        let w5 = clause(&element_ideal);
        let w6 = clause(&ideal);
        t.checked += 1;
        let all = [w1, w2, w3, w4, w5, w6];
        if all.iter().any(|&v| v != w1) {
            return Ok(Some(json!({"N": c.name, "statements": all})));
        }
    }
    Ok(None)
}

/// With `weakly`, the variant for subtractive `N` with the nonzero requirement.
fn mult_char(t: &mut Tally, cx: &Context, weakly: bool) -> Result<Option<Value>> {
    if !t.require(&[("multiplication", cx.multiplication)]) {
        return Ok(None);
    }
    let m = cx.module();
    let s = cx.scalars();
    let colons: Vec<Ideal> = cx.lattice.iter().map(|k| m.colon_ideal(k)).collect::<Result<_>>()?;
    let full = ElemSet::full(m.size());
    let mut products: Vec<(usize, usize, ElemSet)> = Vec::new();
    for (i1, a) in cx.proper_ideals.iter().enumerate() {
        for (i2, b) in cx.proper_ideals.iter().enumerate().skip(i1) {
            let p = s.product_set(a.members(), b.members());
            if !products.iter().any(|q| q.2 == p) {
                products.push((i1, i2, p));
            }
        }
    }
    // triple[i][k] = I1 I2 (K :_S M) M, two[i] = I1 I2 M.
    let two: Vec<ElemSet> = products.iter().map(|(_, _, p)| m.scale_set(p, &full)).collect();
    let triple: Vec<Vec<ElemSet>> = products
        .iter()
        .map(|(_, _, p)| colons.iter().map(|a3| m.scale_set(&s.product_set(p, a3.members()), &full)).collect())
        .collect();
    for c in cx.candidates.iter().filter(|c| !weakly || c.subtractive) {
        let n = c.n.members();
        let mut counterexample = None;
        'scan: for (pi, (i1, i2, _)) in products.iter().enumerate() {
            for (ki, k) in cx.lattice.iter().enumerate() {
                let img = &triple[pi][ki];
                let applies = img.is_subset(n) && !(weakly && zero_only(m, img));
                if applies && !two[pi].is_subset(n) && !k.is_subset(&c.n) {
                    counterexample = Some((*i1, *i2, ki));
                    break 'scan;
                }
            }
        }
        let lhs = if weakly { c.weakly } else { c.one_absorbing };
        t.checked += 1;
        if lhs != counterexample.is_none() {
            let mut w = json!({"N": c.name, "absorbing": lhs, "product-clause": counterexample.is_none()});
            if let Some((i1, i2, k)) = counterexample {
                w["I1"] = json!(cx.sset(cx.proper_ideals[i1].members()));
                w["I2"] = json!(cx.sset(cx.proper_ideals[i2].members()));
                w["K"] = json!(cx.mset(cx.lattice[k].members()));
            }
            return Ok(Some(w));
        }
    }
    Ok(None)
}

fn local_necessity(t: &mut Tally, cx: &Context) -> Result<Option<Value>> {
    for c in cx.candidates.iter().filter(|c| c.one_absorbing && !c.prime) {
        t.checked += 1;
        if cx.local.is_none() {
            return Ok(Some(json!({"N": c.name})));
        }
    }
    Ok(None)
}

fn nonlocal_prime(t: &mut Tally, cx: &Context) -> Result<Option<Value>> {
    if !t.require(&[("non-local scalars", cx.local.is_none())]) {
        return Ok(None);
    }
    for c in &cx.candidates {
        t.checked += 1;
        if c.one_absorbing != c.prime {
            return Ok(Some(json!({"N": c.name, "absorbing": c.one_absorbing, "prime": c.prime})));
        }
    }
    Ok(None)
}

fn colon_corr(t: &mut Tally, cx: &Context) -> Result<Option<Value>> {
    for c in cx.candidates.iter().filter(|c| c.one_absorbing) {
        t.checked += 1;
        let class = cx.classify_ideal(&c.colon)?;
        if let Some(w) = class.one_absorbing.witness() {
            return Ok(Some(json!({"N": c.name, "colon": cx.sset(c.colon.members()), "ideal-witness": [cx.sl(w.0), cx.sl(w.1), cx.sl(w.2)]})));
        }
    }
    Ok(None)
}

fn mc_hypotheses(t: &mut Tally, cx: &Context) -> bool {
    t.require(&[("MC", cx.mc.holds()), ("multiplication", cx.multiplication)])
}

fn ideal_absorbing(cx: &Context, i: &Ideal, weakly: bool) -> Result<bool> {
    let class = cx.classify_ideal(i)?;
    Ok(if weakly { class.weakly_one_absorbing.holds() } else { class.one_absorbing.holds() })
}

fn sub_absorbing(m: &FiniteSemimodule, n: &Subsemimodule, weakly: bool) -> Result<bool> {
    Ok(if weakly { is_weakly_one_absorbing_prime(m, n)?.holds() } else { is_one_absorbing_prime(m, n)?.holds() })
}

fn mc_lift(t: &mut Tally, cx: &Context, weakly: bool) -> Result<Option<Value>> {
    if !mc_hypotheses(t, cx) {
        return Ok(None);
    }
    let m = cx.module();
    let s = cx.scalars();
    let nu = cx.nonunits();
    for named in &cx.ideal_candidates {
        let i = &named.value;
        if !i.is_proper() || !ideal_absorbing(cx, i, weakly)? {
            continue;
        }
        t.checked += 1;
        let im = m.ideal_action(i)?;
        for &a in &nu {
            for &b in &nu {
                let ab = s.mul(a, b);
                for x in m.elements() {
                    let abx = m.act(ab, x);
                    if weakly && abx == m.zero() {
                        continue;
                    }
                    if im.contains(abx) && !i.contains(ab) && !im.contains(x) {
                        return Ok(Some(json!({"I": named.name, "a": cx.sl(a), "b": cx.sl(b), "x": cx.ml(x)})));
                    }
                }
            }
        }
    }
    Ok(None)
}

fn mc_im_equiv(t: &mut Tally, cx: &Context, weakly: bool) -> Result<Option<Value>> {
    if !mc_hypotheses(t, cx) {
        return Ok(None);
    }
    let m = cx.module();
    for named in &cx.ideal_candidates {
        let i = &named.value;
        if !i.is_proper() {
            continue;
        }
        let im = m.ideal_action(i)?;
        if weakly && !m.is_subtractive(&im) {
            continue;
        }
        t.checked += 1;
        if !im.is_proper() {
            return Ok(Some(json!({"I": named.name, "IM": "M"})));
        }
        let lhs = sub_absorbing(m, &im, weakly)?;
        let rhs = ideal_absorbing(cx, i, weakly)?;
        if lhs != rhs {
            return Ok(Some(json!({"I": named.name, "IM": cx.mset(im.members()), "module-side": lhs, "ideal-side": rhs})));
        }
    }
    Ok(None)
}

fn mc_colon_corr(t: &mut Tally, cx: &Context, weakly: bool) -> Result<Option<Value>> {
    if !mc_hypotheses(t, cx) {
        return Ok(None);
    }
    let m = cx.module();
    let mut absorbing_images = Vec::new();
    for i in &cx.proper_ideals {
        if ideal_absorbing(cx, i, weakly)? {
            absorbing_images.push(m.ideal_action(i)?);
        }
    }
    for c in cx.candidates.iter().filter(|c| !weakly || c.subtractive) {
        t.checked += 1;
        let own = if weakly { c.weakly } else { c.one_absorbing };
        let colon = ideal_absorbing(cx, &c.colon, weakly)?;
        let image = absorbing_images.contains(&c.n);
        if own != colon || own != image {
            return Ok(Some(json!({"N": c.name, "absorbing": own, "colon-absorbing": colon, "image-of-absorbing-ideal": image})));
        }
    }
    Ok(None)
}

fn lattice_of<'c>(cx: &'c Context, module: &FiniteSemimodule) -> Result<std::borrow::Cow<'c, [Subsemimodule]>> {
    if module == cx.module() {
        Ok(std::borrow::Cow::Borrowed(&cx.lattice))
    } else {
        Ok(std::borrow::Cow::Owned(module.enumerate_subsemimodules(DEFAULT_CAP)?))
    }
}

fn require_homs(cx: &Context) -> Result<()> {
    if cx.instance.homs.is_empty() {
        return Err(Error::MissingInstancePart("homomorphisms".into()));
    }
    Ok(())
}

fn hom_colon(t: &mut Tally, cx: &Context) -> Result<Option<Value>> {
    require_homs(cx)?;
    for named in &cx.instance.homs {
        let f: &HomTable = &named.value;
        let (m1, m2) = (f.source(), f.target());
        for n2 in lattice_of(cx, m2)?.iter() {
            t.checked += 1;
            if !m2.colon_ideal(n2)?.is_subset(&m1.colon_ideal(&f.preimage(n2))?) {
                return Ok(Some(json!({"hom": named.name, "N2": m2.format_set(n2.members())})));
            }
        }
        if f.is_surjective() {
            for n1 in lattice_of(cx, m1)?.iter() {
                t.checked += 1;
                if !m1.colon_ideal(n1)?.is_subset(&m2.colon_ideal(&f.image(n1))?) {
                    return Ok(Some(json!({"hom": named.name, "N1": m1.format_set(n1.members())})));
                }
            }
        }
    }
    Ok(None)
}

fn hom_transfer(t: &mut Tally, cx: &Context) -> Result<Option<Value>> {
    require_homs(cx)?;
    for named in &cx.instance.homs {
        let f = &named.value;
        let (m1, m2) = (f.source(), f.target());
        let image = f.full_image();
        for n2 in lattice_of(cx, m2)?.iter().filter(|n| n.is_proper()) {
            if image.is_subset(n2) || !is_one_absorbing_prime(m2, n2)?.holds() {
                continue;
            }
            t.checked += 1;
            let pre = f.preimage(n2);
            if !pre.is_proper() || !is_one_absorbing_prime(m1, &pre)?.holds() {
                return Ok(Some(json!({"hom": named.name, "N2": m2.format_set(n2.members()), "preimage": m1.format_set(pre.members())})));
            }
        }
        if !f.is_surjective() {
            continue;
        }
        let kernel = f.kernel();
        for n1 in lattice_of(cx, m1)?.iter().filter(|n| n.is_proper()) {
            if !kernel.is_subset(n1) || !m1.is_subtractive(n1) || !m1.is_strong(n1) || !is_one_absorbing_prime(m1, n1)?.holds() {
                continue;
            }
            t.checked += 1;
            let img = f.image(n1);
            if !img.is_proper() || !is_one_absorbing_prime(m2, &img)?.holds() {
                return Ok(Some(json!({"hom": named.name, "N1": m1.format_set(n1.members()), "image": m2.format_set(img.members())})));
            }
        }
    }
    Ok(None)
}

fn loc_transfer(t: &mut Tally, cx: &Context, weakly: bool) -> Result<Option<Value>> {
    if cx.instance.tsets.is_empty() {
        return Err(Error::MissingInstancePart("multiplicatively closed sets".into()));
    }
    let m = cx.module();
    let absorbing: Vec<&Candidate> = cx.candidates.iter().filter(|c| if weakly { c.weakly } else { c.one_absorbing }).collect();
    for named in &cx.instance.tsets {
        if named.value.contains(cx.scalars().zero()) || absorbing.is_empty() {
            continue;
        }
        let loc = localize(m, &named.value)?;
        let lm = loc.module().expect("0 is not in T");
        for c in &absorbing {
            let Some(tn) = loc.localize_subsemimodule(&c.n)? else { continue };
            if !tn.is_proper() {
                continue;
            }
            t.checked += 1;
            if !sub_absorbing(lm, &tn, weakly)? {
                return Ok(Some(json!({"T": named.name, "N": c.name, "localized": lm.format_set(tn.members())})));
            }
        }
    }
    Ok(None)
}

fn cyclic_equiv(t: &mut Tally, cx: &Context) -> Result<Option<Value>> {
    let m = cx.module();
    for x in m.elements() {
        let sx = m.cyclic(x);
        if !sx.is_proper() || !m.is_subtractive(&sx) || !m.element_annihilator(x).is_subset(&m.colon_ideal(&sx)?) {
            continue;
        }
        t.checked += 1;
        let weakly = is_weakly_one_absorbing_prime(m, &sx)?.holds();
        let strong = is_one_absorbing_prime(m, &sx)?.holds();
        if weakly != strong {
            return Ok(Some(json!({"x": cx.ml(x), "Sx": cx.mset(sx.members()), "weakly": weakly, "absorbing": strong})));
        }
    }
    Ok(None)
}

fn subtractive_union(t: &mut Tally, cx: &Context) -> Result<Option<Value>> {
    let m = cx.module();
    let subtractive: Vec<&Subsemimodule> = cx.lattice.iter().filter(|n| m.is_subtractive(n)).collect();
    for (i, n1) in subtractive.iter().enumerate() {
        for n2 in &subtractive[i..] {
            let union = n1.members().union(n2.members());
            if m.subsemimodule(union.clone()).is_err() {
                continue;
            }
            t.checked += 1;
            if &union != n1.members() && &union != n2.members() {
                return Ok(Some(json!({"N1": cx.mset(n1.members()), "N2": cx.mset(n2.members())})));
            }
        }
    }
    Ok(None)
}

fn tz_products(t: &mut Tally, cx: &Context) -> Result<Option<Value>> {
    if !t.require(&[("local scalars", cx.local.is_some())]) {
        return Ok(None);
    }
    let m = cx.module();
    let s = cx.scalars();
    for c in cx.candidates.iter().filter(|c| c.subtractive && c.weakly) {
        let n = c.n.members();
        let colon = c.colon.members();
        for tz in triple_zero_solutions(m, &c.n)? {
            t.checked += 1;
            let (a, b, x) = (tz.a, tz.b, tz.m);
            let single = |v: usize| scalar_set(cx, [v]);
            let xs = ElemSet::singleton(m.size(), x);
            let a_colon = s.product_set(&single(a), colon);
            let b_colon = s.product_set(&single(b), colon);
            let products = [
                ("abN", m.scale_set(&single(s.mul(a, b)), n)),
                ("a(N:M)m", m.scale_set(&a_colon, &xs)),
                ("b(N:M)m", m.scale_set(&b_colon, &xs)),
                ("a(N:M)N", m.scale_set(&a_colon, n)),
                ("b(N:M)N", m.scale_set(&b_colon, n)),
                ("(N:M)^2m", m.scale_set(&s.product_set(colon, colon), &xs)),
            ];
            if let Some((name, set)) = products.iter().find(|(_, set)| !zero_only(m, set)) {
                return Ok(Some(json!({
                    "N": c.name,
                    "triple-zero": [cx.sl(a), cx.sl(b), cx.ml(x)],
                    "product": name,
                    "value": cx.mset(set),
                })));
            }
        }
    }
    Ok(None)
}

#[derive(Clone, Copy)]
enum TzPower {
    Square,
    CubeAnn,
    NCube,
}

fn tz_colon_powers(t: &mut Tally, cx: &Context, which: TzPower) -> Result<Option<Value>> {
    let mut hyps = vec![("local scalars", cx.local.is_some())];
    if matches!(which, TzPower::NCube) {
        hyps.push(("multiplication", cx.multiplication));
    }
    if !t.require(&hyps) {
        return Ok(None);
    }
    let m = cx.module();
    let s = cx.scalars();
    let full = ElemSet::full(m.size());
    let ann = m.annihilator();
    for c in cx.candidates.iter().filter(|c| c.subtractive && c.weakly && !c.one_absorbing) {
        t.checked += 1;
        let colon = c.colon.members();
        let square = s.product_set(colon, colon);
        let bad = match which {
            TzPower::Square => {
                let v = m.scale_set(&square, c.n.members());
                (!zero_only(m, &v)).then(|| cx.mset(&v))
            }
            TzPower::CubeAnn => {
                let cube = s.product_set(&square, colon);
                (!cube.is_subset(ann.members())).then(|| cx.sset(&cube))
            }
            TzPower::NCube => {
                let v = m.scale_set(&s.product_set(&square, colon), &full);
                (!zero_only(m, &v)).then(|| cx.mset(&v))
            }
        };
        if let Some(value) = bad {
            return Ok(Some(json!({"N": c.name, "value": value})));
        }
    }
    Ok(None)
}

fn icubed_equiv(t: &mut Tally, cx: &Context) -> Result<Option<Value>> {
    if !t.require(&[("local scalars", cx.local.is_some()), ("MC", cx.mc.holds()), ("multiplication", cx.multiplication)]) {
        return Ok(None);
    }
    let m = cx.module();
    let s = cx.scalars();
    for named in &cx.ideal_candidates {
        let i = &named.value;
        if !i.is_proper() || s.ideal_power(i, 3)? == s.zero_ideal() {
            continue;
        }
        let im = m.ideal_action(i)?;
        if !m.is_subtractive(&im) {
            continue;
        }
        t.checked += 1;
        if !im.is_proper() {
            return Ok(Some(json!({"I": named.name, "IM": "M"})));
        }
        let all = [
            sub_absorbing(m, &im, true)?,
            sub_absorbing(m, &im, false)?,
            ideal_absorbing(cx, i, false)?,
            ideal_absorbing(cx, i, true)?,
        ];
        if all.iter().any(|&v| v != all[0]) {
            return Ok(Some(json!({"I": named.name, "statements": all})));
        }
    }
    Ok(None)
}
