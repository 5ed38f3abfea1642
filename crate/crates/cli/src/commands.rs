use std::fmt::Write as _;
use std::io::Write as _;
use std::path::Path;

use semimod::classify::{is_one_absorbing_prime, is_prime_subsemimodule, is_weakly_one_absorbing_prime};
use semimod::constructions::module_self;
use semimod::document::{load_catalog, parse_instance, Document};
use semimod::harness::{
    self, default_catalog, random_semirings, search_counterexample, CellOutcome, Context, Instance, Named, Relation,
    SweepCell,
};
use semimod::{
    classify as classify_subsemimodule, localize as localize_module, ElemSet, Error, FiniteSemimodule, Outcome,
    ProductMode, Result, Subsemimodule, DEFAULT_CAP,
};

use crate::report::{
    ClassificationView, FractionClassView, LocalizationView, LocalizedSubView, PredicateView, Report, ResultRow,
    SearchView, SearchWitness,
};

fn labels(m: &FiniteSemimodule, set: &ElemSet) -> Vec<String> {
    set.iter().map(|x| m.label(x).to_string()).collect()
}

fn scalar_labels(m: &FiniteSemimodule, set: &ElemSet) -> Vec<String> {
    set.iter().map(|a| m.scalars().label(a).to_string()).collect()
}

fn predicate(outcome: &Outcome<impl WitnessLabels>, m: &FiniteSemimodule) -> PredicateView {
    PredicateView { holds: outcome.holds(), witness: outcome.witness().map(|w| w.labels(m)) }
}

trait WitnessLabels {
    fn labels(&self, m: &FiniteSemimodule) -> Vec<String>;
}

impl WitnessLabels for (usize, usize) {
    fn labels(&self, m: &FiniteSemimodule) -> Vec<String> {
        vec![m.scalars().label(self.0).to_string(), m.label(self.1).to_string()]
    }
}

impl WitnessLabels for (usize, usize, usize) {
    fn labels(&self, m: &FiniteSemimodule) -> Vec<String> {
        let s = m.scalars();
        vec![s.label(self.0).to_string(), s.label(self.1).to_string(), m.label(self.2).to_string()]
    }
}

/// The instance's named subsemimodules, or every proper one.
fn targets(inst: &Instance) -> Result<Vec<Named<Subsemimodule>>> {
    if !inst.subsemimodules.is_empty() {
        return Ok(inst.subsemimodules.clone());
    }
    let m = &inst.module;
    Ok(m.enumerate_subsemimodules(DEFAULT_CAP)?
        .into_iter()
        .filter(|n| n.is_proper())
        .map(|n| Named::new(m.format_set(n.members()), n))
        .collect())
}

fn classification(m: &FiniteSemimodule, name: &str, n: &Subsemimodule, strict: bool) -> Result<ClassificationView> {
    let record = classify_subsemimodule(m, n)?;
    let Some(p) = record.predicates else {
        return Err(Error::NotProper.at(format!("subsemimodule `{name}`")));
    };
    let mode = if strict { ProductMode::Strict } else { ProductMode::Lax };
    let square = match m.subsemimodule_product(n, n, mode) {
        Ok(sq) => Some(labels(m, sq.members())),
        Err(Error::NotMultiplication) => None,
        Err(e) => return Err(e),
    };
    let s = m.scalars();
    Ok(ClassificationView {
        subsemimodule: name.to_string(),
        members: labels(m, n.members()),
        colon: scalar_labels(m, m.colon_ideal(n)?.members()),
        subtractive: record.subtractive,
        strong: record.strong,
        prime: predicate(&p.prime, m),
        one_absorbing_prime: predicate(&p.one_absorbing, m),
        weakly_one_absorbing_prime: predicate(&p.weakly_one_absorbing, m),
        triple_zeros: p
            .triple_zeros
            .iter()
            .map(|t| [s.label(t.a).to_string(), s.label(t.b).to_string(), m.label(t.m).to_string()])
            .collect(),
        square,
    })
}

pub fn classify(path: &Path, name: Option<&str>, strict: bool) -> Result<Report> {
    let inst = parse_instance(path)?;
    let m = &inst.module;
    let mut report = Report::new("classify", inst.name.clone());
    match name {
        Some(name) => {
            let n = inst
                .subsemimodules
                .iter()
                .find(|n| n.name == name)
                .ok_or_else(|| Error::InvalidParam(format!("no subsemimodule named `{name}`")))?;
            report.classifications.push(classification(m, name, &n.value, strict)?);
        }
        None => {
            for n in targets(&inst)?.iter().filter(|n| n.value.is_proper()) {
                report.classifications.push(classification(m, &n.name, &n.value, strict)?);
            }
        }
    }
    Ok(report)
}

fn theorem_list(ids: &[String]) -> Result<Vec<&str>> {
    if ids.is_empty() {
        return Ok(harness::theorem_ids().collect());
    }
    ids.iter().map(|id| harness::lookup(id).map(|e| e.id)).collect()
}

pub fn verify(path: &Path, ids: &[String]) -> Result<Report> {
    let ids = theorem_list(ids)?;
    let inst = parse_instance(path)?;
    let cx = Context::new(&inst)?;
    let mut report = Report::new("verify", inst.name.clone());
    for id in ids {
        let outcome = match harness::verify_in(id, &cx) {
            Ok(v) => CellOutcome::Verdict(v),
            Err(e) => CellOutcome::Error { error: e.to_string() },
        };
        report.push_cell(SweepCell { instance: inst.name.clone(), theorem: id.to_string(), outcome });
    }
    for row in &mut report.results {
        row.instance = None;
    }
    Ok(report)
}

fn catalog(path: Option<&Path>) -> Result<(String, Vec<Instance>)> {
    match path {
        Some(p) => Ok((p.display().to_string(), load_catalog(p)?)),
        None => Ok(("built-in".to_string(), default_catalog())),
    }
}

pub fn sweep(path: Option<&Path>, ids: &[String]) -> Result<Report> {
    let ids = theorem_list(ids)?;
    let (label, instances) = catalog(path)?;
    let swept = harness::sweep(&instances, &ids)?;
    let mut report = Report::new("sweep", label);
    for cell in swept.cells {
        report.push_cell(cell);
    }
    Ok(report)
}

pub struct RandomPool {
    pub count: usize,
    pub seed: u64,
    pub max_size: usize,
}

pub fn search(relation: &str, cap: usize, path: Option<&Path>, random: RandomPool) -> Result<Report> {
    let relation: Relation = relation.parse()?;
    let (mut label, mut instances) = catalog(path)?;
    if random.count > 0 {
        if random.max_size < 2 {
            return Err(Error::InvalidParam("--max-size must be at least 2".into()));
        }
        let pool = random_semirings(random.seed, random.count, random.max_size);
        instances.extend(pool.into_iter().enumerate().map(|(i, s)| {
            Instance::new(format!("random-{}-{i}", random.seed), module_self(std::sync::Arc::new(s)))
        }));
        write!(label, " + {} random semirings (seed {})", random.count, random.seed).expect("string write");
    }
    let scanned = instances.iter().filter(|i| i.module.size() <= cap && i.module.scalars().size() <= cap).count();
    let hit = search_counterexample(relation, &instances, cap, DEFAULT_CAP)?;
    let witness = match hit {
        Some(hit) => {
            let inst = Instance::new(hit.instance.clone(), hit.module.clone()).with_subsemimodule("N", hit.subsemimodule.clone());
            let document = serde_json::to_value(Document::from_instance(&inst))
                .map_err(|e| Error::InvalidParam(format!("cannot serialize witness: {e}")))?;
            Some(SearchWitness {
                instance: hit.instance,
                subsemimodule: labels(&hit.module, hit.subsemimodule.members()),
                document,
            })
        }
        None => None,
    };
    let mut report = Report::new("search", label);
    report.search =
        Some(SearchView { relation: relation.id().to_string(), cap, instances_scanned: scanned, found: witness.is_some(), witness });
    Ok(report)
}

pub fn localize(path: &Path, tset: &str) -> Result<Report> {
    let inst = parse_instance(path)?;
    let t = inst
        .tsets
        .iter()
        .find(|t| t.name == tset)
        .ok_or_else(|| Error::InvalidParam(format!("no multiplicatively closed set named `{tset}`")))?;
    let m = &inst.module;
    let loc = localize_module(m, &t.value)?;
    let classes = loc.classes();
    let class_label = |c: usize| match loc.module() {
        Some(lm) => lm.label(c).to_string(),
        None => {
            let (x, t) = classes.representative(c);
            format!("{}/{}", m.label(x), m.scalars().label(t))
        }
    };
    let class_views = (0..loc.class_count())
        .map(|c| FractionClassView {
            label: class_label(c),
            fractions: m
                .elements()
                .flat_map(|x| t.value.iter().map(move |s| (x, s)))
                .filter(|&(x, s)| classes.class(x, s) == Some(c))
                .map(|(x, s)| format!("{}/{}", m.label(x), m.scalars().label(s)))
                .collect(),
        })
        .collect();
    let mut subs = Vec::new();
    for n in targets(&inst)? {
        let localized = loc.localize_subsemimodule(&n.value)?;
        let view = match (loc.module(), localized) {
            (Some(lm), Some(ln)) => {
                let proper = ln.is_proper();
                let decide = |f: fn(&FiniteSemimodule, &Subsemimodule) -> Result<bool>| -> Result<Option<bool>> {
                    if proper {
                        f(lm, &ln).map(Some)
                    } else {
                        Ok(None)
                    }
                };
                LocalizedSubView {
                    subsemimodule: n.name.clone(),
                    localized: labels(lm, ln.members()),
                    proper,
                    prime: decide(|m, n| Ok(is_prime_subsemimodule(m, n)?.holds()))?,
                    one_absorbing_prime: decide(|m, n| Ok(is_one_absorbing_prime(m, n)?.holds()))?,
                    weakly_one_absorbing_prime: decide(|m, n| Ok(is_weakly_one_absorbing_prime(m, n)?.holds()))?,
                }
            }
            _ => LocalizedSubView {
                subsemimodule: n.name.clone(),
                localized: Vec::new(),
                proper: false,
                prime: None,
                one_absorbing_prime: None,
                weakly_one_absorbing_prime: None,
            },
        };
        subs.push(view);
    }
    let mut report = Report::new("localize", inst.name.clone());
    report.localization = Some(LocalizationView {
        tset: t.name.clone(),
        tset_members: scalar_labels(m, t.value.members()),
        collapsed: loc.is_collapsed(),
        scalar_classes: loc.scalar_classes().len(),
        classes: class_views,
        subsemimodules: subs,
    });
    Ok(report)
}

fn row_line(row: &ResultRow) -> String {
    let status = match (&row.status, &row.error) {
        (Some(s), _) => serde_json::to_value(s).ok().and_then(|v| v.as_str().map(str::to_string)).unwrap_or_default(),
        (None, Some(e)) => format!("ERROR ({e})"),
        (None, None) => String::new(),
    };
    let place = row.instance.as_deref().map(|i| format!("{i:<20} ")).unwrap_or_default();
    let mut line = format!("{place}{:<26} {status}", row.theorem);
    if row.status.is_some() {
        write!(line, " (checked {})", row.checked).expect("string write");
    }
    if let Some(w) = &row.witness {
        write!(line, " witness {w}").expect("string write");
    }
    line
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn predicate_line(name: &str, p: &PredicateView) -> String {
    match &p.witness {
        Some(w) => format!("  {name:<28} no, witness ({})", w.join(", ")),
        None => format!("  {name:<28} {}", yes(p.holds)),
    }
}

const TRIPLE_ZEROS_SHOWN: usize = 8;

pub fn text(report: &Report) -> String {
    let mut out = String::new();
    let mut line = |s: String| {
        out.push_str(&s);
        out.push('\n');
    };
    line(format!("{} {}", report.command, report.instance));
    for c in &report.classifications {
        line(format!("N = {} {{{}}}", c.subsemimodule, c.members.join(",")));
        line(format!("  {:<28} {{{}}}", "(N : M)", c.colon.join(",")));
        line(format!("  {:<28} {}", "subtractive", yes(c.subtractive)));
        line(format!("  {:<28} {}", "strong", yes(c.strong)));
        line(predicate_line("prime", &c.prime));
        line(predicate_line("1-absorbing prime", &c.one_absorbing_prime));
        line(predicate_line("weakly 1-absorbing prime", &c.weakly_one_absorbing_prime));
        if !c.triple_zeros.is_empty() {
            let tz: Vec<String> = c.triple_zeros.iter().take(TRIPLE_ZEROS_SHOWN).map(|t| format!("({})", t.join(","))).collect();
            let more = c.triple_zeros.len().saturating_sub(TRIPLE_ZEROS_SHOWN);
            let tail = if more > 0 { format!(" and {more} more") } else { String::new() };
            line(format!("  {:<28} {}{tail}", "triple-zeros", tz.join(" ")));
        }
        if let Some(sq) = &c.square {
            line(format!("  {:<28} {{{}}}", "N·N", sq.join(",")));
        }
    }
    for row in &report.results {
        line(row_line(row));
    }
    if let Some(s) = &report.search {
        match &s.witness {
            Some(w) => line(format!(
                "{}: found in {} with N = {{{}}} ({} instances within cap {})",
                s.relation,
                w.instance,
                w.subsemimodule.join(","),
                s.instances_scanned,
                s.cap
            )),
            None => line(format!("{}: NONE ({} instances within cap {})", s.relation, s.instances_scanned, s.cap)),
        }
    }
    if let Some(l) = &report.localization {
        line(format!("T = {} {{{}}}", l.tset, l.tset_members.join(",")));
        if l.collapsed {
            line("T contains 0; the localization is a single class".to_string());
        }
        line(format!("{} classes over {} scalar classes", l.classes.len(), l.scalar_classes));
        for c in &l.classes {
            line(format!("  {:<10} {}", c.label, c.fractions.join(" ")));
        }
        for n in &l.subsemimodules {
            let flags = match (n.prime, n.one_absorbing_prime, n.weakly_one_absorbing_prime) {
                (Some(p), Some(o), Some(w)) => format!("prime {}, 1-absorbing {}, weakly {}", yes(p), yes(o), yes(w)),
                _ => "not proper".to_string(),
            };
            line(format!("  T⁻¹{} = {{{}}}: {flags}", n.subsemimodule, n.localized.join(",")));
        }
    }
    if !report.results.is_empty() {
        let s = &report.summary;
        line(format!("PASS {}  FAIL {}  VACUOUS {}  ERROR {}", s.pass, s.fail, s.vacuous, s.error));
    }
    out
}

pub fn emit(report: &Report, json: Option<&Path>) -> std::io::Result<()> {
    let body = serde_json::to_string_pretty(report).map_err(std::io::Error::other)? + "\n";
    let stdout = match json {
        Some(p) if p.as_os_str() == "-" => body,
        Some(p) => {
            std::fs::write(p, body)?;
            text(report)
        }
        None => text(report),
    };
    match std::io::stdout().lock().write_all(stdout.as_bytes()) {
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
        other => other,
    }
}
