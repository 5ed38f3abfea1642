//! JSON instance documents: a semiring, a semimodule over it, and named ideals,
//! subsemimodules, multiplicatively closed sets and homomorphisms.
//!
//! Tables are row-major arrays of carrier indices, either flat or nested by row.
//! Members may be given by carrier index or by label.

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::constructions::{
    hom_from_fn, hom_validate, make_boolean, make_ntrunc, make_product, make_zmod, module_product, module_self,
    module_zmod_action,
};
use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::harness::Instance;
use crate::semimodule::FiniteSemimodule;
use crate::semiring::FiniteSemiring;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Document {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub semiring: SemiringSpec,
    pub module: ModuleSpec,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub ideals: BTreeMap<String, SubsetSpec>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub subsemimodules: BTreeMap<String, SubsetSpec>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub tsets: BTreeMap<String, SubsetSpec>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub homs: BTreeMap<String, HomSpec>,
    /// Also add the scalar endomorphisms and the standard multiplicatively closed sets.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub generate_extras: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum SemiringSpec {
    Boolean,
    Zmod {
        n: usize,
    },
    Ntrunc {
        r: usize,
        d: usize,
    },
    Product {
        factors: Vec<SemiringSpec>,
    },
    Tables {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        labels: Option<Vec<String>>,
        add: Table,
        mul: Table,
        #[serde(default)]
        zero: usize,
        #[serde(default = "default_one")]
        one: usize,
    },
}

fn default_one() -> usize {
    1
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum ModuleSpec {
    #[serde(rename = "self")]
    SelfModule,
    ZmodAction {
        n: usize,
    },
    Product {
        factors: Vec<ModuleSpec>,
    },
    Tables {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        labels: Option<Vec<String>>,
        add: Table,
        #[serde(default)]
        zero: usize,
        /// Row-major over (scalar, element).
        action: Table,
    },
}

/// A table given flat or as one array per row.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Table {
    Flat(Vec<usize>),
    Nested(Vec<Vec<usize>>),
}

impl Table {
    pub fn flatten(&self) -> Vec<usize> {
        match self {
            Table::Flat(v) => v.clone(),
            Table::Nested(rows) => rows.concat(),
        }
    }
}

/// A carrier element named by index or by label.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Element {
    Index(usize),
    Label(String),
}

/// Explicit members, or generators of the smallest structure containing them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SubsetSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub members: Option<Vec<Element>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generators: Option<Vec<Element>>,
}

/// An explicit map into a target module over the same scalars, or the
/// projection of a product module onto a factor (1-based).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HomSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub target: Option<ModuleSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub map: Option<Vec<Element>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub projection: Option<usize>,
}

fn square_side(len: usize, location: &str) -> Result<usize> {
    let n = (len as f64).sqrt().round() as usize;
    if n * n != len {
        return Err(Error::Parse { location: location.into(), message: format!("table of length {len} is not square") });
    }
    Ok(n)
}

fn default_labels(labels: &Option<Vec<String>>, n: usize) -> Vec<String> {
    labels.clone().unwrap_or_else(|| (0..n).map(|i| i.to_string()).collect())
}

impl SemiringSpec {
    pub fn build(&self) -> Result<FiniteSemiring> {
        match self {
            SemiringSpec::Boolean => Ok(make_boolean()),
            SemiringSpec::Zmod { n } => make_zmod(*n),
            SemiringSpec::Ntrunc { r, d } => make_ntrunc(*r, *d),
            SemiringSpec::Product { factors } => {
                let mut built = factors.iter().enumerate().map(|(i, f)| f.build().map_err(|e| e.at(format!("factors[{i}]"))));
                let first = built.next().ok_or_else(|| Error::InvalidParam("product needs at least one factor".into()))??;
                built.try_fold(first, |acc, next| make_product(&acc, &next?))
            }
            SemiringSpec::Tables { labels, add, mul, zero, one } => {
                let add = add.flatten();
                let n = match labels {
                    Some(l) => l.len(),
                    None => square_side(add.len(), "add")?,
                };
                FiniteSemiring::new(default_labels(labels, n), add, mul.flatten(), *zero, *one)
            }
        }
    }

    pub fn from_semiring(s: &FiniteSemiring) -> Self {
        SemiringSpec::Tables {
            labels: Some(s.labels().to_vec()),
            add: Table::Flat(s.add_table().to_vec()),
            mul: Table::Flat(s.mul_table().to_vec()),
            zero: s.zero(),
            one: s.one(),
        }
    }
}

impl ModuleSpec {
    pub fn build(&self, s: &Arc<FiniteSemiring>) -> Result<FiniteSemimodule> {
        match self {
            ModuleSpec::SelfModule => Ok(module_self(Arc::clone(s))),
            ModuleSpec::ZmodAction { n } => module_zmod_action(Arc::clone(s), *n),
            ModuleSpec::Product { factors } => {
                let mut built = factors.iter().enumerate().map(|(i, f)| f.build(s).map_err(|e| e.at(format!("factors[{i}]"))));
                let first = built.next().ok_or_else(|| Error::InvalidParam("product needs at least one factor".into()))??;
                built.try_fold(first, |acc, next| module_product(&acc, &next?))
            }
            ModuleSpec::Tables { labels, add, zero, action } => {
                let add = add.flatten();
                let n = match labels {
                    Some(l) => l.len(),
                    None => square_side(add.len(), "add")?,
                };
                FiniteSemimodule::new(Arc::clone(s), default_labels(labels, n), add, *zero, action.flatten())
            }
        }
    }

    pub fn from_module(m: &FiniteSemimodule) -> Self {
        ModuleSpec::Tables {
            labels: Some(m.labels().to_vec()),
            add: Table::Flat(m.add_table().to_vec()),
            zero: m.zero(),
            action: Table::Flat(m.action_table().to_vec()),
        }
    }

    fn factor_sizes(&self, s: &Arc<FiniteSemiring>) -> Option<Vec<usize>> {
        match self {
            ModuleSpec::Product { factors } => factors.iter().map(|f| f.build(s).ok().map(|m| m.size())).collect(),
            _ => None,
        }
    }
}

fn resolve(labels: &[String], e: &Element) -> Result<usize> {
    match e {
        Element::Index(i) if *i < labels.len() => Ok(*i),
        Element::Index(i) => Err(Error::InvalidParam(format!("index {i} is outside a carrier of size {}", labels.len()))),
        Element::Label(l) => labels
            .iter()
            .position(|x| x == l)
            .ok_or_else(|| Error::InvalidParam(format!("no element labelled `{l}`"))),
    }
}

fn resolve_set(labels: &[String], items: &[Element]) -> Result<ElemSet> {
    let idx = items.iter().map(|e| resolve(labels, e)).collect::<Result<Vec<_>>>()?;
    Ok(ElemSet::from_iter(labels.len(), idx))
}

impl SubsetSpec {
    pub fn members(items: Vec<usize>) -> Self {
        SubsetSpec { members: Some(items.into_iter().map(Element::Index).collect()), generators: None }
    }

    fn seed(&self, labels: &[String]) -> Result<(ElemSet, bool)> {
        match (&self.members, &self.generators) {
            (Some(m), None) => Ok((resolve_set(labels, m)?, false)),
            (None, Some(g)) => Ok((resolve_set(labels, g)?, true)),
            _ => Err(Error::InvalidParam("give exactly one of `members` or `generators`".into())),
        }
    }
}

impl Document {
    /// Builds and validates every part; errors name the offending key.
    pub fn build(&self, default_name: &str) -> Result<Instance> {
        let s = Arc::new(self.semiring.build().map_err(|e| e.at("semiring"))?);
        let m = self.module.build(&s).map_err(|e| e.at("module"))?;
        let name = self.name.clone().unwrap_or_else(|| default_name.to_string());
        let mut inst = Instance::new(name, m.clone());
        for (key, spec) in &self.ideals {
            let at = format!("ideals.{key}");
            let (seed, generated) = spec.seed(s.labels()).map_err(|e| e.at(&at))?;
            let i = if generated { s.ideal_generated(&seed) } else { s.ideal(seed).map_err(|e| e.at(&at))? };
            inst = inst.with_ideal(key, i);
        }
        for (key, spec) in &self.subsemimodules {
            let at = format!("subsemimodules.{key}");
            let (seed, generated) = spec.seed(m.labels()).map_err(|e| e.at(&at))?;
            let n = if generated { m.generated(&seed) } else { m.subsemimodule(seed).map_err(|e| e.at(&at))? };
            inst = inst.with_subsemimodule(key, n);
        }
        for (key, spec) in &self.tsets {
            let at = format!("tsets.{key}");
            let (seed, generated) = spec.seed(s.labels()).map_err(|e| e.at(&at))?;
            let t = if generated { s.mult_closed_generated(&seed) } else { s.mult_closed(seed).map_err(|e| e.at(&at))? };
            inst = inst.with_tset(key, t);
        }
        for (key, spec) in &self.homs {
            let at = format!("homs.{key}");
            let f = self.build_hom(spec, &s, &m).map_err(|e| e.at(&at))?;
            inst = inst.with_hom(key, f);
        }
        Ok(if self.generate_extras { inst.with_generated_extras() } else { inst })
    }

    fn build_hom(
        &self,
        spec: &HomSpec,
        s: &Arc<FiniteSemiring>,
        m: &FiniteSemimodule,
    ) -> Result<crate::constructions::HomTable> {
        match (spec.projection, &spec.target, &spec.map) {
            (Some(k), None, None) => {
                let ModuleSpec::Product { factors } = &self.module else {
                    return Err(Error::InvalidParam("projection needs a product module".into()));
                };
                let sizes = self.module.factor_sizes(s).ok_or_else(|| Error::InvalidParam("bad product".into()))?;
                if k == 0 || k > factors.len() {
                    return Err(Error::InvalidParam(format!("no factor {k}")));
                }
                let target = factors[k - 1].build(s)?;
                let stride: usize = sizes[..k - 1].iter().product();
                let size = sizes[k - 1];
                hom_from_fn(m, &target, |x| (x / stride) % size)
            }
            (None, Some(target), Some(map)) => {
                let target = target.build(s).map_err(|e| e.at("target"))?;
                let map = map.iter().map(|e| resolve(target.labels(), e)).collect::<Result<Vec<_>>>()?;
                hom_validate(m.clone(), target, map)
            }
            _ => Err(Error::InvalidParam("give either `projection` or both `target` and `map`".into())),
        }
    }

    /// Explicit tables for every structure; building the result reproduces `inst`.
    pub fn from_instance(inst: &Instance) -> Self {
        let m = &inst.module;
        let s = m.scalars();
        let set = |x: &ElemSet| SubsetSpec::members(x.to_vec());
        Document {
            name: Some(inst.name.clone()),
            semiring: SemiringSpec::from_semiring(s),
            module: ModuleSpec::from_module(m),
            ideals: inst.ideals.iter().map(|i| (i.name.clone(), set(i.value.members()))).collect(),
            subsemimodules: inst.subsemimodules.iter().map(|n| (n.name.clone(), set(n.value.members()))).collect(),
            tsets: inst.tsets.iter().map(|t| (t.name.clone(), set(t.value.members()))).collect(),
            homs: inst
                .homs
                .iter()
                .map(|h| {
                    let spec = HomSpec {
                        target: Some(ModuleSpec::from_module(h.value.target())),
                        map: Some(h.value.map().iter().map(|&y| Element::Index(y)).collect()),
                        projection: None,
                    };
                    (h.name.clone(), spec)
                })
                .collect(),
            generate_extras: false,
        }
    }
}

fn json_error(e: serde_json::Error, file: &str) -> Error {
    Error::Parse { location: format!("{file}:{}:{}", e.line(), e.column()), message: e.to_string() }
}

pub fn parse_document(text: &str, file: &str) -> Result<Document> {
    serde_json::from_str(text).map_err(|e| json_error(e, file))
}

/// A catalog file is a JSON array of documents.
pub fn parse_catalog(text: &str, file: &str) -> Result<Vec<Document>> {
    serde_json::from_str(text).map_err(|e| json_error(e, file))
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::Parse { location: path.display().to_string(), message: e.to_string() })
}

fn stem(path: &Path) -> String {
    path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default()
}

/// Reads, parses and builds an instance file.
pub fn parse_instance(path: &Path) -> Result<Instance> {
    let file = path.display().to_string();
    parse_document(&read(path)?, &file)?.build(&stem(path)).map_err(|e| e.at(file))
}

/// Reads, parses and builds every document in a catalog file.
pub fn load_catalog(path: &Path) -> Result<Vec<Instance>> {
    let file = path.display().to_string();
    parse_catalog(&read(path)?, &file)?
        .iter()
        .enumerate()
        .map(|(i, d)| d.build(&format!("{}[{i}]", stem(path))).map_err(|e| e.at(format!("{file}[{i}]"))))
        .collect()
}
