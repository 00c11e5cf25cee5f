//! JSON catalogs of groups, modules and jobs.
//!
//! ```json
//! {
//!   "groups":  {"S3": {"builtin": "symmetric", "n": 3}, "G": {"table": [[0, 1], [1, 0]]}},
//!   "modules": {"Zsign": {"relations": [0], "action": {"S3": {"1": [[-1]], "2": [[-1]]}}}},
//!   "jobs":    [{"group": "S3", "module": "Zsign", "degrees": [1, 2], "tasks": ["cohomology", "axioms"]}]
//! }
//! ```
//!
//! Actions are given on generators (keyed by element index) and completed by
//! products; a group missing from a module's `action` acts trivially. Instead
//! of diagonal `relations` a module may give `"presentation": {"rank": k,
//! "relations": [[...], ...]}`.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::gmodule::GModule;
use crate::group::Group;
use crate::zlinalg::{Int, IntMatrix};

/// The catalog shipped with the binary.
pub const DEFAULT_CATALOG: &str = include_str!("../catalogs/default.json");

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Task {
    Cohomology,
    Axioms,
    Section2,
    Search,
}

impl Task {
    pub const ALL: [Task; 4] = [Task::Cohomology, Task::Axioms, Task::Section2, Task::Search];
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCatalog {
    groups: BTreeMap<String, RawGroup>,
    #[serde(default)]
    modules: BTreeMap<String, RawModule>,
    #[serde(default)]
    jobs: Vec<RawJob>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RawGroup {
    Table(RawTable),
    Builtin(RawBuiltin),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawTable {
    table: Vec<Vec<usize>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawBuiltin {
    builtin: String,
    #[serde(default)]
    n: Option<usize>,
}

#[derive(Clone, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPresentation {
    rank: usize,
    relations: Vec<Vec<i64>>,
}

#[derive(Clone, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawModule {
    #[serde(default)]
    relations: Option<Vec<i64>>,
    #[serde(default)]
    presentation: Option<RawPresentation>,
    #[serde(default)]
    action: BTreeMap<String, BTreeMap<String, Vec<Vec<i64>>>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawJob {
    group: String,
    module: String,
    #[serde(default)]
    degree: Option<usize>,
    #[serde(default)]
    degrees: Option<Vec<usize>>,
    #[serde(default)]
    tasks: Option<Vec<Task>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Job {
    pub group: String,
    pub module: String,
    pub degrees: Vec<usize>,
    pub tasks: Vec<Task>,
}

pub struct Catalog {
    hash: String,
    groups: BTreeMap<String, Arc<Group>>,
    modules: BTreeMap<String, RawModule>,
    jobs: Vec<Job>,
}

fn catalog_err(msg: impl Into<String>) -> Error {
    Error::Catalog(msg.into())
}

impl Catalog {
    pub fn builtin() -> Catalog {
        Catalog::from_json(DEFAULT_CATALOG).expect("the default catalog is valid")
    }

    pub fn from_json(text: &str) -> Result<Catalog> {
        let raw: RawCatalog = serde_json::from_str(text).map_err(|e| catalog_err(format!("invalid catalog JSON: {e}")))?;
        let hash = hex::encode(Sha256::digest(text.as_bytes()));
        let mut groups = BTreeMap::new();
        for (name, g) in raw.groups {
            let group = match g {
                RawGroup::Table(t) => Group::from_table(&t.table),
                RawGroup::Builtin(b) => Group::builtin(&b.builtin, b.n),
            }
            .map_err(|e| catalog_err(format!("group {name}: {e}")))?;
            groups.insert(name, Arc::new(group));
        }
        for (name, m) in &raw.modules {
            if m.relations.is_some() == m.presentation.is_some() {
                return Err(catalog_err(format!("module {name}: give exactly one of relations or presentation")));
            }
            if let Some(g) = m.action.keys().find(|g| !groups.contains_key(*g)) {
                return Err(catalog_err(format!("module {name}: unknown group {g}")));
            }
        }
        let mut jobs = Vec::with_capacity(raw.jobs.len());
        for j in raw.jobs {
            if !groups.contains_key(&j.group) {
                return Err(catalog_err(format!("job: unknown group {}", j.group)));
            }
            if !raw.modules.contains_key(&j.module) {
                return Err(catalog_err(format!("job: unknown module {}", j.module)));
            }
            let degrees = match (j.degree, j.degrees) {
                (Some(d), None) => vec![d],
                (None, Some(ds)) => ds,
                (None, None) => vec![1],
                (Some(_), Some(_)) => return Err(catalog_err("job: give degree or degrees, not both")),
            };
            jobs.push(Job { group: j.group, module: j.module, degrees, tasks: j.tasks.unwrap_or_else(|| Task::ALL.to_vec()) });
        }
        let cat = Catalog { hash, groups, modules: raw.modules, jobs };
        for j in &cat.jobs {
            cat.module(&j.module, &j.group)?;
        }
        Ok(cat)
    }

    /// Hex SHA-256 of the catalog text.
    pub fn hash(&self) -> &str {
        &self.hash
    }

    pub fn group(&self, name: &str) -> Result<Arc<Group>> {
        self.groups.get(name).cloned().ok_or_else(|| catalog_err(format!("unknown group {name}")))
    }

    pub fn group_names(&self) -> impl Iterator<Item = &str> {
        self.groups.keys().map(String::as_str)
    }

    pub fn module_names(&self) -> impl Iterator<Item = &str> {
        self.modules.keys().map(String::as_str)
    }

    pub fn jobs(&self) -> &[Job] {
        &self.jobs
    }

    /// Module `name` as a module over group `group`.
    pub fn module(&self, name: &str, group: &str) -> Result<Arc<GModule>> {
        let spec = self.modules.get(name).ok_or_else(|| catalog_err(format!("unknown module {name}")))?;
        let g = self.group(group)?;
        let ctx = |e: crate::gmodule::ModuleError| catalog_err(format!("module {name} over {group}: {e}"));
        let mut gens = Vec::new();
        if let Some(action) = spec.action.get(group) {
            for (key, rows) in action {
                let idx: usize = key.parse().map_err(|_| catalog_err(format!("module {name}: bad generator index {key:?}")))?;
                if idx >= g.order() {
                    return Err(catalog_err(format!("module {name}: element {idx} not in {group}")));
                }
                if rows.iter().any(|r| r.len() != rows.len()) {
                    return Err(catalog_err(format!("module {name}: action matrix of {idx} is not square")));
                }
                gens.push((idx, IntMatrix::from_rows(rows)));
            }
        }
        let m = match (&spec.relations, &spec.presentation) {
            (Some(rel), None) => {
                if gens.is_empty() {
                    if let Some(&d) = rel.iter().find(|&&d| d < 0) {
                        return Err(ctx(crate::gmodule::ModuleError::NegativeRelation(Int::from(d))));
                    }
                    GModule::trivial(&g, rel)
                } else {
                    GModule::from_generators(&g, rel.iter().map(|&d| Int::from(d)).collect(), &gens).map_err(ctx)?
                }
            }
            (None, Some(p)) => {
                let rels: Vec<Vec<Int>> = p.relations.iter().map(|r| r.iter().map(|&x| Int::from(x)).collect()).collect();
                if rels.iter().any(|r| r.len() != p.rank) {
                    return Err(catalog_err(format!("module {name}: relation vector length differs from rank")));
                }
                if gens.is_empty() {
                    gens = g.elements().map(|x| (x, IntMatrix::identity(p.rank))).collect();
                }
                GModule::from_presentation(&g, p.rank, &rels, &gens).map_err(ctx)?
            }
            _ => unreachable!("checked at load"),
        };
        Ok(Arc::new(m))
    }
}
