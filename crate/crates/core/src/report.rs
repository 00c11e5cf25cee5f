//! Running catalog instances and assembling the JSON report.

use serde::Serialize;

use crate::catalog::{Catalog, Task};
use crate::cochain::Limits;
use crate::cohomology::{natural_map_between, Kind};
use crate::error::{Error, Result};
use crate::group::Subgroup;
use crate::mackey::{format_factors, AxiomReport, Check, Context, Instance, Verdict};
use crate::zlinalg::Int;

pub const ENGINE: &str = env!("CARGO_PKG_NAME");
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// One `(group, module, degree)` to run, with the tasks requested.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InstanceSpec {
    pub group: String,
    pub module: String,
    pub degree: usize,
    pub tasks: Vec<Task>,
}

/// Narrows the catalog's jobs; `None` fields match everything.
#[derive(Clone, Debug, Default)]
pub struct Selection {
    pub group: Option<String>,
    pub module: Option<String>,
    pub degree: Option<usize>,
}

/// Instances selected from the catalog. A group and module named together
/// but absent from the jobs are run as an ad-hoc instance.
pub fn select(catalog: &Catalog, sel: &Selection, tasks: &[Task]) -> Result<Vec<InstanceSpec>> {
    let mut out = Vec::new();
    for job in catalog.jobs() {
        if sel.group.as_ref().is_some_and(|g| *g != job.group) || sel.module.as_ref().is_some_and(|m| *m != job.module) {
            continue;
        }
        let wanted: Vec<Task> = tasks.iter().copied().filter(|t| job.tasks.contains(t)).collect();
        if wanted.is_empty() {
            continue;
        }
        for &d in &job.degrees {
            if sel.degree.is_some_and(|x| x != d) {
                continue;
            }
            out.push(InstanceSpec { group: job.group.clone(), module: job.module.clone(), degree: d, tasks: wanted.clone() });
        }
    }
    if out.is_empty() {
        if let (Some(g), Some(m)) = (&sel.group, &sel.module) {
            catalog.module(m, g)?;
            out.push(InstanceSpec {
                group: g.clone(),
                module: m.clone(),
                degree: sel.degree.unwrap_or(1),
                tasks: tasks.to_vec(),
            });
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct CohomologySummary {
    pub h: Vec<Int>,
    pub hs: Vec<Int>,
    pub ker_i: Vec<Int>,
    pub i_surjective: bool,
}

impl CohomologySummary {
    /// `H^1 = Z/2, HS^1 = Z/2, ker(i) = 0`
    pub fn line(&self, degree: usize) -> String {
        format!(
            "H^{degree} = {}, HS^{degree} = {}, ker(i) = {}",
            format_factors(&self.h),
            format_factors(&self.hs),
            format_factors(&self.ker_i)
        )
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct InstanceReport {
    pub instance: Instance,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cohomology: Option<CohomologySummary>,
    pub results: Vec<AxiomReport>,
    /// Present when a search was requested: `false` if there was nothing to
    /// probe because `i` is injective on every subgroup.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub probed: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(skip)]
    pub resource_guard: bool,
}

impl InstanceReport {
    /// A failing verdict on a check whose hypotheses hold. Verdicts from the
    /// search (run where the hypothesis fails) are findings, not errors.
    pub fn has_hard_failure(&self) -> bool {
        self.results.iter().any(|r| r.verdict == Verdict::Fails)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Engine {
    pub name: &'static str,
    pub version: &'static str,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub engine: Engine,
    pub catalog_hash: String,
    pub seed: u64,
    pub command: String,
    pub instances: Vec<InstanceReport>,
    /// Search verdicts, kept apart from the hard checks.
    pub findings: Vec<AxiomReport>,
}

impl Report {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

/// Runs one instance; errors are recorded in the report rather than
/// propagated so that other instances still run.
pub fn run_instance(catalog: &Catalog, spec: &InstanceSpec, limits: Limits, seed: u64) -> (InstanceReport, Vec<AxiomReport>) {
    let instance = Instance { group: spec.group.clone(), module: spec.module.clone(), degree: spec.degree };
    let mut rep = InstanceReport {
        instance: instance.clone(),
        cohomology: None,
        results: Vec::new(),
        probed: None,
        error: None,
        resource_guard: false,
    };
    let mut findings = Vec::new();
    if let Err(e) = fill(catalog, spec, limits, seed, &instance, &mut rep, &mut findings) {
        rep.resource_guard = e.is_resource_guard();
        rep.error = Some(e.to_string());
    }
    (rep, findings)
}

fn fill(
    catalog: &Catalog,
    spec: &InstanceSpec,
    limits: Limits,
    seed: u64,
    instance: &Instance,
    rep: &mut InstanceReport,
    findings: &mut Vec<AxiomReport>,
) -> Result<()> {
    let group = catalog.group(&spec.group)?;
    let module = catalog.module(&spec.module, &spec.group)?;
    let ctx = Context::new(instance.clone(), group.clone(), module, limits, seed);
    let whole = Subgroup::whole(&group);
    for task in &spec.tasks {
        match task {
            Task::Cohomology => {
                let h = ctx.cohomology_in(&whole, spec.degree, Kind::Ordinary)?;
                let hs = ctx.cohomology_in(&whole, spec.degree, Kind::Symmetric)?;
                let map = natural_map_between(&h, &hs)?;
                rep.cohomology = Some(CohomologySummary {
                    h: h.factors(),
                    hs: hs.factors(),
                    ker_i: map.kernel_factors(),
                    i_surjective: map.surjective,
                });
            }
            Task::Axioms => {
                for c in Check::AXIOMS {
                    rep.results.push(ctx.verify_axiom(c, false)?);
                }
            }
            Task::Section2 => rep.results.extend(ctx.verify_section2()?),
            Task::Search => match ctx.counterexample_search()? {
                None => rep.probed = Some(false),
                Some(found) => {
                    rep.probed = Some(true);
                    findings.extend(found);
                }
            },
        }
    }
    Ok(())
}

/// Runs all instances, in parallel when `jobs > 1`; output order follows the
/// input order regardless.
pub fn run_all(
    catalog: &Catalog,
    specs: &[InstanceSpec],
    limits: Limits,
    seed: u64,
    jobs: usize,
    command: &str,
) -> Result<Report> {
    let run = || -> Vec<(InstanceReport, Vec<AxiomReport>)> {
        use rayon::prelude::*;
        specs.par_iter().map(|s| run_instance(catalog, s, limits, seed)).collect()
    };
    let results = if jobs <= 1 {
        specs.iter().map(|s| run_instance(catalog, s, limits, seed)).collect()
    } else {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| Error::Catalog(format!("thread pool: {e}")))?
            .install(run)
    };
    let mut instances = Vec::with_capacity(results.len());
    let mut findings = Vec::new();
    for (r, f) in results {
        instances.push(r);
        findings.extend(f);
    }
    Ok(Report {
        engine: Engine { name: ENGINE, version: VERSION },
        catalog_hash: catalog.hash().to_string(),
        seed,
        command: command.to_string(),
        instances,
        findings,
    })
}
