use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use symcoh::catalog::{Catalog, Task};
use symcoh::cochain::Limits;
use symcoh::mackey::Verdict;
use symcoh::report::{run_all, select, Report, Selection};

/// Symmetric and ordinary cohomology of finite groups, with Mackey functor checks.
#[derive(Parser)]
#[command(name = "symcoh", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Invariant factors of H^n, HS^n and ker(i).
    Cohomology(Common),
    /// Mackey axioms and the low-degree characterizations.
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        axioms: bool,
        #[arg(long)]
        section2: bool,
        #[arg(long)]
        search: bool,
    },
    /// Probe the injectivity-dependent axioms where i is not injective.
    Search(Common),
}

#[derive(Args)]
struct Common {
    /// Catalog JSON; the built-in catalog when omitted.
    #[arg(long)]
    catalog: Option<PathBuf>,
    #[arg(long)]
    group: Option<String>,
    #[arg(long)]
    module: Option<String>,
    #[arg(long)]
    degree: Option<usize>,
    /// Write the JSON report here.
    #[arg(long)]
    json: Option<PathBuf>,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = Limits::default().max_degree)]
    max_degree: usize,
}

const EXIT_FAIL: u8 = 1;
const EXIT_INVALID: u8 = 2;
const EXIT_GUARD: u8 = 3;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (common, tasks, name) = match &cli.command {
        Command::Cohomology(c) => (c, vec![Task::Cohomology], "cohomology"),
        Command::Verify { common, axioms, section2, search } => {
            let mut t = Vec::new();
            if *axioms {
                t.push(Task::Axioms);
            }
            if *section2 {
                t.push(Task::Section2);
            }
            if *search {
                t.push(Task::Search);
            }
            if t.is_empty() {
                t = vec![Task::Axioms, Task::Section2];
            }
            (common, t, "verify")
        }
        Command::Search(c) => (c, vec![Task::Search], "search"),
    };
    match run(common, &tasks, name) {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_INVALID)
        }
    }
}

fn run(common: &Common, tasks: &[Task], name: &str) -> Result<u8, String> {
    let catalog = match &common.catalog {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
            Catalog::from_json(&text).map_err(|e| e.to_string())?
        }
        None => Catalog::builtin(),
    };
    let sel = Selection { group: common.group.clone(), module: common.module.clone(), degree: common.degree };
    let specs = select(&catalog, &sel, tasks).map_err(|e| e.to_string())?;
    let limits = Limits { max_degree: common.max_degree, ..Limits::default() };
    let report = run_all(&catalog, &specs, limits, common.seed, common.jobs, name).map_err(|e| e.to_string())?;
    print_text(&report, tasks);
    if let Some(path) = &common.json {
        std::fs::write(path, report.to_json()).map_err(|e| format!("{}: {e}", path.display()))?;
    }
    Ok(exit_code(&report))
}

fn print_text(report: &Report, tasks: &[Task]) {
    for inst in &report.instances {
        let i = &inst.instance;
        let head = format!("{} / {} / n={}", i.group, i.module, i.degree);
        if let Some(e) = &inst.error {
            println!("{head}: error: {e}");
            continue;
        }
        if let Some(c) = &inst.cohomology {
            println!("{head}: {}", c.line(i.degree));
        }
        for r in &inst.results {
            let verdict = match r.verdict {
                Verdict::Holds => "holds",
                Verdict::Fails => "FAILS",
                Verdict::Skipped => "skipped",
            };
            match &r.reason {
                Some(why) => println!("{head}: {} {verdict} ({why})", r.check.id()),
                None => println!("{head}: {} {verdict} [{} cases]", r.check.id(), r.cases),
            }
        }
    }
    if tasks.contains(&Task::Search) {
        if report.instances.iter().all(|i| i.probed != Some(true)) {
            println!("no probe instances");
        }
        for f in &report.findings {
            let i = &f.instance;
            let tag = if f.verdict == Verdict::Fails { "FINDING: " } else { "" };
            println!("{tag}{} / {} / n={}: {} {:?} without injectivity", i.group, i.module, i.degree, f.check.id(), f.verdict);
        }
    }
}

fn exit_code(report: &Report) -> u8 {
    if report.instances.iter().any(|i| i.has_hard_failure()) {
        EXIT_FAIL
    } else if report.instances.iter().any(|i| i.resource_guard) {
        EXIT_GUARD
    } else if report.instances.iter().any(|i| i.error.is_some()) {
        EXIT_INVALID
    } else {
        0
    }
}
