use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use subform::report::{Budgets, Report};
use subform::run::{self, Check, Input, RunConfig};
use subform::Error;
use subform_core::{all_subgroups, Limits};

/// F-subnormality checks on finite permutation groups.
#[derive(Parser)]
#[command(name = "subform", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run checks on one group.
    Analyze {
        /// A `.pgrp` file or a group name such as `S4` or `semidirect(C3,C2,inversion)`.
        #[arg(long)]
        group: String,
        #[command(flatten)]
        run: RunArgs,
        /// Lattice cache: loaded when present, written after the run.
        #[arg(long)]
        cache: Option<PathBuf>,
    },
    /// Run checks on every `.pgrp` file in a directory.
    Batch {
        #[arg(long)]
        dir: PathBuf,
        #[command(flatten)]
        run: RunArgs,
        /// Worker threads (default: all cores).
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Compute the full subgroup lattice and write it to a cache file.
    Lattice {
        #[arg(long)]
        group: String,
        #[arg(long)]
        cache: PathBuf,
        #[arg(long, default_value_t = 2000)]
        budget_max_order: usize,
        #[arg(long, default_value_t = 400)]
        budget_lattice: usize,
    },
}

#[derive(Args)]
struct RunArgs {
    /// One of A, N, U, NA, Sol.
    #[arg(long, default_value = "N")]
    formation: String,
    #[arg(long, value_enum, value_delimiter = ',', default_value = "all")]
    check: Vec<Check>,
    /// Also write the JSON report here.
    #[arg(long)]
    report: Option<PathBuf>,
    #[arg(long, default_value_t = 2000)]
    budget_max_order: usize,
    /// Largest order for which the whole subgroup lattice is built.
    #[arg(long, default_value_t = 400)]
    budget_lattice: usize,
    /// Seconds per group (the order-864 example gets `--budget-example-time`).
    #[arg(long, default_value_t = 10)]
    budget_time: u64,
    #[arg(long, default_value_t = 600)]
    budget_example_time: u64,
}

impl RunArgs {
    fn config(&self) -> Result<RunConfig, Error> {
        let mut cfg = RunConfig::new(run::formation(&self.formation)?, self.check.clone());
        cfg.budgets = Budgets {
            max_order: self.budget_max_order,
            lattice_budget: self.budget_lattice,
            time_budget_secs: self.budget_time,
            example_time_budget_secs: self.budget_example_time,
        };
        Ok(cfg)
    }
}

fn emit(report: &Report, path: Option<&PathBuf>) -> Result<i32, Error> {
    let json = report.to_json();
    print!("{json}");
    if let Some(p) = path {
        std::fs::write(p, &json).map_err(|e| Error::Io { path: p.display().to_string(), message: e.to_string() })?;
    }
    let s = &report.summary;
    eprintln!(
        "{} group(s), {} error(s), {} violation(s), {} not applicable, exit {}",
        s.groups, s.errors, s.violations, s.not_applicable, s.exit_code
    );
    Ok(s.exit_code)
}

fn main_inner(cli: Cli) -> Result<i32, Error> {
    match cli.command {
        Command::Analyze { group, run, cache } => {
            let mut cfg = run.config()?;
            cfg.cache = cache;
            let report = run::analyze(&Input::resolve(&group), &cfg);
            emit(&report, run.report.as_ref())
        }
        Command::Batch { dir, run, jobs } => {
            let cfg = run.config()?;
            let report = match jobs {
                Some(n) => rayon::ThreadPoolBuilder::new()
                    .num_threads(n)
                    .build()
                    .expect("thread pool")
                    .install(|| run::batch_dir(&dir, &cfg))?,
                None => run::batch_dir(&dir, &cfg)?,
            };
            emit(&report, run.report.as_ref())
        }
        Command::Lattice { group, cache, budget_max_order, budget_lattice } => {
            let limits = Limits::new(budget_max_order, budget_lattice);
            let g = match Input::resolve(&group) {
                Input::File(p) => subform::format::parse_group_file(&p, limits)?.1,
                Input::Named(n) => subform::named::build_named(&n, &limits)?.1,
            };
            let lat = all_subgroups(&g)?;
            subform::cache::save(&g, &lat, &cache)?;
            let classes = lat.class_ids(&g).iter().enumerate().filter(|&(i, &c)| i == c).count();
            println!("order {} subgroups {} classes {} -> {}", g.order(), lat.len(), classes, cache.display());
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match main_inner(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
