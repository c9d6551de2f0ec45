//! Running checks on groups: single analyses and parallel batches.

use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::{mpsc, Arc};
use std::time::Duration;

use rayon::prelude::*;
use subform_core::formation::verify_formation_closure;
use subform_core::structure::lemma_suite;
use subform_core::subnormality::QuotientFamily;
use subform_core::{
    check_corollary1, check_corollary2, check_theorem1, check_theorem2, verify_paper_example_in, Analyzer, FiniteGroup,
    Formation, Hypothesis, Limits, SubgroupLattice, TheoremVerdict, VerdictReport,
};

use crate::error::{Error, Result};
use crate::format::parse_group_file;
use crate::named::build_named;
use crate::report::{Budgets, ErrorKind, Report, RunError};

/// A selectable family of checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, clap::ValueEnum)]
pub enum Check {
    Theorem1,
    Theorem2,
    Corollary1,
    Corollary2,
    Lemmas,
    Example864,
    All,
}

impl Check {
    pub fn name(self) -> &'static str {
        match self {
            Check::Theorem1 => "theorem1",
            Check::Theorem2 => "theorem2",
            Check::Corollary1 => "corollary1",
            Check::Corollary2 => "corollary2",
            Check::Lemmas => "lemmas",
            Check::Example864 => "example864",
            Check::All => "all",
        }
    }

    /// Checks to run on a group of the given order.
    fn expand(checks: &[Check], order: usize) -> Vec<Check> {
        let mut out = Vec::new();
        for &c in checks {
            if c == Check::All {
                out.extend([Check::Theorem1, Check::Theorem2, Check::Corollary1, Check::Corollary2, Check::Lemmas]);
                if order == 864 {
                    out.push(Check::Example864);
                }
            } else {
                out.push(c);
            }
        }
        out.sort();
        out.dedup();
        out
    }
}

/// Where a group comes from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Input {
    File(PathBuf),
    Named(String),
}

impl Input {
    /// A `pgrp` path if one exists, otherwise a group name.
    pub fn resolve(spec: &str) -> Input {
        let p = Path::new(spec);
        if p.exists() || spec.ends_with(".pgrp") {
            Input::File(p.to_path_buf())
        } else {
            Input::Named(spec.to_string())
        }
    }

    pub fn label(&self) -> String {
        match self {
            Input::File(p) => p.file_stem().map_or_else(|| p.display().to_string(), |s| s.to_string_lossy().into_owned()),
            Input::Named(n) => n.clone(),
        }
    }

    fn build(&self, limits: Limits) -> Result<(String, FiniteGroup)> {
        match self {
            Input::File(p) => Ok((self.label(), parse_group_file(p, limits)?.1)),
            Input::Named(n) => build_named(n, &limits),
        }
    }
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub formation: Formation,
    pub checks: Vec<Check>,
    pub budgets: Budgets,
    /// Lattice cache for single-group runs: loaded if present, saved after.
    pub cache: Option<PathBuf>,
    /// Ignore the time budget (tests and deterministic reruns).
    pub no_watchdog: bool,
}

impl RunConfig {
    pub fn new(formation: Formation, checks: Vec<Check>) -> Self {
        RunConfig { formation, checks, budgets: Budgets::default(), cache: None, no_watchdog: false }
    }

    fn strict_hypothesis(&self) -> bool {
        !self.checks.contains(&Check::All)
    }

    fn empty_report(&self) -> Report {
        Report::new(self.formation.name, self.budgets.clone(), self.checks.iter().map(|c| c.name().to_string()).collect())
    }
}

/// Sets the cancel flag once `budget` elapses unless dropped first.
struct Watchdog {
    done: Option<mpsc::Sender<()>>,
    handle: Option<std::thread::JoinHandle<()>>,
}

impl Watchdog {
    fn start(flag: Arc<AtomicBool>, budget: Duration) -> Self {
        let (tx, rx) = mpsc::channel::<()>();
        let handle = std::thread::spawn(move || {
            if let Err(mpsc::RecvTimeoutError::Timeout) = rx.recv_timeout(budget) {
                flag.store(true, Ordering::Relaxed);
            }
        });
        Watchdog { done: Some(tx), handle: Some(handle) }
    }
}

impl Drop for Watchdog {
    fn drop(&mut self) {
        drop(self.done.take());
        if let Some(h) = self.handle.take() {
            let _ = h.join();
        }
    }
}

fn classify(e: &Error) -> Option<ErrorKind> {
    use subform_core::Error as C;
    Some(match e.root() {
        Error::Group(C::Hypothesis(_)) => return None,
        Error::Group(C::LatticeBudgetExceeded { .. } | C::OrderLimitExceeded { .. }) => ErrorKind::Budget,
        Error::Group(C::Cancelled) => ErrorKind::Cancelled,
        Error::Group(C::FormationViolation(_)) => ErrorKind::Formation,
        Error::Syntax { .. } | Error::OrderMismatch { .. } | Error::Io { .. } | Error::Name { .. } => ErrorKind::Parse,
        Error::CacheFormat(_) | Error::CacheVersion { .. } | Error::StaleChecksum | Error::Json(_) => ErrorKind::Cache,
        _ => ErrorKind::Other,
    })
}

fn run_error(group: &str, check: Option<&str>, e: &Error) -> RunError {
    RunError {
        group: group.to_string(),
        check: check.map(str::to_string),
        kind: classify(e).unwrap_or(ErrorKind::Other),
        message: e.to_string(),
    }
}

fn refused(theorem: &str, label: &str, f: &Formation, message: String) -> TheoremVerdict {
    let mut t = TheoremVerdict::new(theorem, label, f.name);
    t.hypothesis = Hypothesis::NotApplicable;
    t.hypothesis_note = message;
    t
}

/// Everything produced for one group.
#[derive(Debug)]
pub struct GroupOutcome {
    pub label: String,
    pub order: Option<usize>,
    pub report: Option<VerdictReport>,
    pub errors: Vec<RunError>,
}

fn run_checks(an: &mut Analyzer<'_>, cfg: &RunConfig, label: &str, rep: &mut VerdictReport, errors: &mut Vec<RunError>) {
    let g = an.group();
    let f = cfg.formation;
    for check in Check::expand(&cfg.checks, g.order()) {
        let name = check.name();
        let res: Result<()> = (|| {
            match check {
                Check::Theorem1 | Check::Theorem2 | Check::Corollary1 | Check::Corollary2 => {
                    let out = match check {
                        Check::Theorem1 => check_theorem1(an, label),
                        Check::Theorem2 => check_theorem2(an, label),
                        Check::Corollary1 => check_corollary1(an, label),
                        _ => check_corollary2(an, label),
                    };
                    match out {
                        Ok(t) => rep.theorems.push(t),
                        Err(subform_core::Error::Hypothesis(m)) => rep.theorems.push(refused(name, label, &f, m)),
                        Err(e) => return Err(e.into()),
                    }
                }
                Check::Lemmas => {
                    rep.checks.push(verify_formation_closure(&f, g, label)?);
                    let family = QuotientFamily::new(g)?;
                    rep.checks.extend(lemma_suite(an, Some(&family), label)?);
                }
                Check::Example864 => {
                    let ex = verify_paper_example_in(an, label)?;
                    rep.checks.extend(ex.checks);
                    rep.theorems.extend(ex.theorems);
                    if an.formation() != &f {
                        an.set_formation(f);
                    }
                }
                Check::All => unreachable!("expanded"),
            }
            Ok(())
        })();
        if let Err(e) = res {
            let cancelled = matches!(e.root(), Error::Group(subform_core::Error::Cancelled));
            if classify(&e).is_none() {
                rep.theorems.push(refused(name, label, &f, e.to_string()));
            } else {
                rep.complete = false;
                errors.push(run_error(label, Some(name), &e));
            }
            if cancelled {
                break;
            }
        }
    }
}

fn analyzer_for<'g>(g: &'g FiniteGroup, cfg: &RunConfig, cached: Option<SubgroupLattice>) -> Result<Analyzer<'g>> {
    Ok(match cached {
        Some(lat) => Analyzer::with_lattice(g, cfg.formation, lat),
        None if g.order() <= cfg.budgets.lattice_budget => Analyzer::complete(g, cfg.formation)?,
        None => Analyzer::partial(g, cfg.formation),
    })
}

/// Builds one group and runs the configured checks on it.
pub fn analyze_input(input: &Input, cfg: &RunConfig) -> GroupOutcome {
    let label = input.label();
    let flag = Arc::new(AtomicBool::new(false));
    let limits = Limits::new(cfg.budgets.max_order, cfg.budgets.lattice_budget).with_cancel_flag(flag.clone());
    let mut out = GroupOutcome { label: label.clone(), order: None, report: None, errors: Vec::new() };
    let (label, g) = match input.build(limits) {
        Ok(x) => x,
        Err(e) => {
            out.errors.push(run_error(&label, None, &e));
            return out;
        }
    };
    out.label = label.clone();
    out.order = Some(g.order());
    let secs = if g.order() == 864 { cfg.budgets.example_time_budget_secs } else { cfg.budgets.time_budget_secs };
    let _watchdog = (!cfg.no_watchdog).then(|| Watchdog::start(flag, Duration::from_secs(secs)));

    let mut rep = VerdictReport::new(&label, g.order(), cfg.formation.name);
    let cached = match &cfg.cache {
        Some(p) if p.exists() => match crate::cache::load(&g, p) {
            Ok(lat) => Some(lat),
            Err(e) => {
                out.errors.push(run_error(&label, Some("cache"), &e));
                None
            }
        },
        _ => None,
    };
    let mut an = match analyzer_for(&g, cfg, cached) {
        Ok(an) => an,
        Err(e) => {
            rep.complete = false;
            out.errors.push(run_error(&label, None, &e));
            out.report = Some(rep);
            return out;
        }
    };
    run_checks(&mut an, cfg, &label, &mut rep, &mut out.errors);
    if let Some(p) = &cfg.cache {
        if let Err(e) = crate::cache::save(&g, an.lattice(), p) {
            out.errors.push(run_error(&label, Some("cache"), &e));
        }
    }
    out.report = Some(rep);
    out
}

fn assemble(cfg: &RunConfig, mut outcomes: Vec<GroupOutcome>) -> Report {
    outcomes.sort_by(|a, b| (a.order.is_none(), a.order, &a.label).cmp(&(b.order.is_none(), b.order, &b.label)));
    let mut report = cfg.empty_report();
    for o in outcomes {
        report.groups.extend(o.report);
        report.errors.extend(o.errors);
    }
    report.finalize(cfg.strict_hypothesis());
    report
}

/// One group.
pub fn analyze(input: &Input, cfg: &RunConfig) -> Report {
    assemble(cfg, vec![analyze_input(input, cfg)])
}

/// Every `*.pgrp` file in `dir` (not recursive), in parallel.
pub fn batch_dir(dir: &Path, cfg: &RunConfig) -> Result<Report> {
    let files: Vec<Input> = crate::catalog::list(dir)?.into_iter().map(Input::File).collect();
    Ok(batch(&files, cfg))
}

/// Runs every input; per-input failures are reported, not fatal.
pub fn batch(inputs: &[Input], cfg: &RunConfig) -> Report {
    let cfg = RunConfig { cache: None, ..cfg.clone() };
    let outcomes: Vec<GroupOutcome> = inputs.par_iter().map(|i| analyze_input(i, &cfg)).collect();
    let mut report = assemble(&cfg, outcomes);
    // a batch legitimately meets groups outside the hypotheses
    report.finalize(false);
    report
}

/// Parses a formation name.
pub fn formation(name: &str) -> Result<Formation> {
    Formation::by_name(name).ok_or_else(|| Error::UnknownFormation(name.to_string()))
}
