//! The `kcausal` command line.
//!
//! Exit codes: 0 and 1 report a decision (feasible/infeasible, suites
//! clean/failing, stably causal or not), 2 is an input or usage error and 3
//! means two independent checkers disagreed.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

use crate::causal::CausalSpace;
use crate::error::{Error, Result};
use crate::harness::{self, Suite, TrialConfig};
use crate::json::{self, RelationDoc, SpacetimeDoc};
use crate::measure::Measure;
use crate::rational;
use crate::timefn::{self, DEFAULT_ENUMERATION_BOUND, DEFAULT_UPSET_BOUND};
use crate::transport::{decide_k_causal, strassen_check, DEFAULT_ORACLE_BOUND};

pub const EXIT_YES: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DISAGREEMENT: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "kcausal", version, about = "K-causal precedence of measures on finite causal spaces")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide whether MU K-causally precedes NU.
    Check(CheckArgs),
    /// Write the K+ closure as an explicit spacetime.
    Closure(ClosureArgs),
    /// List every up-set, one JSON array of labels per line.
    Upsets(UpsetsArgs),
    /// Enumerate or sample time functions, one JSON object per line.
    Timefn(TimefnArgs),
    /// Write a seeded spacetime or random measure.
    Generate(GenerateArgs),
    /// Run randomized theorem suites.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    pub spacetime: PathBuf,
    pub mu: PathBuf,
    pub nu: PathBuf,
    /// Write the witness coupling here when feasible.
    #[arg(long, value_name = "PATH")]
    pub witness: Option<PathBuf>,
    /// Write the certificate (witness or violator) here.
    #[arg(long, value_name = "PATH")]
    pub certificate: Option<PathBuf>,
    /// Cross-check against the subset-enumeration oracle.
    #[arg(long)]
    pub oracle: bool,
}

#[derive(Debug, Args)]
pub struct ClosureArgs {
    pub spacetime: PathBuf,
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
    /// Keep event coordinates in the output.
    #[arg(long)]
    pub coords: bool,
}

#[derive(Debug, Args)]
pub struct UpsetsArgs {
    pub spacetime: PathBuf,
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
    #[arg(long, default_value_t = DEFAULT_UPSET_BOUND)]
    pub max_events: usize,
}

#[derive(Debug, Args)]
#[command(group = clap::ArgGroup::new("mode").required(true).args(["enumerate", "sample"]))]
pub struct TimefnArgs {
    pub spacetime: PathBuf,
    /// One rank function per linear extension.
    #[arg(long)]
    pub enumerate: bool,
    /// Number of random time functions.
    #[arg(long, value_name = "N", requires = "seed")]
    pub sample: Option<usize>,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long, default_value_t = DEFAULT_ENUMERATION_BOUND)]
    pub max_events: usize,
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GenerateKind {
    Sprinkle,
    RandomDag,
    Measure,
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    #[arg(long, value_enum)]
    pub kind: GenerateKind,
    #[arg(long)]
    pub seed: u64,
    /// Number of events (sprinkle, random-dag).
    #[arg(long, required_if_eq_any([("kind", "sprinkle"), ("kind", "random-dag")]))]
    pub n: Option<usize>,
    /// Spacetime dimension including time (sprinkle).
    #[arg(long, default_value_t = 2)]
    pub dim: usize,
    /// Edge probability (random-dag).
    #[arg(long, default_value_t = 0.3)]
    pub edge_prob: f64,
    /// Write the materialized relation instead of the generator document.
    #[arg(long)]
    pub explicit: bool,
    /// Spacetime the measure lives on (measure).
    #[arg(long, value_name = "PATH", required_if_eq("kind", "measure"))]
    pub spacetime: Option<PathBuf>,
    /// Support size of the measure; all events by default.
    #[arg(long)]
    pub atoms: Option<usize>,
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Comma-separated suite names, or `all`.
    #[arg(long, default_value = "all")]
    pub suite: String,
    #[arg(long, default_value_t = harness::DEFAULT_TRIALS)]
    pub trials: usize,
    #[arg(long, default_value_t = harness::DEFAULT_SEED)]
    pub seed: u64,
    #[arg(long, default_value_t = harness::DEFAULT_MAX_EVENTS)]
    pub max_events: usize,
    #[arg(long, value_name = "PATH")]
    pub report: Option<PathBuf>,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_from<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(cli),
        Err(e) => {
            let _ = e.print();
            if e.use_stderr() {
                EXIT_USAGE
            } else {
                EXIT_YES
            }
        }
    }
}

pub fn run(cli: Cli) -> i32 {
    let result = match cli.command {
        Command::Check(a) => cmd_check(&a),
        Command::Closure(a) => cmd_closure(&a),
        Command::Upsets(a) => cmd_upsets(&a),
        Command::Timefn(a) => cmd_timefn(&a),
        Command::Generate(a) => cmd_generate(&a),
        Command::Verify(a) => cmd_verify(&a),
    };
    result.unwrap_or_else(|e| {
        eprintln!("kcausal: {e}");
        match e {
            Error::NotStablyCausal(..) => EXIT_NO,
            _ => EXIT_USAGE,
        }
    })
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Format(format!("{}: {e}", path.display())))
}

fn load_space(path: &Path) -> Result<CausalSpace> {
    json::parse_spacetime(&read(path)?)
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| Error::Format(format!("{}: {e}", p.display()))),
        None => {
            std::io::stdout().lock().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn json_lines(values: impl IntoIterator<Item = Value>) -> String {
    let mut s = String::new();
    for v in values {
        s.push_str(&v.to_string());
        s.push('\n');
    }
    s
}

pub fn cmd_check(a: &CheckArgs) -> Result<i32> {
    let space = load_space(&a.spacetime)?;
    let mu = json::parse_measure(&read(&a.mu)?, space.events())?;
    let nu = json::parse_measure(&read(&a.nu)?, space.events())?;
    let cert = decide_k_causal(&space, &mu, &nu)?;
    if !cert.is_sound(&space, &mu, &nu) {
        eprintln!("kcausal: certificate failed re-verification");
        return Ok(EXIT_DISAGREEMENT);
    }
    if let Some(p) = &a.certificate {
        emit(Some(p), &json::to_pretty(&json::certificate_json(&cert, space.events())))?;
    }
    if let (Some(p), Some(w)) = (&a.witness, cert.witness()) {
        emit(Some(p), &json::to_pretty(&json::coupling_to_value(w)))?;
    }
    println!("{}", cert.verdict());
    if a.oracle {
        let oracle = strassen_check(&space, &mu, &nu, DEFAULT_ORACLE_BOUND)?;
        if oracle.holds != cert.is_feasible() {
            eprintln!(
                "kcausal: flow says {}, subset oracle says {}",
                cert.verdict(),
                if oracle.holds { "feasible" } else { "infeasible" }
            );
            return Ok(EXIT_DISAGREEMENT);
        }
        println!("oracle agrees");
    }
    Ok(if cert.is_feasible() { EXIT_YES } else { EXIT_NO })
}

pub fn cmd_closure(a: &ClosureArgs) -> Result<i32> {
    let space = load_space(&a.spacetime)?;
    let doc = SpacetimeDoc::explicit(space.events(), space.kplus(), a.coords);
    emit(a.out.as_deref(), &json::to_pretty(&doc))?;
    Ok(EXIT_YES)
}

pub fn cmd_upsets(a: &UpsetsArgs) -> Result<i32> {
    let space = load_space(&a.spacetime)?;
    let events = space.events();
    let lines = space.enumerate_upsets(a.max_events)?.into_iter().map(|u| {
        let mut labels = events.labels_of(&u);
        labels.sort();
        serde_json::json!(labels)
    });
    emit(a.out.as_deref(), &json_lines(lines))?;
    Ok(EXIT_YES)
}

pub fn cmd_timefn(a: &TimefnArgs) -> Result<i32> {
    let space = load_space(&a.spacetime)?;
    space.require_stably_causal()?;
    let functions = match (a.enumerate, a.sample, a.seed) {
        (true, _, _) => timefn::enumerate_time_functions(&space, a.max_events)?,
        (false, Some(n), Some(seed)) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..n)
                .map(|_| timefn::sample_time_function_with(&space, &mut rng))
                .collect::<Result<_>>()?
        }
        _ => return Err(Error::Format("give --enumerate or --sample N --seed S".into())),
    };
    emit(a.out.as_deref(), &json_lines(functions.iter().map(json::time_function_to_value)))?;
    Ok(EXIT_YES)
}

pub fn cmd_generate(a: &GenerateArgs) -> Result<i32> {
    let doc = match a.kind {
        GenerateKind::Sprinkle | GenerateKind::RandomDag => {
            let n = a.n.ok_or_else(|| Error::Format("--n is required".into()))?;
            let relation = if a.kind == GenerateKind::Sprinkle {
                RelationDoc::Sprinkle {
                    n,
                    dim: a.dim,
                    bounds: None,
                    seed: a.seed,
                }
            } else {
                RelationDoc::RandomDag {
                    n,
                    edge_prob: a.edge_prob,
                    seed: a.seed,
                }
            };
            let doc = SpacetimeDoc {
                events: None,
                relation,
                coords: None,
            };
            let space = doc.build()?;
            if a.explicit {
                serde_json::to_value(SpacetimeDoc::explicit(space.events(), space.raw(), true))?
            } else {
                serde_json::to_value(doc)?
            }
        }
        GenerateKind::Measure => {
            let path = a.spacetime.as_deref().ok_or_else(|| Error::Format("--spacetime is required".into()))?;
            let space = load_space(path)?;
            let mu = random_measure(&space, a.atoms.unwrap_or(space.len()), a.seed)?;
            json::measure_to_value(&mu)
        }
    };
    emit(a.out.as_deref(), &json::to_pretty(&doc))?;
    Ok(EXIT_YES)
}

/// `atoms` distinct events chosen uniformly, each with a weight drawn from
/// `1..=24` and then normalized.
pub fn random_measure(space: &CausalSpace, atoms: usize, seed: u64) -> Result<Measure> {
    let n = space.len();
    if atoms == 0 || atoms > n {
        return Err(Error::Format(format!("--atoms must lie in 1..={n}, got {atoms}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let support = rand::seq::index::sample(&mut rng, n, atoms);
    let mut units = vec![0i64; n];
    for p in support.iter() {
        units[p] = rng.gen_range(1..=24);
    }
    let total: i64 = units.iter().sum();
    let weights = units.iter().map(|&u| rational::ratio(u, total)).collect();
    Measure::new(space.events().clone(), weights)
}

pub fn cmd_verify(a: &VerifyArgs) -> Result<i32> {
    let config = TrialConfig {
        suites: Suite::parse_list(&a.suite)?,
        trials: a.trials,
        seed: a.seed,
        max_events: a.max_events,
    };
    let report = harness::run_suite(&config)?;
    for s in &report.suites {
        println!(
            "{:<20} {:>5} passed {:>5} failed {:>5} curiosities",
            s.name.name(),
            s.passed,
            s.failed,
            s.curiosities.len()
        );
    }
    if let Some(p) = &a.report {
        emit(Some(p), &report.to_json())?;
    }
    Ok(if report.total_failed() == 0 { EXIT_YES } else { EXIT_NO })
}

