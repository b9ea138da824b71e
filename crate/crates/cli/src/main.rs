//! `cdlat`: construct groups, compute Chermak–Delgado lattices, and run the
//! verification suites.

mod error;
mod report;

use std::path::PathBuf;
use std::io::Write;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use cdlat_core::cd::{cd_lattice, Method};
use cdlat_core::harness::{self, census_row, Suite, VerificationOutcome};
use cdlat_core::{Error, GroupSpec, Limits};
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::CliError;
use crate::report::{CdJson, GroupSummary, ScanRow};

#[derive(Parser, Debug)]
#[command(
    name = "cdlat",
    version,
    about = "Chermak-Delgado lattices of finite groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug)]
struct Common {
    /// Largest group order for exhaustive subgroup enumeration.
    #[arg(long, global = true, default_value_t = Limits::default().order_bound)]
    order_bound: usize,
    /// Largest number of subgroups the enumeration may produce.
    #[arg(long, global = true, default_value_t = Limits::default().count_bound)]
    count_bound: usize,
    /// Worker threads (default: one per core).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Abort after this many seconds.
    #[arg(long, global = true)]
    time_budget: Option<f64>,
    /// Include wall-clock timings in JSON output.
    #[arg(long, global = true)]
    timings: bool,
}

#[derive(Args, Debug)]
struct SpecSource {
    /// Path to a JSON group spec.
    #[arg(long, conflicts_with = "inline")]
    spec: Option<PathBuf>,
    /// A JSON group spec given directly.
    #[arg(long)]
    inline: Option<String>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Json,
    Dot,
    Text,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum MethodArg {
    /// Maximize over all subgroups.
    Oracle,
    /// Maximize over intersections of element centralizers.
    Closure,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Family {
    Zm,
    Dihedral,
    Corpus,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a group and print a summary.
    Construct {
        #[command(flatten)]
        source: SpecSource,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Include the full Cayley table.
        #[arg(long)]
        dump_table: bool,
    },
    /// Compute the Chermak-Delgado lattice.
    Cd {
        #[command(flatten)]
        source: SpecSource,
        #[arg(long, value_enum, default_value_t = MethodArg::Closure)]
        method: MethodArg,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// List member elements for members up to this order.
        #[arg(long, default_value_t = 64)]
        elements_limit: usize,
    },
    /// Run verification suites; exits 1 if any claim fails.
    Verify {
        /// Suite to run; repeatable. Default: every fast suite.
        #[arg(long = "suite")]
        suites: Vec<String>,
        /// Bound on mn for the ZM family.
        #[arg(long, default_value_t = 200)]
        bound: u64,
    },
    /// Tabulate CD lattices over a family.
    Scan {
        #[arg(value_enum)]
        family: Family,
        /// Bound on mn for zm, on the group order for dihedral.
        #[arg(long, default_value_t = 30)]
        bound: u64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// The order 50421 Frobenius group with non-abelian kernel.
    #[command(name = "example-sec3")]
    ExampleSec3,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn limits(c: &Common, default_budget: Option<f64>) -> Result<Limits, CliError> {
    if c.order_bound == 0 || c.count_bound == 0 {
        return Err(CliError::InvalidSpec("guards must be positive".into()));
    }
    let mut l = Limits {
        order_bound: c.order_bound,
        count_bound: c.count_bound,
        ..Limits::default()
    };
    if let Some(secs) = c.time_budget.or(default_budget) {
        if !secs.is_finite() || secs <= 0.0 {
            return Err(CliError::InvalidSpec("time budget must be positive".into()));
        }
        l = l.with_time_budget(Duration::from_secs_f64(secs));
    }
    Ok(l)
}

fn read_spec(src: &SpecSource) -> Result<GroupSpec, CliError> {
    let text = match (&src.spec, &src.inline) {
        (Some(path), None) => std::fs::read_to_string(path)
            .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?,
        (None, Some(s)) => s.clone(),
        _ => {
            return Err(CliError::InvalidSpec(
                "give exactly one of --spec or --inline".into(),
            ))
        }
    };
    Ok(serde_json::from_str(&text)?)
}

/// Writes to stdout. A reader that closed the pipe early is not an error.
fn emit(text: &str) -> Result<(), CliError> {
    let mut out = std::io::stdout().lock();
    match out.write_all(text.as_bytes()).and_then(|()| out.flush()) {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(e.into()),
        _ => Ok(()),
    }
}

fn print_json<T: serde::Serialize>(value: &T) -> Result<(), CliError> {
    let s = serde_json::to_string_pretty(value).map_err(|e| CliError::Io(e.to_string()))?;
    emit(&format!("{s}\n"))
}

fn run(cli: Cli) -> Result<u8, CliError> {
    if let Some(n) = cli.common.threads {
        if n == 0 {
            return Err(CliError::InvalidSpec("--threads must be positive".into()));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| CliError::Io(e.to_string()))?;
    }
    let common = &cli.common;
    match cli.command {
        Command::Construct {
            source,
            format,
            dump_table,
        } => {
            let g = read_spec(&source)?.build()?;
            let summary = GroupSummary::new(&g, dump_table);
            match format {
                Format::Json => print_json(&summary)?,
                Format::Text => emit(&summary.to_text())?,
                Format::Dot => {
                    return Err(CliError::InvalidSpec("construct has no dot output".into()))
                }
            }
            Ok(0)
        }
        Command::Cd {
            source,
            method,
            format,
            elements_limit,
        } => {
            let l = limits(common, None)?;
            let g = read_spec(&source)?.build()?;
            let method = match method {
                MethodArg::Oracle => Method::BruteForce,
                MethodArg::Closure => Method::ClosureFamily,
            };
            let started = Instant::now();
            let report = cd_lattice(&g, method, &l)?;
            let ms = common.timings.then(|| started.elapsed().as_millis() as u64);
            match format {
                Format::Json => print_json(&CdJson::new(&g, &report, elements_limit, ms))?,
                Format::Dot => emit(&report::to_dot(&g, &report))?,
                Format::Text => emit(&report::to_text(&g, &report))?,
            }
            Ok(0)
        }
        Command::Verify { suites, bound } => {
            let l = limits(common, None)?;
            let selected: Vec<Suite> = if suites.is_empty() {
                Suite::FAST.to_vec()
            } else {
                suites
                    .iter()
                    .map(|s| {
                        Suite::parse(s)
                            .ok_or_else(|| CliError::InvalidSpec(format!("unknown suite {s}")))
                    })
                    .collect::<Result<_, _>>()?
            };
            let mut outcomes = Vec::new();
            for s in selected {
                outcomes.extend(s.run(bound, &l)?);
            }
            emit_outcomes(outcomes, common.timings)
        }
        Command::Scan {
            family,
            bound,
            format,
        } => {
            let l = limits(common, None)?;
            let specs: Vec<GroupSpec> = match family {
                Family::Zm => harness::zm_triples(bound)
                    .into_iter()
                    .map(|(m, n, r)| GroupSpec::zm(m, n, r))
                    .collect(),
                Family::Dihedral => (4..=bound as usize)
                    .step_by(2)
                    .map(GroupSpec::dihedral)
                    .collect(),
                Family::Corpus => harness::corpus::chain_corpus(),
            };
            let rows = scan(&specs, &l)?;
            match format {
                Format::Json => print_json(&rows)?,
                Format::Text => emit(&report::scan_text(&rows))?,
                Format::Dot => return Err(CliError::InvalidSpec("scan has no dot output".into())),
            }
            Ok(0)
        }
        Command::ExampleSec3 => {
            let l = limits(common, Some(1800.0))?;
            emit_outcomes(Suite::ExampleSec3.run(0, &l)?, common.timings)
        }
    }
}

fn scan(specs: &[GroupSpec], l: &Limits) -> Result<Vec<ScanRow>, CliError> {
    use rayon::prelude::*;
    specs
        .par_iter()
        .map(|spec| match census_row(spec, l) {
            Ok(row) => Ok(ScanRow::Done(row)),
            Err(e @ (Error::SizeGuard { .. } | Error::TimeBudget)) => Ok(ScanRow::Skipped {
                name: spec.name(),
                instance: spec.clone(),
                skipped: e.to_string(),
            }),
            Err(e) => Err(CliError::from(e)),
        })
        .collect()
}

fn emit_outcomes(mut outcomes: Vec<VerificationOutcome>, timings: bool) -> Result<u8, CliError> {
    if !timings {
        for o in &mut outcomes {
            o.runtime_ms = None;
        }
    }
    print_json(&outcomes)?;
    let failed: Vec<String> = outcomes
        .iter()
        .filter(|o| !o.passed)
        .map(|o| format!("{} on {}", o.claim_id, o.instance.name()))
        .collect();
    if failed.is_empty() {
        Ok(0)
    } else {
        eprintln!("{}", CliError::ClaimFailed(failed.join("; ")));
        Ok(1)
    }
}
