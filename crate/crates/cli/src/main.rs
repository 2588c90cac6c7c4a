//! `nfl-lab`: exhaustive no-free-lunch verification from the command line.
//!
//! Exit codes: 0 success, 2 input error, 3 set not closed under permutation
//! (`check-cup`), 4 enumeration guard exceeded, 5 computed results
//! contradict each other.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use nfl_core::family::FAMILY_SEEDS;
use nfl_core::space::Guards;

use commands::{AnalyzeOptions, Context, VerifyOptions};
use report::{write_output, CliResult, Report};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(name = "nfl-lab", version, about = "Exact, exhaustive no-free-lunch verification over finite search spaces")]
struct Cli {
    /// Largest |Y|^|X| to enumerate and largest exponent n materialized as 2^n.
    #[arg(long, global = true, default_value_t = 1 << 20)]
    guard_exact: u64,

    /// Largest permutation orbit to enumerate.
    #[arg(long, global = true, default_value_t = 1_000_000)]
    guard_orbit: u64,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Seeds for family entries given without one, e.g. `rand` or `memo:rwr`.
    #[arg(long, global = true, value_delimiter = ',')]
    seed: Vec<u64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide whether a function set is closed under permutation.
    CheckCup { functions: PathBuf },

    /// Print the smallest closed superset of a function set.
    Closure { functions: PathBuf },

    /// Compare performance distributions across an algorithm family.
    VerifyNfl {
        functions: PathBuf,
        /// Probability vector; switches to the weighted check.
        #[arg(long)]
        probs: Option<PathBuf>,
        /// Family string such as `lex,order:3210,rand:7` (default: built-in family).
        #[arg(long)]
        family: Option<String>,
        /// Trace lengths (default: 1..=|X|).
        #[arg(long, value_delimiter = ',')]
        m: Vec<usize>,
        #[arg(long, value_delimiter = ',', default_value = "min-so-far,value-at-end")]
        measures: Vec<String>,
        /// Include every per-algorithm mass table in the JSON report.
        #[arg(long)]
        distributions: bool,
    },

    /// Count closed subsets of all functions X -> Y.
    Count {
        x: u64,
        y: u64,
        /// Fail instead of omitting the exact subset count when it is too large.
        #[arg(long)]
        exact: bool,
    },

    /// Fraction of closed subsets for a grid of |X| and |Y|.
    FractionCurve {
        #[arg(long, default_value_t = 1)]
        x_min: u64,
        #[arg(long, default_value_t = 8)]
        x_max: u64,
        #[arg(long, value_delimiter = ',', default_value = "2,3,4")]
        y: Vec<u64>,
    },

    /// Mean first hitting time over all placements of n desirable points.
    HittingTime {
        x: usize,
        n: usize,
        #[arg(long)]
        family: Option<String>,
        /// Include the first-hit time of every ensemble member.
        #[arg(long)]
        times: bool,
    },

    /// Steepness, local minima and constrained-class certificates.
    Analyze {
        functions: PathBuf,
        neighborhood: PathBuf,
        /// Cost metric: `abs` or `discrete`.
        #[arg(long, default_value = "abs")]
        metric: String,
        /// Certify the class of functions with at most this many local minima.
        #[arg(long)]
        max_minima: Option<usize>,
        /// Certify the class of functions with steepness at most this value.
        #[arg(long)]
        max_steepness: Option<String>,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::CheckCup { .. } => "check-cup",
            Command::Closure { .. } => "closure",
            Command::VerifyNfl { .. } => "verify-nfl",
            Command::Count { .. } => "count",
            Command::FractionCurve { .. } => "fraction-curve",
            Command::HittingTime { .. } => "hitting-time",
            Command::Analyze { .. } => "analyze",
        }
    }

    fn config(&self) -> Value {
        match self {
            Command::CheckCup { functions } | Command::Closure { functions } => {
                json!({ "functions": functions })
            }
            Command::VerifyNfl { functions, probs, family, m, measures, distributions } => json!({
                "functions": functions,
                "probs": probs,
                "family": family,
                "m": m,
                "measures": measures,
                "distributions": distributions,
            }),
            Command::Count { x, y, exact } => json!({ "x": x, "y": y, "exact": exact }),
            Command::FractionCurve { x_min, x_max, y } => {
                json!({ "x_min": x_min, "x_max": x_max, "y": y })
            }
            Command::HittingTime { x, n, family, times } => {
                json!({ "x": x, "n": n, "family": family, "times": times })
            }
            Command::Analyze { functions, neighborhood, metric, max_minima, max_steepness } => json!({
                "functions": functions,
                "neighborhood": neighborhood,
                "metric": metric,
                "max_minima": max_minima,
                "max_steepness": max_steepness,
            }),
        }
    }
}

impl Cli {
    fn config(&self, seeds: &[u64]) -> Value {
        json!({
            "guard_exact": self.guard_exact,
            "guard_orbit": self.guard_orbit,
            "format": match self.format { Format::Json => "json", Format::Csv => "csv" },
            "out": self.out,
            "seed": seeds,
            "args": self.command.config(),
        })
    }
}

/// Runs the command and returns the bytes to write and the exit status.
fn execute(cli: &Cli) -> CliResult<(Vec<u8>, Report)> {
    if cli.guard_exact == 0 || cli.guard_orbit == 0 {
        return Err(report::CliError::Input("guards must be positive".into()));
    }
    let seeds = if cli.seed.is_empty() { FAMILY_SEEDS.to_vec() } else { cli.seed.clone() };
    let ctx = Context {
        guards: Guards {
            max_functions: cli.guard_exact,
            max_orbit: cli.guard_orbit,
            max_exponent: cli.guard_exact,
        },
        seeds: seeds.clone(),
    };
    let mut csv_override = None;
    let report = match &cli.command {
        Command::CheckCup { functions } => commands::check_cup(&ctx, functions)?,
        Command::Closure { functions } => commands::closure(&ctx, functions)?,
        Command::VerifyNfl { functions, probs, family, m, measures, distributions } => {
            commands::verify_nfl(
                &ctx,
                &VerifyOptions {
                    functions,
                    probs: probs.as_deref(),
                    family: family.as_deref(),
                    ms: m,
                    measures,
                    distributions: *distributions,
                },
            )?
        }
        Command::Count { x, y, exact } => commands::count(&ctx, *x, *y, *exact)?,
        Command::FractionCurve { x_min, x_max, y } => {
            let (report, csv) = commands::curve(*x_min, *x_max, y)?;
            csv_override = Some(csv);
            report
        }
        Command::HittingTime { x, n, family, times } => {
            commands::hitting_time(&ctx, *x, *n, family.as_deref(), *times)?
        }
        Command::Analyze { functions, neighborhood, metric, max_minima, max_steepness } => {
            commands::analyze(
                &ctx,
                &AnalyzeOptions {
                    functions,
                    neighborhood,
                    metric,
                    max_minima: *max_minima,
                    max_steepness: max_steepness.as_deref(),
                },
            )?
        }
    };
    let bytes = match cli.format {
        Format::Json => report.render_json(cli.command.name(), cli.config(&seeds)),
        Format::Csv => csv_override.unwrap_or_else(|| report.render_csv()),
    };
    Ok((bytes, report))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = execute(&cli).and_then(|(bytes, report)| {
        write_output(&bytes, cli.out.as_deref())?;
        Ok(report)
    });
    match outcome {
        Ok(report) => {
            if let Some(notice) = &report.notice {
                eprintln!("nfl-lab: {notice}");
            }
            ExitCode::from(report.exit as u8)
        }
        Err(e) => {
            eprintln!("nfl-lab: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
