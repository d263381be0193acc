mod check;
mod json;
mod rms;
mod scan;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use idemgen::budget::DEFAULT_CAP;
use idemgen::construct::{load_group_file, Recipe};
use idemgen::{Budget, Error, PermutationGroup};

/// Exit status when a verdict was computed, whatever it is.
pub const EXIT_OK: u8 = 0;
pub const EXIT_INPUT: u8 = 1;
pub const EXIT_BUDGET: u8 = 2;
pub const EXIT_MISMATCH: u8 = 3;

/// Version of `schema/report.schema.json` that reports conform to.
pub const SCHEMA_VERSION: &str = "1.0.0";

#[derive(Parser)]
#[command(name = "idemgen", version, about = "Idempotent generation checks for permutation groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum PropertyArg {
    Kut,
    StrongKut,
    RoadClosure,
    #[value(name = "2id")]
    TwoId,
    Kid,
    Basic,
    Houghton,
}

#[derive(clap::Args)]
pub struct CheckArgs {
    /// Group file, or an inline recipe such as `recipe:pgl2(7)`.
    #[arg(long)]
    group: String,
    #[arg(long, value_enum)]
    property: PropertyArg,
    /// One or more values of k, comma separated.
    #[arg(long, value_delimiter = ',')]
    k: Vec<usize>,
    /// A transformation in image notation, for `kid`.
    #[arg(long)]
    t: Option<String>,
    /// Check every rank-k representative separately, for `kid`.
    #[arg(long)]
    all_t: bool,
    /// Cap for every enumeration; overrides IDEMGEN_BUDGET.
    #[arg(long)]
    budget: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Decide one property of one group and print a JSON report.
    Check(CheckArgs),
    /// Shorthand for `check --property kid`.
    CheckKid {
        #[arg(long)]
        group: String,
        #[arg(long, value_delimiter = ',')]
        k: Vec<usize>,
        #[arg(long)]
        t: Option<String>,
        #[arg(long)]
        budget: Option<usize>,
    },
    /// Recompute every expected verdict in a manifest and diff.
    Scan {
        manifest: PathBuf,
        /// Worker threads; the report does not depend on it.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        #[arg(long, value_enum, default_value_t = scan::Format::Json)]
        format: scan::Format,
        #[arg(long)]
        budget: Option<usize>,
    },
    /// Connectivity, Graham normal form and idempotent generation of a
    /// Rees 0-matrix semigroup.
    #[command(alias = "check-rms")]
    Rms {
        #[arg(long)]
        file: PathBuf,
        #[arg(long)]
        budget: Option<usize>,
    },
}

/// The budget from `--budget`, else `IDEMGEN_BUDGET`, else the default.
pub fn resolve_budget(flag: Option<usize>) -> Result<Budget, String> {
    if let Some(cap) = flag {
        return Ok(Budget::uniform(cap));
    }
    match std::env::var("IDEMGEN_BUDGET") {
        Ok(v) => v
            .trim()
            .parse()
            .map(Budget::uniform)
            .map_err(|_| format!("IDEMGEN_BUDGET must be a positive integer, got {v:?}")),
        Err(_) => Ok(Budget::uniform(DEFAULT_CAP)),
    }
}

pub fn load_group(spec: &str) -> Result<PermutationGroup, Error> {
    if spec.trim_start().starts_with("recipe:") {
        let r = Recipe::parse(spec)?;
        let name = r.to_string();
        let g = r.build()?;
        Ok(if g.name().is_some() { g } else { g.with_name(name) })
    } else {
        load_group_file(spec)
    }
}

pub fn exit_for(e: &Error) -> u8 {
    if e.is_budget() {
        EXIT_BUDGET
    } else {
        EXIT_INPUT
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Check(args) => check::run(args),
        Command::CheckKid { group, k, t, budget } => check::run(CheckArgs {
            group,
            property: PropertyArg::Kid,
            k,
            t,
            all_t: false,
            budget,
        }),
        Command::Scan {
            manifest,
            jobs,
            format,
            budget,
        } => scan::run(&manifest, jobs, format, budget),
        Command::Rms { file, budget } => rms::run(&file, budget),
    };
    ExitCode::from(code)
}
