use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use orbit_atlas::classifier::SphericalPairTable;
use orbit_atlas::duality::{HypersphericalDatum, SDescriptor};
use orbit_atlas::orbit::{OrbitDatum, ReductiveFactorList};
use orbit_atlas::partitions::GroupType;
use orbit_atlas::report::{self, Config, OutputFormat};
use orbit_atlas::Error;

const EXIT_USAGE: u8 = 1;
const EXIT_VALIDATION: u8 = 2;
const EXIT_CHECK_FAILED: u8 = 3;

/// Nilpotent orbits of classical groups: hypersphericality candidates and duals.
#[derive(Debug, Parser)]
#[command(name = "orbit-atlas", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    opts: GlobalOpts,
}

#[derive(Debug, Args)]
struct GlobalOpts {
    /// Largest standard dimension enumerated.
    #[arg(long, global = true, default_value_t = 16)]
    max_dim: usize,
    /// Largest standard dimension handed to the exact-arithmetic oracle.
    #[arg(long, global = true, default_value_t = 10)]
    oracle_bound: usize,
    /// Random trials per sphericity certificate.
    #[arg(long, global = true, default_value_t = 8)]
    trials: usize,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// json, csv or text.
    #[arg(long, global = true, default_value = "json")]
    format: OutputFormat,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Worker threads (default: available parallelism).
    #[arg(long, global = true)]
    jobs: Option<usize>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Full report on one orbit, e.g. `classify D:8 5,1,1,1`.
    Classify { group: String, partition: String },
    /// Dual of a datum; H defaults to the reductive centralizer without O1 factors.
    Dual {
        group: String,
        partition: String,
        /// Factors of H, e.g. `O3` or `Sp2,O4`; `1` for the trivial group.
        #[arg(long)]
        h: Option<String>,
        /// S: `0`, `std_4`, `std+std*_8`, `dual(u1)` or a free-form tag.
        #[arg(long, default_value = "0")]
        s: String,
    },
    /// Moment-map transfer onto a group of the other kind.
    Transfer {
        group: String,
        partition: String,
        #[arg(long)]
        to: String,
    },
    /// Barbasch-Vogan dual.
    Bv { group: String, partition: String },
    /// Report on every B, C and D orbit up to --max-dim.
    Atlas,
    /// Run the cross-check suites; exit code 3 if any fails.
    Check {
        /// Pair table to check instead of the built-in one.
        #[arg(long)]
        table: Option<PathBuf>,
    },
}

enum Failure {
    Usage(String),
    Validation(Error),
    CheckFailed(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Validation(e)
    }
}

fn config(opts: &GlobalOpts) -> Config {
    Config {
        max_dim: opts.max_dim,
        oracle_bound: opts.oracle_bound,
        trials: opts.trials,
        seed: opts.seed,
        format: opts.format,
        jobs: opts.jobs,
    }
}

fn run(cli: Cli) -> Result<String, Failure> {
    let format = cli.opts.format;
    let out = match cli.command {
        Command::Classify { group, partition } => report::cmd_classify(&format!("{group} {partition}"), format)?,
        Command::Dual { group, partition, h, s } => {
            let orbit = OrbitDatum::parse(&group, &partition)?;
            let s: SDescriptor = s.parse()?;
            let datum = match h {
                None => HypersphericalDatum::from_orbit(&orbit, s)?,
                Some(h) => HypersphericalDatum::new(orbit.group, h.parse::<ReductiveFactorList>()?, orbit.lambda, s)?,
            };
            report::cmd_dual(&datum, format)?
        }
        Command::Transfer { group, partition, to } => {
            let source = OrbitDatum::parse(&group, &partition)?;
            report::cmd_transfer(&source, to.parse::<GroupType>()?, format)?
        }
        Command::Bv { group, partition } => {
            let source = OrbitDatum::parse(&group, &partition)?;
            report::cmd_bv(source.group, &source.lambda, format)?
        }
        Command::Atlas => report::cmd_atlas(&config(&cli.opts))?,
        Command::Check { table } => {
            let owned;
            let table = match table {
                None => SphericalPairTable::embedded(),
                Some(path) => {
                    let text = fs::read_to_string(&path)
                        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
                    owned = SphericalPairTable::from_json(&text)?;
                    &owned
                }
            };
            let result = report::cmd_check(&config(&cli.opts), table)?;
            let rendered = report::render_check(&result, format)?;
            if !result.passed() {
                emit(cli.opts.out.as_ref(), &rendered)?;
                return Err(Failure::CheckFailed(rendered));
            }
            rendered
        }
    };
    emit(cli.opts.out.as_ref(), &out)?;
    Ok(out)
}

fn emit(path: Option<&PathBuf>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| Failure::Usage(format!("cannot write {}: {e}", p.display()))),
        None => Ok(()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(EXIT_USAGE) } else { ExitCode::SUCCESS };
        }
    };
    let to_stdout = cli.opts.out.is_none();
    match run(cli) {
        Ok(out) => {
            if to_stdout {
                print!("{out}");
            }
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Validation(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_VALIDATION)
        }
        Err(Failure::CheckFailed(report)) => {
            if to_stdout {
                print!("{report}");
            }
            eprintln!("error: cross-checks failed");
            ExitCode::from(EXIT_CHECK_FAILED)
        }
    }
}
