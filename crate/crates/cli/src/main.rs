//! `sp1k` — runs the exact case scans and the numerical matrix-model
//! certificates, and assembles the consolidated classification report.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use sp1k_core::boundary::{
    scan_connected, scan_inner, scan_outer, spec_circle_certificate, ConnectedScanOptions,
    InnerScanBounds, OuterScanBounds,
};
use sp1k_core::report::{self, RunConfig};
use sp1k_core::reps::{self, numeric, RepName};
use sp1k_core::IrrepSpec;

#[derive(Parser)]
#[command(
    name = "sp1k",
    about = "Certificate-producing scans for representations quotient-equivalent to \
             finite extensions of Sp(1)^k",
    version
)]
struct Cli {
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one of the exhaustive case scans.
    Scan {
        #[command(subcommand)]
        which: ScanCommand,
    },
    /// Circle-isotropy table for one representation spec.
    Boundary {
        /// Comma-separated factor dimensions, e.g. "2,2,2".
        #[arg(long)]
        spec: String,
    },
    /// Reflection group facts: orders, extensions, irreducibility.
    Coxeter {
        /// Compute and print the full fact table.
        #[arg(long)]
        check: bool,
    },
    /// Numerical certificates for one matrix model.
    Rep(RepArgs),
    /// Run the whole pipeline and emit the consolidated report.
    ReproduceTheorem {
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[command(flatten)]
        numeric: NumericArgs,
        #[command(flatten)]
        outer: OuterBoundArgs,
        /// Smallest number of factors for the connected scan.
        #[arg(long, default_value_t = 3)]
        k_min: usize,
        /// Largest number of factors for the connected scan.
        #[arg(long, default_value_t = 8)]
        k_max: usize,
    },
    /// Re-execute the computation recorded in a certificate file.
    Validate { file: PathBuf },
}

#[derive(Subcommand)]
enum ScanCommand {
    /// Connected-group scan over a range of factor counts.
    Connected {
        /// Run a single factor count instead of the default range 3..=8.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, default_value_t = 3)]
        k_min: usize,
        #[arg(long, default_value_t = 8)]
        k_max: usize,
    },
    /// Outer-involution scan.
    Outer(OuterBoundArgs),
    /// Inner-involution scan (plus the quaternionic parity certificates).
    Inner {
        #[arg(long, default_value_t = 6)]
        max_a: usize,
        #[arg(long, default_value_t = 6)]
        max_p: u32,
    },
}

#[derive(Args, Clone)]
struct OuterBoundArgs {
    #[arg(long, default_value_t = 6)]
    max_a: usize,
    #[arg(long, default_value_t = 6)]
    max_b: usize,
    #[arg(long, default_value_t = 6)]
    max_c: usize,
    #[arg(long, default_value_t = 12)]
    max_dim: u32,
}

impl From<&OuterBoundArgs> for OuterScanBounds {
    fn from(a: &OuterBoundArgs) -> Self {
        OuterScanBounds {
            max_a: a.max_a,
            max_b: a.max_b,
            max_c: a.max_c,
            max_dim: a.max_dim,
        }
    }
}

#[derive(Args, Clone)]
struct NumericArgs {
    #[arg(long, default_value_t = numeric::DEFAULT_TRIALS)]
    trials: u32,
    #[arg(long, default_value_t = numeric::DEFAULT_TOL)]
    tol: f64,
    #[arg(long, default_value_t = numeric::DEFAULT_SEED)]
    seed: u64,
}

#[derive(Args)]
struct RepArgs {
    /// Representation name: so_n_sp1, sp3_lambda3, su6_lambda3,
    /// spin12_halfspin, su4_sp2, spin7_u2, so4_so3, so4_so4,
    /// sp1cubed_tensor.
    name: String,
    /// Factor dimension for the so_n_sp1 family.
    #[arg(long, default_value_t = 5)]
    n: u32,
    /// Cohomogeneity certificate.
    #[arg(long)]
    cohom: bool,
    /// Polarity certificate.
    #[arg(long)]
    polar: bool,
    /// Isotropy dimension certificate at a point class.
    #[arg(long, value_name = "CLASS")]
    isotropy: Option<String>,
    /// Reduction dimension certificate.
    #[arg(long)]
    reduction: bool,
    /// Circle boundary analysis (su4_sp2 only): circle index 1 or 2.
    #[arg(long, value_name = "WHICH")]
    circle: Option<usize>,
    #[command(flatten)]
    numeric: NumericArgs,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Markdown,
}

fn emit(output: &Option<PathBuf>, text: &str) -> Result<()> {
    match output {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {path:?}")),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn to_json<T: serde::Serialize>(value: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(value)?)
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Scan { which } => {
            let certs = match which {
                ScanCommand::Connected { k, k_min, k_max } => {
                    let (lo, hi) = match k {
                        Some(k) => (k, k),
                        None => (k_min, k_max),
                    };
                    let mut all = Vec::new();
                    for k in lo..=hi {
                        all.extend(scan_connected(k, &ConnectedScanOptions::default())?);
                    }
                    all
                }
                ScanCommand::Outer(bounds) => scan_outer(&(&bounds).into())?,
                ScanCommand::Inner { max_a, max_p } => {
                    scan_inner(&InnerScanBounds { max_a, max_p })?
                }
            };
            emit(&cli.output, &to_json(&certs)?)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Boundary { spec } => {
            let spec = IrrepSpec::parse(&spec)?;
            let cert = spec_circle_certificate(&spec)?;
            emit(&cli.output, &to_json(&cert)?)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Coxeter { check } => {
            if !check {
                bail!("nothing to do; pass --check");
            }
            let facts = report::coxeter_facts()?;
            emit(&cli.output, &to_json(&facts)?)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Rep(args) => {
            let name = if args.name == "so_n_sp1" {
                RepName::SoNSp1(args.n)
            } else {
                RepName::parse(&args.name)?
            };
            let rep = reps::build(name)?;
            let (trials, tol, seed) = (args.numeric.trials, args.numeric.tol, args.numeric.seed);
            let mut out = Vec::new();
            if args.cohom {
                out.push(serde_json::to_value(numeric::cohomogeneity(
                    &rep, trials, tol, seed,
                )?)?);
            }
            if args.polar {
                out.push(serde_json::to_value(numeric::polar_test(
                    &rep, trials, tol, seed,
                )?)?);
            }
            if let Some(class) = &args.isotropy {
                let class = numeric::PointClass::parse(class)?;
                out.push(serde_json::to_value(numeric::isotropy_dim(
                    &rep, class, trials, tol, seed,
                )?)?);
            }
            if args.reduction {
                out.push(serde_json::to_value(numeric::reduction_dimension_check(
                    &rep, trials, tol, seed,
                )?)?);
            }
            if let Some(which) = args.circle {
                out.push(serde_json::to_value(numeric::circle_boundary_witness(
                    &rep, which, tol, seed,
                )?)?);
            }
            if out.is_empty() {
                bail!("select at least one of --cohom, --polar, --isotropy, --reduction, --circle");
            }
            emit(&cli.output, &to_json(&out)?)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::ReproduceTheorem {
            format,
            numeric,
            outer,
            k_min,
            k_max,
        } => {
            let config = RunConfig {
                k_min,
                k_max,
                outer_bounds: (&outer).into(),
                inner_bounds: InnerScanBounds::default(),
                trials: numeric.trials,
                tol: numeric.tol,
                seed: numeric.seed,
            };
            let report = report::run(&config)?;
            let text = match format {
                Format::Json => serde_json::to_string(&report)?,
                Format::Markdown => report::to_markdown(&report),
            };
            emit(&cli.output, &text)?;
            if report.all_expected_hold {
                Ok(ExitCode::SUCCESS)
            } else {
                for f in &report.failures {
                    eprintln!("failed: {f}");
                }
                Ok(ExitCode::from(1))
            }
        }
        Command::Validate { file } => {
            let text = fs::read_to_string(&file).with_context(|| format!("reading {file:?}"))?;
            let value: serde_json::Value = serde_json::from_str(&text)?;
            let ok = report::validate_certificate_value(&value)?;
            emit(&cli.output, &to_json(&serde_json::json!({ "valid": ok }))?)?;
            if ok {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(1))
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}
