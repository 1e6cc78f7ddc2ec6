//! `hnkit`: command-line harness for Hessian nilpotency experiments.
//!
//! Every subcommand prints either a human-readable table or, with `--json`,
//! one versioned JSON report. Exit status: 0 success or certified, 2
//! inconclusive or not yet vanishing, 1 error.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde::Serialize;
use sha2::{Digest, Sha256};

use commands::{Outcome, Verdict};

pub const SCHEMA_VERSION: u32 = 1;
const THREADS_ENV: &str = "HNKIT_THREADS";

#[derive(Parser, Debug)]
#[command(
    name = "hnkit",
    version,
    about = "Exact experiments on Hessian nilpotent polynomials"
)]
struct Cli {
    /// Emit a single JSON report instead of a table.
    #[arg(long, global = true)]
    json: bool,

    /// Number of variables; inferred from the largest index when omitted.
    #[arg(long, global = true)]
    n: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide whether P is Hessian nilpotent, by both routes.
    Check { polynomial: String },

    /// Tabulate Δ^m(f·P^m) for 0 ≤ m ≤ mmax (f defaults to P).
    Vanish {
        polynomial: String,
        #[arg(long)]
        f: Option<String>,
        #[arg(long, default_value_t = 6)]
        mmax: u32,
    },

    /// Saturation certificate for the ideal (∂P/∂z_i, σ₂) of a homogeneous HN P.
    Certify {
        polynomial: String,
        #[arg(long)]
        max_degree: Option<u32>,
    },

    /// Graded pieces I_m, solution spaces S_m and the check S_m = I_m^⊥.
    Ideal {
        /// One generator per line; `#` starts a comment.
        generators: PathBuf,
        /// A degree `m` or an inclusive range `a..b`.
        #[arg(long, default_value = "0..4")]
        m: String,
        /// Also run the common-zero saturation certificate.
        #[arg(long)]
        certify: bool,
        #[arg(long)]
        max_degree: Option<u32>,
    },

    /// The map F = z - ∇P, its Jacobian determinant and fixed points.
    Map {
        polynomial: String,
        /// Comma-separated point, e.g. `1,i`.
        #[arg(long)]
        fixed_point: Option<String>,
    },

    /// Build polynomials from a FamilySpec JSON file (object or array).
    Family {
        /// Spec file; omit together with `--standard` for the built-in corpus.
        spec: Option<PathBuf>,
        #[arg(long)]
        standard: bool,
        /// Run the vanishing certificate on every HN member.
        #[arg(long)]
        certify: bool,
    },
}

#[derive(Serialize)]
struct Toolkit {
    name: &'static str,
    version: &'static str,
}

#[derive(Serialize)]
struct Report<'a> {
    schema_version: u32,
    toolkit: Toolkit,
    command: &'a str,
    argv: &'a [String],
    input_sha256: String,
    status: &'static str,
    payload: serde_json::Value,
    elapsed_ms: f64,
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Check { .. } => "check",
        Command::Vanish { .. } => "vanish",
        Command::Certify { .. } => "certify",
        Command::Ideal { .. } => "ideal",
        Command::Map { .. } => "map",
        Command::Family { .. } => "family",
    }
}

fn configure_threads() -> anyhow::Result<()> {
    if let Ok(v) = std::env::var(THREADS_ENV) {
        let threads: usize = v
            .parse()
            .map_err(|_| anyhow::anyhow!("{THREADS_ENV} must be a positive integer, got `{v}`"))?;
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()?;
    }
    Ok(())
}

fn run(cli: &Cli) -> anyhow::Result<(Vec<u8>, Outcome)> {
    configure_threads()?;
    let n = cli.n;
    match &cli.command {
        Command::Check { polynomial } => Ok((
            polynomial.clone().into_bytes(),
            commands::check(polynomial, n)?,
        )),
        Command::Vanish {
            polynomial,
            f,
            mmax,
        } => {
            let mut input = polynomial.clone();
            if let Some(f) = f {
                input.push('\n');
                input.push_str(f);
            }
            Ok((
                input.into_bytes(),
                commands::vanish(polynomial, f.as_deref(), *mmax, n)?,
            ))
        }
        Command::Certify {
            polynomial,
            max_degree,
        } => Ok((
            polynomial.clone().into_bytes(),
            commands::certify(polynomial, *max_degree, n)?,
        )),
        Command::Ideal {
            generators,
            m,
            certify,
            max_degree,
        } => {
            let bytes = std::fs::read(generators)
                .map_err(|e| anyhow::anyhow!("cannot read {}: {e}", generators.display()))?;
            let text = String::from_utf8(bytes.clone())?;
            let range = commands::parse_degree_range(m)?;
            let certify = certify.then_some(*max_degree);
            Ok((bytes, commands::ideal(&text, range, certify, n)?))
        }
        Command::Map {
            polynomial,
            fixed_point,
        } => Ok((
            polynomial.clone().into_bytes(),
            commands::map(polynomial, fixed_point.as_deref(), n)?,
        )),
        Command::Family {
            spec,
            standard,
            certify,
        } => {
            let bytes = match (spec, standard) {
                (Some(path), false) => std::fs::read(path)
                    .map_err(|e| anyhow::anyhow!("cannot read {}: {e}", path.display()))?,
                (None, true) => Vec::new(),
                _ => anyhow::bail!("give either a spec file or --standard"),
            };
            let text = String::from_utf8(bytes.clone())?;
            Ok((
                bytes,
                commands::family((!*standard).then_some(text.as_str()), *certify)?,
            ))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let argv: Vec<String> = std::env::args().skip(1).collect();
    let start = Instant::now();
    let result = run(&cli);
    let elapsed_ms = start.elapsed().as_secs_f64() * 1000.0;
    let (input, status, payload, code) = match result {
        Ok((input, outcome)) => {
            if !cli.json {
                print!("{}", outcome.human);
            }
            let (status, code) = match outcome.verdict {
                Verdict::Success => ("ok", 0),
                Verdict::Inconclusive => ("inconclusive", 2),
            };
            (input, status, outcome.payload, code)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            (
                Vec::new(),
                "error",
                serde_json::json!({ "error": format!("{e:#}") }),
                1,
            )
        }
    };
    if cli.json {
        let report = Report {
            schema_version: SCHEMA_VERSION,
            toolkit: Toolkit {
                name: "hnkit",
                version: env!("CARGO_PKG_VERSION"),
            },
            command: command_name(&cli.command),
            argv: &argv,
            input_sha256: hex::encode(Sha256::digest(&input)),
            status,
            payload,
            elapsed_ms,
        };
        println!(
            "{}",
            serde_json::to_string_pretty(&report).expect("report serialises")
        );
    }
    ExitCode::from(code)
}
