//! Command-line interface: verification suites, projector computation, and
//! q-character series, all emitted as deterministic JSON.

use clap::{Parser, Subcommand, ValueEnum};
use hecke_fusion::qchar::{formal_qcharacter, hc_image, kappa_from_json, wakimoto_eigenvalue};
use hecke_fusion::rmatrix::{fused_idempotent, hecke_action};
use hecke_fusion::seminormal::matrix_unit_diag;
use hecke_fusion::suites::{self, SuiteConfig, SuiteName, MAX_RANK, MAX_TENSOR};
use hecke_fusion::young::{standard_tableaux_of, Partition};
use hecke_fusion::{Error, Result};
use serde_json::{json, Value};
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

#[derive(Parser)]
#[command(
    name = "hecke-fusion",
    version,
    about = "Exact verification and computation for Hecke-algebra fusion and q-characters"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run verification suites and emit a JSON report.
    Verify {
        /// Comma-separated suite names; omit to run all suites.
        #[arg(long, value_delimiter = ',')]
        suites: Vec<String>,
        /// Largest Hecke-algebra rank exercised (at most 6).
        #[arg(long, default_value_t = 3)]
        max_m: u32,
        /// Largest tensor-factor dimension exercised (at most 4).
        #[arg(long, default_value_t = 2)]
        max_n: u32,
        /// Series truncation order for order-dependent suites.
        #[arg(long, default_value_t = 6)]
        trunc: u32,
        /// Seed for the randomized spot checks, echoed in the report.
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Output format; only "json" is supported.
        #[arg(long, default_value = "json")]
        format: String,
        /// Include per-case wall time (makes reports non-reproducible).
        #[arg(long)]
        timings: bool,
    },
    /// Print a primitive idempotent as an operator on tensor space.
    Idempotent {
        /// Partition, e.g. "2,1".
        #[arg(long)]
        partition: String,
        /// Index of the standard tableau, 0-based in reading-word order.
        #[arg(long, default_value_t = 0)]
        tableau: usize,
        /// Dimension of each tensor factor.
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value_t = Method::Fusion)]
        method: Method,
        /// Write the result here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compute a q-character: formal monomial sum, series image, or
    /// eigenvalue under a supplied boson specialization.
    Qchar {
        /// Partition, e.g. "2,1".
        #[arg(long)]
        partition: String,
        /// Number of series rows (tensor-factor dimension).
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum)]
        mode: Mode,
        /// Series truncation order.
        #[arg(long, default_value_t = 6)]
        trunc: u32,
        /// JSON file with "kappa_plus" (list of coefficient arrays, one per
        /// row, coefficient r multiplying z^r) and "kappa_minus" (one array,
        /// coefficient r multiplying z^-r). Required in wakimoto mode.
        #[arg(long)]
        kappa: Option<PathBuf>,
        /// Write the result here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    /// Sequential evaluation of the spectral product.
    Fusion,
    /// Jucys-Murphy product recurrence mapped onto tensor space.
    Recurrence,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Formal,
    Hc,
    Wakimoto,
}

fn main() -> ExitCode {
    match dispatch(Cli::parse()) {
        Ok(failures) => {
            if failures == 0 {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

/// Returns the number of failed verification cases (0 for the computation
/// commands, which either succeed or error out).
fn dispatch(cli: Cli) -> Result<usize> {
    match cli.cmd {
        Cmd::Verify {
            suites,
            max_m,
            max_n,
            trunc,
            seed,
            out,
            format,
            timings,
        } => {
            check_format(&format)?;
            let names: Vec<SuiteName> = suites
                .iter()
                .map(|s| SuiteName::from_str(s))
                .collect::<Result<_>>()?;
            let config = SuiteConfig {
                suites: names,
                max_m,
                max_n,
                trunc,
                seed,
            };
            let report = suites::run(&config)?;
            emit(&report.to_json(timings), out.as_deref())?;
            Ok(report.failed())
        }
        Cmd::Idempotent {
            partition,
            tableau,
            n,
            method,
            out,
        } => {
            let lam = Partition::from_str(&partition)?;
            check_limits(lam.size(), n)?;
            let tabs = standard_tableaux_of(&lam);
            if tableau >= tabs.len() {
                return Err(Error::LimitExceeded {
                    what: format!("tableau index for shape {lam}"),
                    got: tableau as u32,
                    max: tabs.len() as u32 - 1,
                });
            }
            let t = &tabs[tableau];
            let op = match method {
                Method::Fusion => fused_idempotent(t, n)?,
                Method::Recurrence => hecke_action(&matrix_unit_diag(t), n),
            };
            let mut doc = op.to_json();
            if lam.rows() > n {
                doc["note"] = json!(format!(
                    "shape {lam} has more than {n} rows; the projector is zero"
                ));
            }
            emit(&doc, out.as_deref())?;
            Ok(0)
        }
        Cmd::Qchar {
            partition,
            n,
            mode,
            trunc,
            kappa,
            out,
        } => {
            let lam = Partition::from_str(&partition)?;
            check_limits(lam.size(), n)?;
            let doc = match mode {
                Mode::Formal => formal_qcharacter(&lam, n).to_json(),
                Mode::Hc => hc_image(&lam, n, trunc).to_json(),
                Mode::Wakimoto => {
                    let path = kappa.ok_or_else(|| {
                        Error::Parse("wakimoto mode requires --kappa <file>".into())
                    })?;
                    let (plus, minus) = read_kappa(&path, n)?;
                    wakimoto_eigenvalue(&lam, &plus, &minus, trunc)?.to_json()
                }
            };
            emit(&doc, out.as_deref())?;
            Ok(0)
        }
    }
}

fn check_format(format: &str) -> Result<()> {
    if format == "json" {
        Ok(())
    } else {
        Err(Error::Parse(format!(
            "unsupported output format {format:?}; only \"json\" is available"
        )))
    }
}

fn check_limits(m: u32, n: u32) -> Result<()> {
    if m > MAX_RANK {
        return Err(Error::LimitExceeded {
            what: "partition size".into(),
            got: m,
            max: MAX_RANK,
        });
    }
    if n == 0 || n > MAX_TENSOR {
        return Err(Error::LimitExceeded {
            what: "tensor-factor dimension".into(),
            got: n,
            max: MAX_TENSOR,
        });
    }
    Ok(())
}

fn read_kappa(
    path: &std::path::Path,
    n: u32,
) -> Result<(
    Vec<hecke_fusion::qchar::Series<hecke_fusion::ratfunc::RatFunc>>,
    hecke_fusion::qchar::Series<hecke_fusion::ratfunc::RatFunc>,
)> {
    let text = std::fs::read_to_string(path)?;
    let doc: Value = serde_json::from_str(&text)?;
    kappa_from_json(&doc, n)
}

fn emit(doc: &Value, out: Option<&std::path::Path>) -> Result<()> {
    let text = serde_json::to_string_pretty(doc).expect("serializable document");
    match out {
        Some(path) => std::fs::write(path, text + "\n")?,
        None => println!("{text}"),
    }
    Ok(())
}
