mod input;
mod render;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use rayon::prelude::*;
use tensoralg::catalog::serialize_report;
use tensoralg::pair::validate_action;
use tensoralg::verify::{verify_kunneth, verify_pair, Theorem, VerificationReport};
use tensoralg::NonabelianTensor;

use input::{check_dim, max_dim, resolve, resolve_pair, Failure, Input};

/// Nonabelian tensor products, exterior products and multipliers of pairs
/// of Lie algebras over the rationals.
///
/// Inputs are document paths or builtin selectors such as
/// `builtin:pair_center(heisenberg(1))`.
#[derive(Debug, Parser)]
#[command(name = "tensoralg", version)]
struct Cli {
    /// Emit structured JSON output.
    #[arg(long, global = true)]
    machine: bool,
    /// Write output to a file instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check structure constants, the ideal and the actions.
    Validate { input: String },
    /// Compute the tensor product and its derived objects.
    Tensor { pair: String },
    /// Run the verifier on one or more pairs.
    Verify {
        #[arg(required = true)]
        pairs: Vec<String>,
        /// Comma-separated theorem groups (default: all).
        #[arg(long, value_delimiter = ',', value_name = "LIST")]
        theorems: Vec<Theorem>,
    },
    /// Run the direct-sum identities on two pairs.
    Kunneth { a: String, b: String },
    /// List builtins and catalog pairs.
    Catalog,
}

/// Output text plus whether it reports a failure (exit 1).
struct Outcome {
    text: String,
    failed: bool,
}

fn run(cli: &Cli) -> Result<Outcome, Failure> {
    let machine = cli.machine;
    match &cli.command {
        Command::Validate { input } => validate(input, machine),
        Command::Tensor { pair: id } => {
            let pair = resolve_pair(id)?;
            check_dim(id, pair.l().dim(), max_dim()?)?;
            let t = NonabelianTensor::construct(&pair)?;
            let maps = t.derived_maps()?;
            Ok(Outcome {
                text: render::tensor(id, &pair, &t, &maps, machine),
                failed: false,
            })
        }
        Command::Verify { pairs, theorems } => {
            let cap = max_dim()?;
            let theorems = if theorems.is_empty() {
                Theorem::ALL.to_vec()
            } else {
                theorems.clone()
            };
            let resolved = pairs
                .iter()
                .map(|id| {
                    let p = resolve_pair(id)?;
                    check_dim(id, p.l().dim(), cap)?;
                    Ok((id.clone(), p))
                })
                .collect::<Result<Vec<_>, Failure>>()?;
            let reports = resolved
                .par_iter()
                .map(|(id, p)| verify_pair(id, p, &theorems))
                .collect::<Result<Vec<_>, _>>()?;
            let mut report = VerificationReport::default();
            for r in reports {
                report.merge(r);
            }
            Ok(Outcome {
                failed: report.has_failures(),
                text: serialize_report(&report, machine),
            })
        }
        Command::Kunneth { a, b } => {
            let cap = max_dim()?;
            let (pa, pb) = (resolve_pair(a)?, resolve_pair(b)?);
            check_dim(a, pa.l().dim(), cap)?;
            check_dim(b, pb.l().dim(), cap)?;
            check_dim(&format!("{a} (+) {b}"), pa.l().dim() + pb.l().dim(), cap)?;
            let report = verify_kunneth(a, &pa, b, &pb)?;
            Ok(Outcome {
                failed: report.has_failures(),
                text: serialize_report(&report, machine),
            })
        }
        Command::Catalog => Ok(Outcome {
            text: render::catalog(machine),
            failed: false,
        }),
    }
}

fn validate(input: &str, machine: bool) -> Result<Outcome, Failure> {
    let v = match resolve(input) {
        Ok(Input::Algebra(a)) => render::Validation {
            kind: "algebra",
            dim: a.dim(),
            ideal_dim: None,
            violation: a.validate_structure().err().map(|e| e.to_string()),
        },
        Ok(Input::Pair(p)) => {
            let violation = p
                .l()
                .validate_structure()
                .map_err(|e| e.to_string())
                .and_then(|_| validate_action(p.act_ln(), p.l(), p.n()).map_err(|e| e.to_string()))
                .and_then(|_| validate_action(p.act_nl(), p.n(), p.l()).map_err(|e| e.to_string()))
                .and_then(|_| p.validate_compatible().map_err(|e| e.to_string()))
                .err();
            render::Validation {
                kind: "pair",
                dim: p.l().dim(),
                ideal_dim: Some(p.n().dim()),
                violation,
            }
        }
        Err(Failure::Violation(message)) => render::Validation {
            kind: "input",
            dim: 0,
            ideal_dim: None,
            violation: Some(message),
        },
        Err(e) => return Err(e),
    };
    Ok(Outcome {
        failed: v.violation.is_some(),
        text: render::validation(input, &v, machine),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(outcome) => {
            let written = match &cli.out {
                Some(path) => std::fs::write(path, &outcome.text)
                    .map_err(|e| format!("cannot write {}: {e}", path.display())),
                None => std::io::stdout()
                    .write_all(outcome.text.as_bytes())
                    .map_err(|e| e.to_string()),
            };
            if let Err(e) = written {
                eprintln!("tensoralg: {e}");
                return ExitCode::from(2);
            }
            ExitCode::from(u8::from(outcome.failed))
        }
        Err(failure) => {
            eprintln!("tensoralg: {failure}");
            ExitCode::from(failure.exit_code())
        }
    }
}
