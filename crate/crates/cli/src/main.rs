use std::path::{Path, PathBuf};
use std::process::ExitCode;

use artin_braids::artin::artin_auto;
use artin_braids::braid::{garside_normal_form, rewrite_pure, BraidWord};
use artin_braids::cocycle::{
    cohomology_parameters, evaluate_conditions, similar_braid_cocycles, BraidOneCocycle,
    CocycleFile, CohomologyGroup, Family, OneCocycle, PureTwoCocycle,
};
use artin_braids::freegroup::FreeWord;
use artin_braids::{Angle, Error};
use artin_braids_cli::verify::{run_suite, Suite};
use artin_braids_cli::{exit_code, EXIT_CHECK_FAILED, EXIT_MISSING, EXIT_PARSE, REPORT_SCHEMA};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

#[derive(Parser)]
#[command(
    name = "artin-braids",
    version,
    about = "Braid groups, Artin's representation and cocycle deformations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Group {
    Bn,
    Fn,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Bn,
    Pn,
    An,
    Mackey,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    All,
    Braid,
    Cocycle,
    Infinite,
}

#[derive(Clone, Copy, ValueEnum)]
enum CohomologyArg {
    Bn,
    Pn,
    An,
    PnH2,
}

#[derive(Subcommand)]
enum Command {
    /// Garside normal form of a braid, or the reduced form of a free word.
    Normalize {
        word: String,
        #[arg(long, value_enum, default_value = "bn")]
        group: Group,
        #[arg(long)]
        n: usize,
    },
    /// Decide equality of two words; prints `true` or `false`.
    Equal {
        left: String,
        right: String,
        #[arg(long, value_enum, default_value = "bn")]
        group: Group,
        #[arg(long)]
        n: usize,
    },
    /// Apply Artin's automorphism of a braid to a free word, or print all
    /// generator images when no word is given.
    Act {
        braid: String,
        word: Option<String>,
        #[arg(long)]
        n: usize,
    },
    /// Rewrite a pure braid in the generators a(i,j).
    RewritePure {
        braid: String,
        #[arg(long)]
        n: usize,
    },
    /// Build a braid cocycle table from (mu1, mu2, c_1..c_{n-1}).
    CocycleBuild {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        mu1: String,
        #[arg(long, default_value = "0")]
        mu2: String,
        /// Comma-separated values phi(s_i, x_i); zeros when omitted.
        #[arg(long)]
        diag: Option<String>,
    },
    /// Validate a cocycle file and report its invariants; with `--against`,
    /// also decide similarity.
    CocycleClassify {
        #[arg(long)]
        cocycle: PathBuf,
        #[arg(long)]
        against: Option<PathBuf>,
    },
    /// Verdict on simplicity and uniqueness of trace for a cocycle file.
    Verdict {
        #[arg(long)]
        cocycle: PathBuf,
        #[arg(long, value_enum)]
        family: FamilyArg,
    },
    /// Run the identity-check suite and print a JSON report.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: SuiteArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 5)]
        max_n: usize,
        /// Include per-check wall-clock times (reports are then not
        /// byte-identical across runs).
        #[arg(long)]
        timings: bool,
    },
    /// Shape of the cohomology group parametrizing the cocycles.
    Cohomology {
        #[arg(long, value_enum)]
        group: CohomologyArg,
        #[arg(long)]
        n: usize,
    },
    /// Print the JSON schema of the verification report.
    Schema,
}

enum Failure {
    Lib(Error),
    Io(PathBuf, std::io::Error),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

type Outcome = Result<(), Failure>;

fn read_cocycle(path: &Path) -> Result<CocycleFile, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Io(path.to_path_buf(), e))?;
    Ok(CocycleFile::from_json(&text)?)
}

/// Parses and validates; invalid braid tables are rejected as bad input.
fn load_cocycle(file: &CocycleFile) -> Result<OneCocycle, Failure> {
    let cocycle = file.cocycle()?;
    if let OneCocycle::Braid(phi) = &cocycle {
        let report = phi.validate();
        if let Some(v) = report.violations.first() {
            return Err(Error::Shape(format!("not a cocycle: {}", v.detail)).into());
        }
    }
    Ok(cocycle)
}

fn print_json(value: &impl serde::Serialize) {
    println!("{}", serde_json::to_string(value).expect("serializable"));
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Normalize { word, group, n } => match group {
            Group::Bn => println!("{}", garside_normal_form(&BraidWord::parse(n, &word)?)),
            Group::Fn => println!("{}", FreeWord::parse(n, &word)?),
        },
        Command::Equal {
            left,
            right,
            group,
            n,
        } => {
            let equal = match group {
                Group::Bn => BraidWord::parse(n, &left)?.equal(&BraidWord::parse(n, &right)?)?,
                Group::Fn => FreeWord::parse(n, &left)? == FreeWord::parse(n, &right)?,
            };
            println!("{equal}");
        }
        Command::Act { braid, word, n } => {
            let alpha = artin_auto(&BraidWord::parse(n, &braid)?);
            match word {
                Some(w) => println!("{}", alpha.apply(&FreeWord::parse(n, &w)?)?),
                None => println!("{alpha}"),
            }
        }
        Command::RewritePure { braid, n } => {
            println!("{}", rewrite_pure(&BraidWord::parse(n, &braid)?)?);
        }
        Command::CocycleBuild { n, mu1, mu2, diag } => {
            let diag: Vec<Angle> = match diag {
                Some(d) => d.split(',').map(str::parse).collect::<Result<_, _>>()?,
                None => vec![Angle::zero(); n.saturating_sub(1)],
            };
            let phi = BraidOneCocycle::build(n, &mu1.parse()?, &mu2.parse()?, &diag)?;
            println!(
                "{}",
                CocycleFile::from_cocycle(&OneCocycle::Braid(phi)).to_json()
            );
        }
        Command::CocycleClassify { cocycle, against } => {
            let cocycle = read_cocycle(&cocycle)?.cocycle()?;
            let mut out = match &cocycle {
                OneCocycle::Braid(phi) => {
                    let report = phi.validate();
                    let p = phi.mu_params();
                    json!({
                        "flavor": "braid",
                        "n": phi.strands(),
                        "valid": report.is_valid(),
                        "violations": report.violations.iter().map(|v| json!({
                            "family": format!("{:?}", v.family),
                            "cells": v.cells,
                            "detail": v.detail,
                        })).collect::<Vec<_>>(),
                        "mu1": p.mu1,
                        "mu2": p.mu2,
                        "mu_phi": phi.mu_phi(),
                        "mu_phi_torsion": phi.mu_phi().is_torsion(),
                    })
                }
                OneCocycle::Pure(phi) => {
                    let nu: Vec<Angle> = (1..=phi.strands()).map(|k| phi.nu(k)).collect();
                    json!({
                        "flavor": "pure",
                        "n": phi.strands(),
                        "valid": true,
                        "violations": [],
                        "nu": nu,
                    })
                }
            };
            if let Some(other) = against {
                let (OneCocycle::Braid(a), OneCocycle::Braid(b)) =
                    (&cocycle, &read_cocycle(&other)?.cocycle()?)
                else {
                    return Err(
                        Error::Shape("similarity is decided for braid cocycles".into()).into(),
                    );
                };
                let witness = similar_braid_cocycles(a, b)?;
                out["similar"] = json!(witness.is_some());
                out["witness"] = json!(witness.map(|f| f.values().to_vec()));
            }
            print_json(&out);
            if out["valid"] == json!(false) {
                return Err(Failure::Check(
                    "table violates the cocycle relations".into(),
                ));
            }
        }
        Command::Verdict { cocycle, family } => {
            let file = read_cocycle(&cocycle)?;
            let phi = load_cocycle(&file)?;
            let omega = file.omega()?;
            let family = match family {
                FamilyArg::Bn => Family::Bn,
                FamilyArg::Pn => Family::Pn,
                FamilyArg::An => Family::An,
                FamilyArg::Mackey => Family::MackeyPn1,
            };
            let verdict = evaluate_conditions(
                family,
                &phi,
                omega.as_ref().map(|o| o as &dyn PureTwoCocycle),
            )?;
            print_json(&verdict);
        }
        Command::Verify {
            suite,
            seed,
            max_n,
            timings,
        } => {
            let suite = match suite {
                SuiteArg::All => Suite::All,
                SuiteArg::Braid => Suite::Braid,
                SuiteArg::Cocycle => Suite::Cocycle,
                SuiteArg::Infinite => Suite::Infinite,
            };
            let report = run_suite(suite, seed, max_n, timings);
            println!(
                "{}",
                serde_json::to_string_pretty(&report).expect("serializable")
            );
            if !report.all_passed() {
                return Err(Failure::Check(format!(
                    "{} check(s) failed",
                    report.summary.failed
                )));
            }
        }
        Command::Cohomology { group, n } => {
            let group = match group {
                CohomologyArg::Bn => CohomologyGroup::Bn,
                CohomologyArg::Pn => CohomologyGroup::Pn,
                CohomologyArg::An => CohomologyGroup::An,
                CohomologyArg::PnH2 => CohomologyGroup::PnH2,
            };
            print_json(&cohomology_parameters(group, n));
        }
        Command::Schema => print!("{REPORT_SCHEMA}"),
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_PARSE as u8 } else { 0 });
        }
    };
    let code = match run(cli.command) {
        Ok(()) => 0,
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
        Err(Failure::Io(path, e)) => {
            eprintln!("error: cannot read {}: {e}", path.display());
            EXIT_MISSING
        }
        Err(Failure::Check(msg)) => {
            eprintln!("check failed: {msg}");
            EXIT_CHECK_FAILED
        }
    };
    ExitCode::from(code as u8)
}
