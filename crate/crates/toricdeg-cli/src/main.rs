use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use toricdeg_cli::commands::{self, parse_order_flag};
use toricdeg_cli::problem::{parse_tiebreak_flag, ProblemFile};
use toricdeg_cli::report::CommandOutput;
use toricdeg_cli::{accept, CliError, CliResult};

/// Exact computations around toric ideals, their weight degenerations, and
/// the semigroups behind them.
#[derive(Parser)]
#[command(name = "toricdeg", version)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Reduced Groebner basis of the toric ideal of a configuration
    Toric {
        file: PathBuf,
        /// "canonical" (default) or "weight" (the file's weight vector)
        #[arg(long)]
        order: Option<String>,
        /// "lex" or "degrevlex"
        #[arg(long)]
        tiebreak: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Degenerate by the file's weights and verify against the extended
    /// configuration
    Degenerate {
        file: PathBuf,
        #[arg(long)]
        tiebreak: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Semigroup invariants: betti, saturation, approx, or unique
    Invariants {
        file: PathBuf,
        #[arg(long)]
        which: String,
        #[arg(long)]
        json: bool,
    },
    /// Moebius function values at a point (and height, for degenerations)
    Moebius {
        file: PathBuf,
        /// comma-separated coordinates
        #[arg(long)]
        z: String,
        /// height in the degenerated semigroup
        #[arg(long)]
        lambda: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Run the acceptance suite against the corpus
    Accept {
        #[arg(long, default_value = concat!(env!("CARGO_MANIFEST_DIR"), "/corpus"))]
        corpus: PathBuf,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// cap on generator count for random instances
        #[arg(long, default_value_t = 4)]
        max_n: usize,
        #[arg(long)]
        json: bool,
    },
}

fn emit(out: CommandOutput, json: bool) -> bool {
    if json {
        print!("{}", out.report.to_json());
    } else {
        print!("{}", out.text);
    }
    out.failed
}

fn run(cli: Cli) -> CliResult<bool> {
    match cli.command {
        Cmd::Toric {
            file,
            order,
            tiebreak,
            json,
        } => {
            let file = ProblemFile::load(&file)?;
            let order = parse_order_flag(order.as_deref())?;
            let tiebreak = parse_tiebreak_flag(tiebreak.as_deref(), &file)?;
            Ok(emit(commands::cmd_toric(&file, order, tiebreak)?, json))
        }
        Cmd::Degenerate {
            file,
            tiebreak,
            json,
        } => {
            let file = ProblemFile::load(&file)?;
            let tiebreak = parse_tiebreak_flag(tiebreak.as_deref(), &file)?;
            Ok(emit(commands::cmd_degenerate(&file, tiebreak)?, json))
        }
        Cmd::Invariants { file, which, json } => {
            let file = ProblemFile::load(&file)?;
            Ok(emit(commands::cmd_invariants(&file, &which)?, json))
        }
        Cmd::Moebius {
            file,
            z,
            lambda,
            json,
        } => {
            let file = ProblemFile::load(&file)?;
            Ok(emit(commands::cmd_moebius(&file, &z, lambda.as_deref())?, json))
        }
        Cmd::Accept {
            corpus,
            seed,
            max_n,
            json,
        } => {
            let outcomes = accept::run_all(Some(&corpus), seed, max_n)?;
            let mut failed = false;
            for o in &outcomes {
                failed |= !o.passed;
                if !json {
                    println!(
                        "criterion {:<12} {:<48} {}",
                        o.label,
                        o.name,
                        if o.passed { "pass" } else { "FAIL" }
                    );
                    if !o.passed {
                        println!("    {}", o.detail);
                    }
                }
            }
            if json {
                let value: Vec<serde_json::Value> = outcomes
                    .iter()
                    .map(|o| {
                        serde_json::json!({
                            "criterion": o.label,
                            "name": o.name,
                            "passed": o.passed,
                            "detail": o.detail,
                        })
                    })
                    .collect();
                println!("{}", serde_json::to_string_pretty(&value).expect("plain data"));
            } else {
                println!(
                    "{} of {} checks passed",
                    outcomes.iter().filter(|o| o.passed).count(),
                    outcomes.len()
                );
            }
            Ok(failed)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => ExitCode::from(1),
        Err(CliError::Failure(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
        Err(CliError::Usage(m)) => {
            eprintln!("usage error: {m}");
            ExitCode::from(2)
        }
    }
}
