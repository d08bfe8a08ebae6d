//! Batch front end: load a JSON scenario, run one command, print or write a
//! deterministic JSON report.
//!
//! Exit codes: 0 success, 1 suite failure, 2 config error, 3 undecided
//! classification regime.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use albertcalc::scenario::{parse_scenario, run};
use albertcalc::Error;

#[derive(Parser)]
#[command(
    name = "albertcalc",
    version,
    about = "Exact computations with Albert algebras, hermitian triples and quadratic-form invariants"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Path to the JSON scenario config.
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    /// Seed for all randomized searches.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Budget for randomized searches.
    #[arg(long, global = true, default_value_t = 1000)]
    budget: usize,

    /// Write the JSON report to this path instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Suppress the report on stdout (still written to --out if given).
    #[arg(long, global = true, default_value_t = false)]
    quiet: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Identity and composition suites on random samples.
    Verify,
    /// Invariants, transfer search and index classification.
    Index,
    /// Isotropy witness search on the hermitian triple.
    Witness,
    /// The psi dimension table over a finite field.
    Psi,
    /// The explicit k x K embedding and its frame.
    Embed,
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Verify => "verify",
            Command::Index => "index",
            Command::Witness => "witness",
            Command::Psi => "psi",
            Command::Embed => "embed",
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let config_path = match &cli.config {
        Some(p) => p.clone(),
        None => {
            eprintln!("error: --config PATH is required");
            return ExitCode::from(2);
        }
    };
    let text = match fs::read_to_string(&config_path) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", config_path.display());
            return ExitCode::from(2);
        }
    };
    let scenario = match parse_scenario(&text) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("config error: {e}");
            return ExitCode::from(2);
        }
    };
    match run(cli.command.name(), &scenario, cli.seed, cli.budget) {
        Ok(report) => {
            let rendered = serde_json::to_string_pretty(&report)
                .expect("report serialization cannot fail");
            if let Some(out) = &cli.out {
                if let Err(e) = fs::write(out, format!("{rendered}\n")) {
                    eprintln!("error: cannot write {}: {e}", out.display());
                    return ExitCode::from(1);
                }
            }
            if !cli.quiet {
                println!("{rendered}");
            }
            if report.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Error::ConfigParse(msg)) => {
            eprintln!("config error: {msg}");
            ExitCode::from(2)
        }
        Err(Error::UndecidedRegime) => {
            eprintln!("undecided regime: classification is not conclusive here");
            ExitCode::from(3)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
