//! The `msetspace` binary.
//!
//! ```text
//! msetspace render <FILE>                  reprint a document in canonical form
//! msetspace eval <FILE> <EXPR>...          evaluate expressions against a document
//! msetspace audit [--max-universe N] [--max-bound N] [--trials N] [--seed N]
//!                 [--claim ID]... [--strict] [--kv]
//! ```
//!
//! Exit codes: 0 on success, 1 for usage and parse errors, 2 for evaluation
//! errors, 3 when `audit --strict` finds a violated claim.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use msetspace::audit::{self, AuditBounds, ClaimStatus};
use msetspace_cli::{document::Environment, expr};

#[derive(Parser)]
#[command(name = "msetspace", version, about = "Bounded multiset spaces, their mappings, and a claim audit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a document and reprint it in canonical form.
    Render {
        /// Document to read.
        file: PathBuf,
    },
    /// Evaluate expressions against the declarations of a document.
    Eval {
        /// Document to read.
        file: PathBuf,
        /// Expressions over the declared names, evaluated in order.
        #[arg(required = true)]
        expressions: Vec<String>,
    },
    /// Check every algebraic claim exhaustively at small bounds, then randomly.
    Audit {
        /// Largest universe size to enumerate exhaustively.
        #[arg(long, default_value_t = 3)]
        max_universe: u32,
        /// Largest count bound to enumerate exhaustively.
        #[arg(long, default_value_t = 3)]
        max_bound: u32,
        /// Random instances per claim after the exhaustive sweep.
        #[arg(long, default_value_t = 1000)]
        trials: u32,
        /// Seed for the random phase.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Check only this claim (repeatable); the full catalog otherwise.
        #[arg(long = "claim", value_name = "ID")]
        claims: Vec<String>,
        /// Exit with status 3 if any checked claim is violated.
        #[arg(long)]
        strict: bool,
        /// Print the report as key=value blocks instead of aligned lines.
        #[arg(long)]
        kv: bool,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            use clap::error::ErrorKind;
            let rendered = err.render();
            return match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    print!("{rendered}");
                    ExitCode::SUCCESS
                }
                _ => {
                    eprint!("{rendered}");
                    ExitCode::from(1)
                }
            };
        }
    };
    ExitCode::from(run(cli))
}

fn run(cli: Cli) -> u8 {
    match cli.command {
        Command::Render { file } => {
            let env = match load(&file) {
                Ok(env) => env,
                Err(code) => return code,
            };
            print!("{}", env.render());
            0
        }
        Command::Eval { file, expressions } => {
            let env = match load(&file) {
                Ok(env) => env,
                Err(code) => return code,
            };
            for text in &expressions {
                match expr::evaluate(&env, text) {
                    Ok(value) => println!("{value}"),
                    Err(err) => {
                        eprintln!("error evaluating '{text}': {err}");
                        return 2;
                    }
                }
            }
            0
        }
        Command::Audit { max_universe, max_bound, trials, seed, claims, strict, kv } => {
            let bounds =
                AuditBounds { max_universe, max_bound, random_trials: trials, seed };
            let report = if claims.is_empty() {
                audit::run_all(&bounds)
            } else {
                let ids: Vec<&str> = claims.iter().map(String::as_str).collect();
                match audit::run_selected(&ids, &bounds) {
                    Ok(report) => report,
                    Err(err) => {
                        eprintln!("error: {err}");
                        return 1;
                    }
                }
            };
            print!("{}", if kv { report.render_kv() } else { report.render() });
            if strict && report.count(ClaimStatus::Violated) > 0 {
                3
            } else {
                0
            }
        }
    }
}

fn load(file: &Path) -> Result<Environment, u8> {
    let text = match std::fs::read_to_string(file) {
        Ok(text) => text,
        Err(err) => {
            eprintln!("error: cannot read {}: {err}", file.display());
            return Err(1);
        }
    };
    Environment::parse(&text).map_err(|err| {
        eprintln!("{}:{err}", file.display());
        1
    })
}
