//! `steiner`: classify presentations and complexes, enumerate their
//! realizations, and export catalog entries.
//!
//! Exit codes: 0 success, 1 usage, 2 unreadable or malformed input,
//! 3 validation failure, 4 negative verdict, 5 enumeration cap, torsion or
//! overflow.

mod commands;
mod error;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use error::{CliError, EXIT_USAGE};

#[derive(Parser, Debug)]
#[command(name = "steiner", version, about = "Strong Steiner classification of polygraphs and directed complexes")]
pub struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone, Copy)]
pub struct CapArgs {
    /// Stop once more than this many cells have been produced.
    #[arg(long, default_value_t = 10_000)]
    pub max_cells: usize,
    /// Stop once a table coefficient exceeds this bound.
    #[arg(long, default_value_t = 8)]
    pub max_coeff: i64,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Classify a document; exits 0 iff it is strong Steiner.
    Check { file: PathBuf },
    /// Count the cells of the realization in each dimension.
    Enumerate {
        file: PathBuf,
        /// Highest dimension to enumerate; defaults to the top degree.
        #[arg(long)]
        max_dim: Option<usize>,
        #[command(flatten)]
        caps: CapArgs,
    },
    /// Print the linearization of a presentation, or of the enumerated
    /// realization of a complex.
    Lambda {
        file: PathBuf,
        #[command(flatten)]
        caps: CapArgs,
    },
    /// Write the generating relation of the basis preorder as DOT.
    Preorder {
        file: PathBuf,
        /// Output file; standard output if absent.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Enumerate the realization, linearize it, and compare with the input.
    Roundtrip {
        file: PathBuf,
        #[command(flatten)]
        caps: CapArgs,
    },
    /// Export a catalog entry, e.g. `catalog oriental 2 --out o2.json`.
    Catalog {
        name: String,
        #[arg(allow_negative_numbers = true)]
        params: Vec<i64>,
        /// Output file; standard output if absent.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Export the complex even when the entry has a presentation.
        #[arg(long)]
        complex: bool,
    },
    /// Enumerate valid tables of one dimension by exhaustive search.
    Oracle {
        file: PathBuf,
        #[arg(long)]
        dim: usize,
        /// Largest coefficient considered.
        #[arg(long, default_value_t = 3)]
        cap: i64,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(EXIT_USAGE) } else { ExitCode::SUCCESS };
        }
    };
    match commands::run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => report(&cli, &e),
    }
}

fn report(cli: &Cli, e: &CliError) -> ExitCode {
    if cli.json {
        let v = serde_json::json!({"error": e.to_string(), "exit_code": e.exit_code()});
        println!("{}", serde_json::to_string_pretty(&v).expect("values serialize"));
    }
    eprintln!("error: {e}");
    ExitCode::from(e.exit_code())
}
