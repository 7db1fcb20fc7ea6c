//! `affsim`: decide similarity of affine maps, emit conjugators, invariant flats and class tables.

mod commands;
mod document;
mod error;

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use commands::Outcome;
use document::{parse_document, read_source};
use error::CliError;

#[derive(Parser)]
#[command(name = "affsim", version, about = "Similarity classification of affine maps over F_p and Q")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// tau of a map, the exponent n1 and whether a fixed point exists
    Tau {
        /// Map document, or - for standard input
        file: PathBuf,
    },
    /// Decide whether two maps are conjugate by an affine isomorphism
    Similar {
        f: PathBuf,
        g: PathBuf,
        /// Also emit a verified conjugator h(x) = T x + t
        #[arg(long)]
        witness: bool,
    },
    /// An invariant flat of least dimension
    Flat { file: PathBuf },
    /// Invariant factors of the matrix, as ascending coefficient lists
    Canon { file: PathBuf },
    /// Affine similarity classes over F_p in dimension n
    Classes {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(long)]
        p: u64,
        /// Only maps with invertible linear part
        #[arg(long)]
        invertible: bool,
        /// Cross-check against an exhaustive orbit search
        #[arg(long)]
        oracle: bool,
    },
}

fn load(path: &Path) -> Result<document::Parsed, CliError> {
    parse_document(&read_source(path)?)
}

fn run(cli: Cli) -> Result<Outcome, CliError> {
    match cli.command {
        Command::Tau { file } => commands::tau_cmd(&load(&file)?.into_map()?),
        Command::Similar { f, g, witness } => {
            let (f, g) = (load(&f)?.into_map()?, load(&g)?.into_map()?);
            commands::similar_cmd(&f, &g, witness)
        }
        Command::Flat { file } => commands::flat_cmd(&load(&file)?.into_map()?),
        Command::Canon { file } => commands::canon_cmd(&load(&file)?.matrix),
        Command::Classes { n, p, invertible, oracle } => commands::classes_cmd(n as usize, p, invertible, oracle),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(outcome) => {
            let text = serde_json::to_string_pretty(&outcome.report).expect("reports serialize");
            let _ = writeln!(std::io::stdout().lock(), "{text}");
            ExitCode::from(outcome.code)
        }
        Err(e) => {
            eprintln!("affsim: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
