//! `berge`: classify slopes, certify surgery splittings, compare core
//! exchanges, sample genericity, and run oracle sweeps. Every run prints
//! one JSON report on stdout.

mod commands;
mod report;
mod specfile;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use berge_core::construct::SpecMode;
use berge_core::surface::TwistDirection;
use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use commands::Scope;
use report::{ReportDocument, Status};

#[derive(Parser)]
#[command(name = "berge", version, about = "Distance-3 certificates for genus-2 Heegaard splittings built by surgery")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Direction {
    Left,
    Right,
}

impl From<Direction> for TwistDirection {
    fn from(d: Direction) -> Self {
        match d {
            Direction::Left => TwistDirection::Left,
            Direction::Right => TwistDirection::Right,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Mode {
    Single,
    Pair,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a slope `p/q` (or `inf`).
    Classify {
        #[arg(allow_hyphen_values = true)]
        slope: String,
    },
    /// Build and certify the splitting described by a spec file.
    Certify {
        #[arg(long)]
        spec: PathBuf,
        /// Overrides the twist in the spec file.
        #[arg(long, value_enum)]
        direction: Option<Direction>,
    },
    /// Build, certify and compare both splittings of a pair-mode spec.
    Pair {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long, value_enum)]
        direction: Option<Direction>,
    },
    /// Draw random specs and report how many validate, certify and separate.
    Sample {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        height: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "pair")]
        mode: Mode,
    },
    /// Compare closed forms against the geometric oracles.
    Oracle {
        #[arg(long, value_enum)]
        scope: Scope,
        #[arg(long, default_value_t = 12, value_parser = clap::value_parser!(u64).range(1..))]
        height: u64,
    },
}

const COMMANDS: [&str; 5] = ["classify", "certify", "pair", "sample", "oracle"];

fn emit(doc: &ReportDocument, status: Status) -> ExitCode {
    for d in &doc.diagnostics {
        eprintln!("berge {}: {d}", doc.command);
    }
    let text = serde_json::to_string_pretty(doc).expect("reports serialize");
    let mut out = std::io::stdout().lock();
    // a closed pipe leaves nothing better to do than exit
    let _ = writeln!(out, "{text}");
    ExitCode::from(status as u8)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let args: Vec<String> = std::env::args().skip(1).collect();
            let command = args.iter().find(|a| COMMANDS.contains(&a.as_str())).cloned().unwrap_or_default();
            let message = e.kind().to_string();
            let detail = e.render().to_string();
            let doc = ReportDocument::new(
                &command,
                json!({ "args": args }),
                json!({ "error": "FlagError", "message": message }),
                vec![detail.trim_end().to_string()],
            );
            return emit(&doc, Status::InputError);
        }
    };
    let (doc, status) = match cli.command {
        Command::Classify { slope } => commands::classify_cmd(&slope),
        Command::Certify { spec, direction } => commands::certify_cmd(&spec, direction.map(Into::into)),
        Command::Pair { spec, direction } => commands::pair_cmd(&spec, direction.map(Into::into)),
        Command::Sample { n, height, seed, mode } => {
            let mode = match mode {
                Mode::Single => SpecMode::Single,
                Mode::Pair => SpecMode::Pair,
            };
            commands::sample_cmd(n, height, seed, mode)
        }
        Command::Oracle { scope, height } => commands::oracle_cmd(scope, height),
    };
    emit(&doc, status)
}
