use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use sfcontact::decide::Question;
use sfcontact_cli::commands::{self, read_input, CliError, Outcome};

/// Transverse contact structures and foliations on Seifert fibered spaces.
///
/// Seifert expressions are written `{b; g; (α₁,β₁),…}` or as JSON
/// `{"b": …, "g": …, "fibers": [[α,β],…]}`; `γ` lists as `1/2,1/3,1/5`.
/// Pass `-` to read the argument from standard input.
#[derive(Parser)]
#[command(name = "sfcontact", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Normalized form, e, e₀, Γ and χ of M and of −M.
    Invariants { expr: String },
    /// Decide whether a transverse structure exists.
    Decide {
        #[arg(value_enum)]
        question: Kind,
        expr: String,
    },
    /// Realizability of a γ list, with a certificate when one exists.
    Realizable { gammas: String },
    /// Star-shaped plumbing bounded by M.
    Plumbing {
        expr: String,
        /// Also write the graph in DOT format to this file.
        #[arg(long)]
        dot: Option<PathBuf>,
        /// Plumb the orientable double cover of a non-orientable base.
        #[arg(long)]
        double_cover: bool,
    },
    /// Blow-down route verdict and the trace of the top surface.
    BlowdownTrace { gammas: String },
    /// Cross-check the decision routes over a finite family.
    Sweep {
        /// Number of fibers.
        #[arg(long)]
        r: usize,
        /// Largest denominator of γ, and largest multiplicity α.
        #[arg(long)]
        max_denominator: i64,
        /// Worker threads.
        #[arg(long, env = "SFCONTACT_JOBS")]
        jobs: Option<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Contact,
    Foliation,
    InvariantContact,
}

impl From<Kind> for Question {
    fn from(k: Kind) -> Self {
        match k {
            Kind::Contact => Question::Contact,
            Kind::Foliation => Question::Foliation,
            Kind::InvariantContact => Question::InvariantContact,
        }
    }
}

fn run(cli: Cli) -> Result<Outcome, CliError> {
    match cli.command {
        Command::Invariants { expr } => commands::invariants(&read_input(&expr)?),
        Command::Decide { question, expr } => commands::decide(question.into(), &read_input(&expr)?),
        Command::Realizable { gammas } => commands::realizable(&read_input(&gammas)?),
        Command::Plumbing { expr, dot, double_cover } => {
            let (outcome, graph) = commands::plumbing(&read_input(&expr)?, double_cover)?;
            if let Some(path) = dot {
                std::fs::write(&path, graph)
                    .map_err(|e| CliError::Io(format!("writing {}: {e}", path.display())))?;
            }
            Ok(outcome)
        }
        Command::BlowdownTrace { gammas } => commands::blowdown_trace(&read_input(&gammas)?),
        Command::Sweep { r, max_denominator, jobs } => commands::sweep(r, max_denominator, jobs),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(outcome) => {
            print!("{}", outcome.render());
            ExitCode::from(outcome.code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
