use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

mod commands;

/// Closedness classification of commutative semigroups.
#[derive(Debug, Parser)]
#[command(name = "semiclass", version)]
struct Cli {
    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check associativity and commutativity of a table file.
    Validate { file: PathBuf },
    /// Idempotents, natural order, H-classes, idempotent-power map and center.
    Analyze { file: PathBuf },
    /// Classify a descriptor expression, or a commutative table file.
    Classify {
        /// A descriptor expression such as "(product (taimanov) (null))", or a table file.
        input: String,
    },
    /// Rees quotient by an ideal, or quotient by the congruence generated by pairs.
    Quotient {
        file: PathBuf,
        /// Comma-separated ideal members, e.g. "0,1".
        #[arg(long, conflicts_with = "pairs", required_unless_present = "pairs")]
        ideal: Option<String>,
        /// Comma-separated generating pairs, e.g. "0-1,2-3".
        #[arg(long)]
        pairs: Option<String>,
    },
    /// The semigroup of nonempty subsets under elementwise products.
    Power { file: PathBuf },
    /// Enumerate commutative semigroups of a given order.
    Enumerate {
        #[arg(long)]
        order: usize,
        #[arg(long)]
        up_to_iso: bool,
        /// Write each table to its own file in this directory.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the structural property suite over every enumerated table.
    Suite {
        #[arg(long)]
        max_order: usize,
        /// Only one representative per isomorphism class.
        #[arg(long)]
        up_to_iso: bool,
        /// Directory for counterexample tables.
        #[arg(long, default_value = "suite-failures")]
        out: PathBuf,
    },
}

/// Outcome of a command: text for stdout and the exit status.
pub struct Outcome {
    pub output: String,
    pub findings: bool,
}

pub enum Failure {
    Usage(String),
}

impl From<semiclass_core::Error> for Failure {
    fn from(e: semiclass_core::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn run(cli: Cli) -> Result<Outcome, Failure> {
    let json = cli.json;
    match cli.command {
        Command::Validate { file } => commands::validate(&file, json),
        Command::Analyze { file } => commands::analyze(&file, json),
        Command::Classify { input } => commands::classify(&input, Path::new("."), json),
        Command::Quotient { file, ideal, pairs } => {
            commands::quotient(&file, ideal.as_deref(), pairs.as_deref(), json)
        }
        Command::Power { file } => commands::power(&file, json),
        Command::Enumerate {
            order,
            up_to_iso,
            out,
        } => commands::enumerate(order, up_to_iso, out.as_deref(), json),
        Command::Suite {
            max_order,
            up_to_iso,
            out,
        } => commands::suite(max_order, up_to_iso, &out, json),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(outcome) => {
            // a closed pipe downstream is not an error for us
            let _ = std::io::stdout()
                .lock()
                .write_all(outcome.output.as_bytes());
            if outcome.findings {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(Failure::Usage(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
