mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use commands::{Outcome, RunError};

/// Exact checks, integral solvers and theorem verification for monoidal
/// Hom-Hopf algebras given by structure constants.
#[derive(Parser)]
#[command(name = "homhopf", version)]
struct Cli {
    /// Print the machine-readable report instead of the prose one.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run every structural check the file's blocks call for.
    Check { file: PathBuf },
    /// Decide existence of a total integral, or of a (total) quantum integral.
    Integral {
        file: PathBuf,
        #[arg(long)]
        quantum: bool,
        /// With --quantum: require γ(h₁)(h₂) = ε(h)1.
        #[arg(long)]
        total: bool,
    },
    /// Classify the canonical map A⊗_B A → A⊗H.
    Galois { file: PathBuf },
    /// Verify one theorem pointwise on the instance.
    Theorem {
        #[arg(long, value_enum)]
        id: TheoremId,
        file: PathBuf,
    },
    /// Built-in instances.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    List,
    /// Print an entry in the instance file format.
    Emit { name: String },
}

#[derive(Clone, Copy, ValueEnum)]
pub enum TheoremId {
    #[value(name = "4.3")]
    T43,
    #[value(name = "4.8")]
    T48,
    #[value(name = "5.6")]
    T56,
    #[value(name = "5.7")]
    T57,
    #[value(name = "5.8")]
    T58,
}

fn run(cli: &Cli) -> Result<Outcome, RunError> {
    match &cli.command {
        Command::Check { file } => commands::check(file),
        Command::Integral { file, quantum, total } => commands::integral(file, *quantum, *total),
        Command::Galois { file } => commands::galois(file),
        Command::Theorem { id, file } => commands::theorem(file, *id),
        Command::Catalog { action: CatalogAction::List } => Ok(commands::catalog_list()),
        Command::Catalog { action: CatalogAction::Emit { name } } => commands::catalog_emit(name),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(outcome) => {
            print!("{}", if cli.json { outcome.json() } else { outcome.prose() });
            ExitCode::from(outcome.exit_code())
        }
        Err(e) => {
            eprintln!("error: {e}");
            if let Some(r) = e.report() {
                eprint!("{r}");
            }
            ExitCode::from(e.exit_code())
        }
    }
}
