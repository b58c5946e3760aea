mod commands;
mod input;
mod render;

use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};

use commands::{Format, Output};
use input::CliError;

/// Weight-graded intersection cohomology of toric varieties.
///
/// INPUT is `example:NAME` (see `toric-weights example`) or a JSON file holding
/// either a fan `{"rank", "rays", "maximal_cones"}` or a completion pair
/// `{"ambient": <fan>, "open_rays": [...]}`. Fan commands given a pair use the
/// ambient fan.
#[derive(Parser)]
#[command(name = "toric-weights", version)]
struct Cli {
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classification and f-vector.
    Info { input: String },
    /// Weight table of intersection cohomology (simplicial fans).
    Weights {
        input: String,
        /// Add the Frobenius eigenvalue p^l of each row.
        #[arg(long)]
        prime: Option<u64>,
    },
    /// Intersection cohomology Betti numbers.
    Betti { input: String },
    /// Virtual intersection Poincare polynomial from the cone recursion.
    Ip { input: String },
    /// Equivariant intersection Betti series.
    Eqseries {
        input: String,
        #[arg(long, default_value_t = 10)]
        cutoff: usize,
    },
    /// E2 and E3 pages of the Koszul spectral sequence.
    KoszulTables {
        input: String,
        /// Largest polynomial degree a shown; defaults to twice the rank.
        #[arg(long)]
        cutoff: Option<usize>,
    },
    /// E1 page of the weight spectral sequence of a smooth completion.
    Deligne { input: String },
    /// Print a catalogue entry as JSON, or list the catalogue.
    Example { name: Option<String> },
    /// Check a fan or completion pair file.
    Validate { input: String },
}

fn run(cli: Cli) -> Result<Output, CliError> {
    let f = cli.format;
    match cli.command {
        Command::Info { input } => commands::info(&input, f),
        Command::Weights { input, prime } => commands::weights(&input, prime, f),
        Command::Betti { input } => commands::betti(&input, f),
        Command::Ip { input } => commands::ip(&input, f),
        Command::Eqseries { input, cutoff } => commands::eqseries(&input, cutoff, f),
        Command::KoszulTables { input, cutoff } => commands::koszul_tables(&input, cutoff, f),
        Command::Deligne { input } => commands::deligne(&input, f),
        Command::Example { name } => commands::example(name.as_deref(), f),
        Command::Validate { input } => commands::validate(&input, f),
    }
}

fn report(e: &CliError) -> ExitCode {
    eprintln!("error: {e}");
    ExitCode::from(e.exit_code())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    match run(cli) {
        Ok(out) => {
            print!("{}", out.stdout);
            for w in &out.warnings {
                eprintln!("warning: {w}");
            }
            out.failure.as_ref().map_or(ExitCode::SUCCESS, report)
        }
        Err(e) => report(&e),
    }
}
