use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use cvwitness::cli::{self, CliError, Overrides};

#[derive(Parser)]
#[command(name = "cvwitness", version, about = "Entanglement witnesses for two-mode bosonic states")]
struct Args {
    /// Override the Fock cutoff of both modes.
    #[arg(long, num_args = 2, value_names = ["D_A", "D_B"], global = true)]
    cutoff: Option<Vec<usize>>,
    /// Override the truncation tolerance.
    #[arg(long, global = true)]
    tol: Option<f64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate every witness on the configured state and print JSON.
    Evaluate { config: PathBuf },
    /// Sweep the Bell-type family and write a CSV table.
    Sweep { config: PathBuf, output: PathBuf },
    /// Evaluate a moment expression on the configured state.
    Expr { expression: String, config: PathBuf },
}

fn run(args: Args) -> Result<(), CliError> {
    let overrides = Overrides {
        cutoff: args.cutoff.map(|c| (c[0], c[1])),
        trunc_tol: args.tol,
    };
    match args.command {
        Command::Evaluate { config } => println!("{}", cli::cmd_evaluate(&config, &overrides)?),
        Command::Sweep { config, output } => cli::cmd_sweep(&config, &output, &overrides)?,
        Command::Expr { expression, config } => println!("{}", cli::cmd_expr(&expression, &config, &overrides)?),
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Args::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("{}", e.render());
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
