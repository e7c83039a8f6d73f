use std::process::ExitCode;

use apolar::commands::{self, AnalyzeArgs, FamilyArgs, RayArgs, Render, TangentArgs};
use apolar::{repro, CliError, EXIT_MISMATCH, EXIT_USAGE};
use clap::{Parser, Subcommand};

/// Inverse systems and apolar algebras of polynomials.
#[derive(Parser, Debug)]
#[command(name = "apolar", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Hilbert function, symmetric decomposition, standard form and tangent space of Apolar(f).
    Analyze(AnalyzeArgs),
    /// Ray sum g = Σ x_{n+1}^{kd} ∂^k ⌟ f and its annihilator identity.
    Raysum(RayArgs),
    /// Lower or upper ray family of a ray sum, with a flatness probe and fiber table.
    Family(FamilyArgs),
    /// The containment I ∩ J² ∩ (I² : ∂) ⊆ I·J with J = I : ∂.
    TangentPreserve(TangentArgs),
    /// Recompute the reference examples and compare.
    Repro(ReproArgs),
}

#[derive(clap::Args, Debug)]
struct ReproArgs {
    /// Suites to run, or `all`.
    #[arg(value_name = "SUITE")]
    suites: Vec<String>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    json: bool,
    #[arg(long)]
    timings: bool,
}

fn emit<R: Render>(report: Result<R, CliError>, json: bool) -> ExitCode {
    match report {
        Ok(r) => {
            if json {
                println!("{}", serde_json::to_string_pretty(&r).expect("reports serialize"));
            } else {
                print!("{}", r.text());
            }
            if r.verified() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_MISMATCH)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = apolar::apply_budget_from_env() {
        eprintln!("error: {e}");
        return ExitCode::from(EXIT_USAGE);
    }
    match cli.command {
        Command::Analyze(a) => emit(commands::analyze(&a), a.common.json),
        Command::Raysum(a) => emit(commands::raysum(&a), a.common.json),
        Command::Family(a) => emit(commands::family(&a), a.ray.common.json),
        Command::TangentPreserve(a) => emit(commands::tangent_preserve(&a), a.common.json),
        Command::Repro(a) => emit(repro::run(&a.suites, a.seed, a.timings), a.json),
    }
}
