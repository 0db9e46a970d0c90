//! fpower: exact voting-power analysis for weighted bodies with blocs.
//!
//! Reads a member CSV (`id,name,weight,bloc`) or an explicit-game JSON and
//! reports the Felsenthal and Felsenthal-Owen indices as exact rationals.
//! Identical inputs and flags produce byte-identical output.
//!
//! Exit codes: 0 success, 2 unusable input, 3 over a capacity budget,
//! 4 internal invariant failure.

mod body;
mod report;
mod selftest;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use felsenthal::axioms::matrix::{independence_matrix, AxiomSet, MatrixConfig};

use body::{explicit_from_json_path, Failure, QuotaSpec, VotingBody};
use report::{
    analyze, render_csv, render_json, render_sweep_csv, render_sweep_json, render_text, sweep,
    BackendChoice, FormatChoice, IndexChoice, Prepared, SingleIndex,
};

#[derive(Parser)]
#[command(
    name = "fpower",
    version,
    about = "Exact Felsenthal and Felsenthal-Owen power indices"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the indices for one body at one quota
    Analyze(AnalyzeArgs),
    /// Recompute one index across a list of quotas
    Sweep(SweepArgs),
    /// Print the axiom independence matrices for the bundled indices
    Axioms(AxiomsArgs),
    /// Run the built-in reference scenarios
    Selftest,
}

#[derive(Args)]
struct AnalyzeArgs {
    /// Member CSV with header `id,name,weight,bloc`
    #[arg(long, value_name = "FILE", conflicts_with = "game")]
    members: Option<PathBuf>,
    /// Explicit game JSON: {"n", "minimal_winning", "partition"}
    #[arg(long, value_name = "FILE")]
    game: Option<PathBuf>,
    /// Quota: absolute votes ("123"), fraction ("0.55"), or percent ("55%")
    #[arg(long)]
    quota: Option<String>,
    /// Round fractional quotas to ceil(f*total) (weight >= f*total wins)
    /// instead of the default strict majority floor(f*total)+1
    #[arg(long)]
    quota_inclusive: bool,
    #[arg(long, value_enum, default_value_t = IndexChoice::Both)]
    index: IndexChoice,
    #[arg(long, value_enum, default_value_t = BackendChoice::Auto)]
    backend: BackendChoice,
    /// How many cumulative top-k shares to report
    #[arg(long, default_value_t = 6)]
    top: usize,
    #[arg(long, value_enum, default_value_t = FormatChoice::Text)]
    format: FormatChoice,
    /// Write the report to a file instead of stdout
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SweepArgs {
    /// Member CSV with header `id,name,weight,bloc`
    #[arg(long, value_name = "FILE", required = true)]
    members: PathBuf,
    /// Comma-separated quotas, each in analyze syntax (e.g. 0.5,0.55,0.6)
    #[arg(long, value_delimiter = ',', required = true)]
    quotas: Vec<String>,
    /// Round fractional quotas to ceil(f*total) instead of strict majority
    #[arg(long)]
    quota_inclusive: bool,
    #[arg(long, value_enum, default_value_t = SingleIndex::FelsenthalOwen)]
    index: SingleIndex,
    #[arg(long, value_enum, default_value_t = BackendChoice::Auto)]
    backend: BackendChoice,
    /// csv (default) or json; text is not offered for sweeps
    #[arg(long, value_enum, default_value_t = FormatChoice::Csv)]
    format: FormatChoice,
    /// Write the table to a file instead of stdout
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct AxiomsArgs {
    /// Which axiom set to exercise
    #[arg(long, default_value = "both", value_parser = ["quotient", "transfer", "both"])]
    set: String,
    /// Seed for the instance generators
    #[arg(long, default_value_t = 24)]
    seed: u64,
    /// Random instances per axiom (hand-picked witnesses are always added)
    #[arg(long, default_value_t = 500, value_parser = clap::value_parser!(u64).range(1..))]
    trials: u64,
    /// text (default) or csv
    #[arg(long, value_enum, default_value_t = FormatChoice::Text)]
    format: FormatChoice,
    /// Write the matrices to a file instead of stdout
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Analyze(args) => run_analyze(args),
        Command::Sweep(args) => run_sweep(args),
        Command::Axioms(args) => run_axioms(args),
        Command::Selftest => {
            let text = selftest::run()?;
            print!("{text}");
            Ok(())
        }
    }
}

fn emit(out: Option<&PathBuf>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Failure::parse(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run_analyze(args: AnalyzeArgs) -> Result<(), Failure> {
    let prepared = match (&args.members, &args.game) {
        (Some(members), None) => {
            let quota_text = args.quota.as_deref().ok_or_else(|| {
                Failure::parse("--quota is required with --members")
            })?;
            let spec = QuotaSpec::parse(quota_text)?;
            let body = VotingBody::from_csv_path(members)?;
            Prepared::weighted(&body, spec, args.quota_inclusive)?
        }
        (None, Some(game_path)) => {
            if args.quota.is_some() {
                return Err(Failure::parse(
                    "--quota applies to weighted bodies; explicit games have none",
                ));
            }
            let (game, partition) = explicit_from_json_path(game_path)?;
            Prepared::explicit(game, partition)
        }
        _ => {
            return Err(Failure::parse(
                "exactly one of --members or --game is required",
            ))
        }
    };
    let report = analyze(&prepared, args.index, args.backend, args.top)?;
    let text = match args.format {
        FormatChoice::Text => render_text(&report),
        FormatChoice::Json => render_json(&report),
        FormatChoice::Csv => render_csv(&report),
    };
    emit(args.out.as_ref(), &text)
}

fn run_sweep(args: SweepArgs) -> Result<(), Failure> {
    let body = VotingBody::from_csv_path(&args.members)?;
    let quotas: Vec<(String, QuotaSpec)> = args
        .quotas
        .iter()
        .map(|label| Ok((label.clone(), QuotaSpec::parse(label)?)))
        .collect::<Result<_, Failure>>()?;
    let rows = sweep(
        &body,
        &quotas,
        args.quota_inclusive,
        args.index,
        args.backend,
    )?;
    let text = match args.format {
        FormatChoice::Json => render_sweep_json(&rows),
        // a sweep is a table either way; text falls back to csv
        FormatChoice::Csv | FormatChoice::Text => render_sweep_csv(&rows),
    };
    emit(args.out.as_ref(), &text)
}

fn run_axioms(args: AxiomsArgs) -> Result<(), Failure> {
    let sets: Vec<AxiomSet> = match args.set.as_str() {
        "quotient" => vec![AxiomSet::Quotient],
        "transfer" => vec![AxiomSet::Transfer],
        _ => vec![AxiomSet::Quotient, AxiomSet::Transfer],
    };
    let config = MatrixConfig {
        seed: args.seed,
        instances_per_axiom: args.trials as usize,
    };
    let mut text = String::new();
    for set in sets {
        let matrix = independence_matrix(set, &config)?;
        // the shipped index must satisfy every axiom; anything else is a bug
        if !matrix.violated_axioms("psi").is_empty() {
            return Err(Failure::internal(format!(
                "psi violated {:?} in the {} set",
                matrix.violated_axioms("psi"),
                matrix.set_name
            )));
        }
        match args.format {
            FormatChoice::Csv => text.push_str(&matrix.to_csv()),
            _ => {
                text.push_str(&matrix.render());
                text.push('\n');
            }
        }
    }
    emit(args.out.as_ref(), &text)
}
