use std::path::PathBuf;
use std::process::ExitCode;

use bezout_subres::bench::BenchSpec;
use bezout_subres::{parse_rat, Formula, Poly};
use bezout_subres_cli::commands::{self, CheckOptions};
use bezout_subres_cli::system_file::{inline_polys, load_polys, to_system};
use bezout_subres_cli::CliError;
use clap::{Args, Parser, Subcommand};

/// Exact generalized subresultants of several univariate polynomials.
#[derive(Parser)]
#[command(name = "subres", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute S_delta with one formula and print it.
    Compute {
        #[command(flatten)]
        input: SystemInput,
        /// Comma-separated delta_1..delta_t.
        #[arg(long)]
        delta: String,
        /// bezout, hybrid or nonhom.
        #[arg(long, default_value = "nonhom")]
        formula: Formula,
    },
    /// Cross-check the three formulas (and the root definition with --roots).
    Check {
        #[command(flatten)]
        input: SystemInput,
        #[arg(long, conflicts_with = "delta", required_unless_present = "delta")]
        all_deltas: bool,
        #[arg(long)]
        delta: Option<String>,
        /// Distinct roots of F0, comma-separated; F0 in the input is then ignored.
        #[arg(long)]
        roots: Option<String>,
        /// Leading coefficient of F0 when --roots is given.
        #[arg(long, requires = "roots")]
        lc: Option<String>,
        #[arg(long, hide = true)]
        corrupt: bool,
    },
    /// Time matrix generation and determinant evaluation on random systems.
    Bench {
        /// Comma-separated d0,d1,...,dt with d0 maximal.
        #[arg(long)]
        degrees: String,
        #[arg(long, default_value_t = 1)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 9)]
        coeff_bound: u32,
        /// `all`, or deltas separated by ';' (e.g. "2,2;1,3").
        #[arg(long, default_value = "all")]
        deltas: String,
        #[arg(long)]
        out: PathBuf,
        /// Worker threads; 1 keeps timing single-threaded.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct SystemInput {
    /// JSON system file.
    #[arg(long)]
    system: Option<PathBuf>,
    /// Inline polynomial, repeated in order F0, F1, ...
    #[arg(long = "poly")]
    polys: Vec<String>,
}

impl SystemInput {
    fn load(&self) -> Result<Vec<Poly>, CliError> {
        match &self.system {
            Some(path) => load_polys(path),
            None => inline_polys(&self.polys),
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Compute {
            input,
            delta,
            formula,
        } => {
            let system = to_system(input.load()?)?;
            println!("{}", commands::compute(&system, &delta, formula)?);
        }
        Command::Check {
            input,
            all_deltas: _,
            delta,
            roots,
            lc,
            corrupt,
        } => {
            let polys = input.load()?;
            let deltas = delta
                .map(|d| commands::parse_usize_list(&d).map(|v| vec![v]))
                .transpose()?;
            let options = CheckOptions {
                roots: roots.map(|r| commands::parse_rat_list(&r)).transpose()?,
                lc: lc
                    .map(|s| parse_rat(&s).map_err(|e| CliError::Usage(format!("--lc: {e}"))))
                    .transpose()?,
                corrupt,
            };
            let report = commands::check(polys, deltas, &options)?;
            print!("{}", report.text);
            if !report.all_passed() {
                return Err(CliError::Failure("check failed".into()));
            }
        }
        Command::Bench {
            degrees,
            trials,
            seed,
            coeff_bound,
            deltas,
            out,
            jobs,
        } => {
            let spec = BenchSpec {
                degrees: commands::parse_usize_list(&degrees)?,
                coeff_bound,
                trials,
                seed,
                deltas: commands::parse_delta_selection(&deltas)?,
            };
            print!("{}", commands::bench(&spec, jobs, &out)?);
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
