use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand};

use pgcd::cli::{self, Format};
use pgcd::{Algorithm, DegreeVector, Result};

#[derive(Parser)]
#[command(name = "pgcd", version, about = "Parametric gcd case tables")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build the case table for formal inputs of the given degrees.
    Compute {
        #[arg(long)]
        degrees: DegreeVector,
        #[arg(long, default_value = "sylvester")]
        algo: Algorithm,
        #[arg(long, default_value = "text")]
        format: Format,
        /// Divide every gcd expression by its integer content.
        #[arg(long)]
        normalize: bool,
        /// Print the full guard conjunction of every case.
        #[arg(long)]
        explicit_conditions: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a case table against the Euclidean gcd of random specializations.
    Verify {
        #[arg(long)]
        degrees: DegreeVector,
        #[arg(long, default_value = "sylvester")]
        algo: Algorithm,
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 20)]
        bound: i64,
        /// Corrupt one gcd expression first; verification should then fail.
        #[arg(long)]
        mutate: bool,
    },
    /// Determinant counts of the determinantal gcd methods.
    Counts {
        #[arg(long)]
        d0: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
    },
    /// Time the algorithms and report case counts and parameter degrees as CSV.
    Bench {
        #[arg(long, required = true)]
        degrees: Vec<DegreeVector>,
        #[arg(long, value_delimiter = ',', default_value = "sylvester,habicht,recursive")]
        algos: Vec<Algorithm>,
        #[arg(long, default_value_t = 3)]
        repeat: usize,
        /// Seconds per run before the row is reported as "?".
        #[arg(long)]
        timeout: Option<f64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn output(path: Option<&PathBuf>) -> io::Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(File::create(p)?),
        None => Box::new(io::stdout().lock()),
    })
}

fn run(cmd: Command) -> Result<ExitCode> {
    let io_err = |e: io::Error| pgcd::Error::Parse(e.to_string());
    match cmd {
        Command::Compute { degrees, algo, format, normalize, explicit_conditions, out } => {
            let s = cli::run_compute(&degrees, algo, format, normalize, explicit_conditions)?;
            output(out.as_ref()).and_then(|mut w| w.write_all(s.as_bytes())).map_err(io_err)?;
        }
        Command::Verify { degrees, algo, trials, seed, bound, mutate } => {
            let report = cli::run_verify(&degrees, algo, trials, seed, bound, mutate)?;
            println!("{}", serde_json::to_string_pretty(&report).expect("reports always serialize"));
            if !report.ok() {
                eprintln!("{} of {} trials failed", report.failures.len(), report.trials);
                return Ok(ExitCode::from(1));
            }
        }
        Command::Counts { d0, m, n } => {
            let c = cli::run_counts(d0, m, n)?;
            cli::write_counts(&c, io::stdout().lock())?;
        }
        Command::Bench { degrees, algos, repeat, timeout, out } => {
            let limit = match timeout {
                Some(s) if !(s.is_finite() && s >= 0.0) => {
                    return Err(pgcd::Error::BadRange(format!("timeout must be a nonnegative number, got {s}")))
                }
                Some(s) => Some(Duration::from_secs_f64(s)),
                None => None,
            };
            let rows = cli::run_bench(&degrees, &algos, repeat, limit)?;
            cli::write_bench_csv(&rows, output(out.as_ref()).map_err(io_err)?)?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse().command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
