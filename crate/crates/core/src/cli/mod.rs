//! Drivers behind the `pgcd` command line.

use std::io::Write;
use std::sync::mpsc;
use std::time::{Duration, Instant};

use num_bigint::BigInt;

use crate::counts::{self, DeterminantCounts};
use crate::error::{Error, Result};
use crate::habicht::epgcd;
use crate::oracle::{verify_case_table, VerificationReport};
use crate::recursive::pgcd_recursive;
use crate::serial::{to_json, to_text};
use crate::subres::DegreeVector;
use crate::sylvester::pgcd;
use crate::table::{Algorithm, CaseTable};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

impl std::str::FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            other => Err(Error::Parse(format!("unknown format {other:?}"))),
        }
    }
}

pub fn compute_table(d: &DegreeVector, algo: Algorithm) -> Result<CaseTable<BigInt>> {
    match algo {
        Algorithm::Sylvester => pgcd(d),
        Algorithm::Habicht => epgcd(d),
        Algorithm::Recursive => pgcd_recursive(d),
    }
}

pub fn run_compute(d: &DegreeVector, algo: Algorithm, format: Format, normalize: bool, explicit: bool) -> Result<String> {
    let mut table = compute_table(d, algo)?;
    if normalize {
        table = table.normalized()?;
    }
    Ok(match format {
        Format::Json => to_json(&table, explicit) + "\n",
        Format::Text => to_text(&table, explicit),
    })
}

pub fn run_verify(
    d: &DegreeVector,
    algo: Algorithm,
    trials: usize,
    seed: u64,
    bound: i64,
    mutate: bool,
) -> Result<VerificationReport> {
    let mut table = compute_table(d, algo)?;
    if mutate {
        table = table.mutated();
    }
    verify_case_table(&table, trials, seed, bound)
}

pub fn run_counts(d0: usize, m: usize, n: usize) -> Result<DeterminantCounts> {
    counts::run_counts(d0, m, n)
}

pub fn write_counts<W: Write>(c: &DeterminantCounts, out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    let io = |e: csv::Error| Error::Parse(e.to_string());
    w.write_record(["vardulakis", "barnett", "kakie_ho", "proposed"]).map_err(io)?;
    w.write_record([&c.vardulakis, &c.barnett, &c.kakie_ho, &c.proposed].map(|v| v.to_string())).map_err(io)?;
    w.flush().map_err(|e| Error::Parse(e.to_string()))
}

/// One benchmark row; `None` marks a run that hit the timeout.
#[derive(Clone, Debug, PartialEq)]
pub struct BenchRow {
    pub degrees: DegreeVector,
    pub algo: Algorithm,
    pub n_cases: Option<usize>,
    pub max_param_degree: Option<u32>,
    pub wall_ms: Option<f64>,
}

/// Runs `f` on a worker thread and gives up after `limit`. A timed-out
/// worker is left to finish in the background.
fn with_timeout<T: Send + 'static>(limit: Option<Duration>, f: impl FnOnce() -> T + Send + 'static) -> Option<T> {
    match limit {
        None => Some(f()),
        Some(limit) => {
            let (tx, rx) = mpsc::channel();
            std::thread::spawn(move || {
                let _ = tx.send(f());
            });
            rx.recv_timeout(limit).ok()
        }
    }
}

pub fn median(values: &mut [f64]) -> f64 {
    values.sort_by(|a, b| a.total_cmp(b));
    let n = values.len();
    if n % 2 == 1 {
        values[n / 2]
    } else {
        (values[n / 2 - 1] + values[n / 2]) / 2.0
    }
}

/// Times table construction; `wall_ms` is the median over `repeat` runs.
pub fn run_bench(
    degrees: &[DegreeVector],
    algos: &[Algorithm],
    repeat: usize,
    timeout: Option<Duration>,
) -> Result<Vec<BenchRow>> {
    if repeat == 0 {
        return Err(Error::BadRange("repeat must be at least 1".into()));
    }
    let mut rows = Vec::new();
    for d in degrees {
        for &algo in algos {
            let mut times = Vec::with_capacity(repeat);
            let mut shape = None;
            for _ in 0..repeat {
                let dd = d.clone();
                let run = with_timeout(timeout, move || {
                    let start = Instant::now();
                    let t = compute_table(&dd, algo);
                    (start.elapsed(), t)
                });
                match run {
                    None => {
                        shape = None;
                        times.clear();
                        break;
                    }
                    Some((elapsed, table)) => {
                        let table = table?;
                        times.push(elapsed.as_secs_f64() * 1000.0);
                        shape = Some((table.len(), table.max_param_degree()));
                    }
                }
            }
            rows.push(BenchRow {
                degrees: d.clone(),
                algo,
                n_cases: shape.map(|s| s.0),
                max_param_degree: shape.map(|s| s.1),
                wall_ms: (!times.is_empty()).then(|| median(&mut times)),
            });
        }
    }
    Ok(rows)
}

pub const BENCH_HEADER: [&str; 5] = ["degrees", "algo", "n_cases", "max_param_degree", "wall_ms"];

pub fn write_bench_csv<W: Write>(rows: &[BenchRow], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    let io = |e: csv::Error| Error::Parse(e.to_string());
    w.write_record(BENCH_HEADER).map_err(io)?;
    let q = |v: Option<String>| v.unwrap_or_else(|| "?".to_string());
    for r in rows {
        let degrees: Vec<String> = r.degrees.as_slice().iter().map(|d| d.to_string()).collect();
        w.write_record([
            degrees.join(" "),
            r.algo.name().to_string(),
            q(r.n_cases.map(|v| v.to_string())),
            q(r.max_param_degree.map(|v| v.to_string())),
            q(r.wall_ms.map(|v| format!("{v:.3}"))),
        ])
        .map_err(io)?;
    }
    w.flush().map_err(|e| Error::Parse(e.to_string()))
}
