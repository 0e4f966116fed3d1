//! Command-line harness: argument parsing, dispatch, JSON Lines output and
//! the on-disk coefficient cache.

pub mod cache;
pub mod record;
pub mod verify;

use std::ffi::OsString;
use std::io::{self, Write};
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use crate::engine::Engine;
use crate::error::Error;
use crate::oracle::plethysm_oracle;
use crate::partition::{Partition, SkewShape};
use crate::stability::{ScanBounds, SequenceSpec, DEFAULT_JMAX, DEFAULT_WINDOW};
use record::{CellRecord, Output, ResultRecord, ScanSummary};

/// Largest degree for which `--oracle` cross-checks are attempted.
pub const ORACLE_MAX_DEGREE: usize = 12;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFICATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

pub fn parse_partition(text: &str) -> Result<Partition, String> {
    text.parse().map_err(|e: Error| e.to_string())
}

pub fn parse_skew(text: &str) -> Result<SkewShape, String> {
    text.parse().map_err(|e: Error| e.to_string())
}

#[derive(Parser, Debug)]
#[command(name = "plethysm", version, about = "Exact plethysm coefficients and stability experiments")]
pub struct Cli {
    /// Coefficient cache file (created if missing, rewritten on exit).
    #[arg(long, global = true, value_name = "PATH")]
    pub cache: Option<PathBuf>,
    /// Cross-check every plethysm against the brute-force oracle.
    #[arg(long, global = true)]
    pub oracle: bool,
    /// Record wall time in each output record.
    #[arg(long, global = true)]
    pub timing: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Plethysm coefficient a^ν_{λ,μ}; ν and λ may be skew.
    Coeff {
        #[arg(long, value_parser = parse_skew, allow_hyphen_values = true)]
        nu: SkewShape,
        #[arg(long, value_parser = parse_skew, allow_hyphen_values = true)]
        lambda: SkewShape,
        #[arg(long, value_parser = parse_partition, allow_hyphen_values = true)]
        mu: Partition,
    },
    /// Littlewood–Richardson coefficient c^ν_{λ,μ}.
    Lr {
        #[arg(long, value_parser = parse_partition, allow_hyphen_values = true)]
        nu: Partition,
        #[arg(long, value_parser = parse_partition, allow_hyphen_values = true)]
        lambda: Partition,
        #[arg(long, value_parser = parse_partition, allow_hyphen_values = true)]
        mu: Partition,
    },
    /// Schur expansion of s_λ ∘ s_μ.
    Plethysm {
        #[arg(long, value_parser = parse_partition, allow_hyphen_values = true)]
        lambda: Partition,
        #[arg(long, value_parser = parse_partition, allow_hyphen_values = true)]
        mu: Partition,
    },
    /// The sequence a^{σ^{l,m}{j}}_{τ^{l,m}[j],(m)} for j = 0..=jmax.
    Sequence {
        #[arg(long, value_parser = parse_skew, allow_hyphen_values = true)]
        sigma: SkewShape,
        #[arg(long, value_parser = parse_skew, allow_hyphen_values = true)]
        tau: SkewShape,
        #[arg(long)]
        l: usize,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        m: u64,
        #[arg(long, default_value_t = DEFAULT_JMAX)]
        jmax: usize,
        #[arg(long, default_value_t = DEFAULT_WINDOW as u64, value_parser = clap::value_parser!(u64).range(1..))]
        window: u64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Run the built-in verification suite.
    Verify {
        #[arg(long, value_enum, default_value_t = Level::Quick)]
        level: Level,
    },
    /// Stability and monotonicity scan over shapes with |σ| = m|τ|.
    Scan {
        #[arg(long, default_value_t = 3)]
        max_tau: usize,
        /// Comma-separated values of m.
        #[arg(long, value_delimiter = ',', default_value = "2,3",
              value_parser = clap::value_parser!(u64).range(1..))]
        m: Vec<u64>,
        /// Comma-separated values of l (default: every 0..=m).
        #[arg(long, value_delimiter = ',')]
        l: Option<Vec<usize>>,
        /// Largest inner partition for skew shapes (0 scans straight shapes).
        #[arg(long, default_value_t = 0)]
        max_inner: usize,
        #[arg(long, default_value_t = DEFAULT_JMAX)]
        jmax: usize,
        #[arg(long, default_value_t = DEFAULT_WINDOW as u64, value_parser = clap::value_parser!(u64).range(1..))]
        window: u64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Level {
    Quick,
    Full,
}

/// Command failure, carrying the exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure { code: EXIT_USAGE, message: message.into() }
    }

    fn verification(message: impl Into<String>) -> Self {
        Failure { code: EXIT_VERIFICATION, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Verification { .. } => Failure::verification(e.to_string()),
            _ => Failure::usage(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::usage(format!("i/o error: {e}"))
    }
}

/// Parses `args` (including the program name) and runs the command, writing
/// records to `out`. Returns the process exit code.
pub fn main_with<I, T, W>(args: I, out: &mut W) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
    W: Write,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    match run(&cli, out) {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {}", f.message);
            f.code
        }
    }
}

/// Runs a parsed command. `Ok` carries the exit code for commands whose
/// checks can fail without an error.
pub fn run<W: Write>(cli: &Cli, out: &mut W) -> Result<i32, Failure> {
    let engine = Engine::new();
    if let Some(path) = &cli.cache {
        engine.preload_coefficients(cache::load(path));
    }
    let code = dispatch(cli, &engine, out)?;
    if let Some(path) = &cli.cache {
        cache::store(path, &engine.coefficient_entries())?;
    }
    Ok(code)
}

fn emit<W: Write>(out: &mut W, mut record: ResultRecord, started: Instant, timing: bool) -> io::Result<()> {
    if timing {
        record.wall_ms = Some(started.elapsed().as_millis() as u64);
    }
    writeln!(out, "{}", record.to_json_line())
}

fn oracle_check(engine: &Engine, lambda: &Partition, mu: &Partition) -> Result<(), Failure> {
    let degree = lambda.size() * mu.size();
    if degree > ORACLE_MAX_DEGREE {
        return Err(Failure::usage(format!(
            "--oracle supports degree at most {ORACLE_MAX_DEGREE}, got {degree}"
        )));
    }
    if degree == 0 || mu.is_empty() {
        return Ok(());
    }
    let slow = plethysm_oracle(lambda, mu, degree)?;
    let fast = engine.plethysm_schur(lambda, mu);
    if slow != *fast {
        return Err(Failure::verification(format!(
            "oracle disagrees on s_{lambda} o s_{mu}: engine {fast}, oracle {slow}"
        )));
    }
    Ok(())
}

fn dispatch<W: Write>(cli: &Cli, engine: &Engine, out: &mut W) -> Result<i32, Failure> {
    let started = Instant::now();
    let timing = cli.timing;
    match &cli.command {
        Command::Coeff { nu, lambda, mu } => {
            if cli.oracle {
                if !lambda.is_straight() || !nu.is_straight() {
                    return Err(Failure::usage("--oracle needs straight shapes"));
                }
                oracle_check(engine, &lambda.outer, mu)?;
            }
            let v = engine.skew_plethysm_coefficient(nu, lambda, mu);
            let inputs = [("nu", nu.to_text()), ("lambda", lambda.to_text()), ("mu", mu.to_text())];
            emit(out, ResultRecord::new("coeff", &inputs, Output::Value(v)), started, timing)?;
        }
        Command::Lr { nu, lambda, mu } => {
            let v = engine.lr_coefficient(nu, lambda, mu);
            let inputs = [("nu", nu.to_text()), ("lambda", lambda.to_text()), ("mu", mu.to_text())];
            emit(out, ResultRecord::new("lr", &inputs, Output::Value(v.into())), started, timing)?;
        }
        Command::Plethysm { lambda, mu } => {
            if cli.oracle {
                oracle_check(engine, lambda, mu)?;
            }
            let e = engine.plethysm_schur(lambda, mu);
            let inputs = [("lambda", lambda.to_text()), ("mu", mu.to_text())];
            emit(out, ResultRecord::new("plethysm", &inputs, Output::Expansion((*e).clone())), started, timing)?;
        }
        Command::Sequence { sigma, tau, l, m, jmax, window, format } => {
            let spec = SequenceSpec::new(sigma.clone(), tau.clone(), *l, *m as usize, *jmax)?;
            let report = engine.sequence_a(&spec, *window as usize)?;
            match format {
                Format::Csv => {
                    writeln!(out, "j,value")?;
                    for (j, v) in report.values.iter().enumerate() {
                        writeln!(out, "{j},{v}")?;
                    }
                }
                Format::Json => {
                    let inputs = [
                        ("sigma", sigma.to_text()),
                        ("tau", tau.to_text()),
                        ("l", l.to_string()),
                        ("m", m.to_string()),
                        ("jmax", jmax.to_string()),
                        ("window", window.to_string()),
                    ];
                    emit(out, ResultRecord::new("sequence", &inputs, Output::Sequence(report)), started, timing)?;
                }
            }
        }
        Command::Verify { level } => {
            let (bounds, name) = match level {
                Level::Quick => (verify::VerifyBounds::quick(), "quick"),
                Level::Full => (verify::VerifyBounds::full(), "full"),
            };
            let mut all_passed = true;
            for outcome in verify::run_all(engine, &bounds) {
                if !outcome.passed {
                    log::error!("check {} failed: {:?}", outcome.name, outcome.detail);
                }
                all_passed &= outcome.passed;
                let inputs = [("level", name.to_string())];
                emit(out, ResultRecord::new("verify", &inputs, Output::Check(outcome)), started, timing)?;
            }
            return Ok(if all_passed { EXIT_OK } else { EXIT_VERIFICATION });
        }
        Command::Scan { max_tau, m, l, max_inner, jmax, window } => {
            let mut bounds = ScanBounds::straight(
                *max_tau,
                m.iter().map(|&x| x as usize).collect(),
                *jmax,
                *window as usize,
            );
            bounds.l_values = l.clone();
            bounds.max_inner = *max_inner;
            let report = engine.scan(&bounds)?;
            let flagged: Vec<usize> = report.potential_counterexamples().map(|v| v.cell).collect();
            let failures = report.failures().count();
            let observations = report.violations.len() - failures;
            let join = |v: &[u64]| v.iter().map(u64::to_string).collect::<Vec<_>>().join(",");
            let inputs = [
                ("max_tau", max_tau.to_string()),
                ("m", join(m)),
                ("l", l.as_ref().map_or("all".to_string(), |v| {
                    v.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
                })),
                ("max_inner", max_inner.to_string()),
                ("jmax", jmax.to_string()),
                ("window", window.to_string()),
            ];
            for (index, cell) in report.cells.iter().enumerate() {
                let potential_counterexample = flagged.contains(&index);
                if potential_counterexample {
                    let s = &cell.report.spec;
                    log::warn!(
                        "potential counterexample to conjectured monotonicity: sigma={} tau={} l={} m={} values={:?}",
                        s.sigma, s.tau, s.l, s.m, cell.report.values
                    );
                }
                let record = CellRecord { index, cell: cell.clone(), potential_counterexample };
                emit(out, ResultRecord::new("scan", &inputs, Output::Cell(record)), started, timing)?;
            }
            let summary = ScanSummary {
                cells: report.cells.len(),
                failures,
                potential_counterexamples: flagged.len(),
                observations,
                passed: failures == 0,
            };
            emit(out, ResultRecord::new("scan", &inputs, Output::Summary(summary)), started, timing)?;
            return Ok(if failures == 0 { EXIT_OK } else { EXIT_VERIFICATION });
        }
    }
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String) {
        let mut out = Vec::new();
        let code = main_with(std::iter::once("plethysm").chain(args.iter().copied()), &mut out);
        (code, String::from_utf8(out).unwrap())
    }

    fn value(line: &str) -> String {
        let r = ResultRecord::from_json_line(line.trim()).unwrap();
        match r.output {
            Output::Value(v) => v.to_string(),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn parse_examples() {
        assert_eq!(parse_partition("3,2,1").unwrap().parts(), &[3, 2, 1]);
        assert!(parse_partition("").unwrap().is_empty());
        assert!(parse_partition("1,2").is_err());
        let s = parse_skew("3,2,1/1").unwrap();
        assert_eq!(s.outer.parts(), &[3, 2, 1]);
        assert_eq!(s.inner.parts(), &[1]);
    }

    #[test]
    fn coeff_and_lr_examples() {
        let (code, out) = run_args(&["coeff", "--nu", "4", "--lambda", "2", "--mu", "2"]);
        assert_eq!(code, 0);
        assert_eq!(value(&out), "1");
        let (code, out) = run_args(&["lr", "--nu", "3,2,1", "--lambda", "2,1", "--mu", "2,1"]);
        assert_eq!(code, 0);
        assert_eq!(value(&out), "2");
    }

    #[test]
    fn sequence_example() {
        let args = ["sequence", "--sigma", "2,1", "--tau", "2,1", "--l", "1", "--m", "1", "--jmax", "4"];
        let (code, out) = run_args(&args);
        assert_eq!(code, 0);
        let r = ResultRecord::from_json_line(out.trim()).unwrap();
        let Output::Sequence(report) = r.output else { panic!() };
        let ones: Vec<_> = (0..5).map(|_| num_bigint::BigInt::from(1)).collect();
        assert_eq!(report.values, ones);

        let (code, out) = run_args(&[&args[..], &["--format", "csv"]].concat());
        assert_eq!(code, 0);
        assert_eq!(out, "j,value\n0,1\n1,1\n2,1\n3,1\n4,1\n");
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run_args(&["coeff", "--nu", "1,2", "--lambda", "2", "--mu", "2"]).0, 2);
        assert_eq!(run_args(&["coeff", "--nu", "-1", "--lambda", "2", "--mu", "2"]).0, 2);
        assert_eq!(run_args(&["sequence", "--sigma", "2", "--tau", "1", "--l", "3", "--m", "2"]).0, 2);
        assert_eq!(run_args(&["sequence", "--sigma", "2", "--tau", "1", "--l", "0", "--m", "0"]).0, 2);
        assert_eq!(run_args(&["bogus"]).0, 2);
    }

    #[test]
    fn oracle_flag() {
        let (code, out) = run_args(&["--oracle", "plethysm", "--lambda", "2", "--mu", "2"]);
        assert_eq!(code, 0);
        assert!(out.contains(r#""expansion":{"2,2":1,"4":1}"#), "{out}");
        assert_eq!(run_args(&["--oracle", "plethysm", "--lambda", "4", "--mu", "4"]).0, 2);
    }
}
