//! Command-line front end. Data goes to `out`, diagnostics to `err`.
//!
//! Exit codes: 0 success, 1 failed verification, 2 parse error,
//! 3 inadmissible input, 4 budget exceeded.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::budget::{Budget, DEFAULT_NODE_BUDGET};
use crate::classify::{sweep, Problem, SweepGrid};
use crate::error::Error;
use crate::hilbert::STParams;
use crate::num::{format_f64, format_rational, parse_rational};
use crate::schema::{ComplexityRecord, ProblemSpecFile};
use crate::verify::{run_suite, VerifyConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_INADMISSIBLE: i32 = 3;
pub const EXIT_BUDGET: i32 = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GridFamily {
    FixedD,
    FixedEps,
    Diagonal,
}

#[derive(Debug, Parser)]
#[command(name = "stwt", version, about = "Information complexity and (s,t)-weak tractability tools")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Information complexity n(eps, S_d).
    Complexity {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long)]
        eps: String,
        #[arg(long)]
        d: u32,
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Approximation numbers a_1..a_{n_max} of a Sobolev embedding.
    ApproxNumbers {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long)]
        d: u32,
        #[arg(long)]
        n_max: u64,
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// (s,t)-weak tractability verdict.
    Classify {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long)]
        s: f64,
        #[arg(long)]
        t: f64,
    },
    /// Limit-statistic table on a grid family.
    Sweep {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long)]
        s: f64,
        #[arg(long)]
        t: f64,
        #[arg(long, value_enum, default_value = "diagonal")]
        grid: GridFamily,
        #[arg(long, default_value_t = 40)]
        size: u32,
        /// Accuracy of the fixed-eps family.
        #[arg(long, default_value = "0.3")]
        eps: String,
        /// Dimension of the fixed-d family.
        #[arg(long, default_value_t = 2)]
        d: u32,
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Invariant suites.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
}

/// Exit code for a library error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_) => EXIT_PARSE,
        Error::BudgetExceeded { .. } => EXIT_BUDGET,
        _ => EXIT_INADMISSIBLE,
    }
}

fn load_spec(path: &PathBuf) -> Result<ProblemSpecFile, Error> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
    ProblemSpecFile::parse(&text)
}

fn parse_eps(text: &str) -> Result<crate::num::Rational, Error> {
    let eps = parse_rational(text)?;
    if eps <= crate::num::Rational::from_integer(0.into()) {
        return Err(Error::InvalidInput(format!("accuracy {text} must be positive")));
    }
    Ok(eps)
}

fn st_params(s: f64, t: f64) -> Result<STParams, Error> {
    STParams::new(s, t).map_err(|e| Error::Parse(e.to_string()))
}

type Outcome = Result<i32, Error>;

/// Parses `args` (including the program name) and runs one command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
            let text = e.render().to_string();
            if code == EXIT_OK {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return code;
        }
    };
    match execute(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn io(e: std::io::Error) -> Error {
    Error::InvalidInput(format!("output failed: {e}"))
}

fn execute(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    match cmd {
        Command::Complexity { spec, eps, d, budget, format } => {
            let spec = load_spec(&spec)?;
            let eps = parse_eps(&eps)?;
            let problem = spec.build()?;
            let budget = Budget::new(budget.unwrap_or(DEFAULT_NODE_BUDGET));
            let n = problem.complexity(spec.criterion, &eps, d, &budget)?;
            let rec = ComplexityRecord { eps: format_rational(&eps), d, n: n.to_string(), criterion: spec.criterion };
            match format {
                Format::Json => writeln!(out, "{}", serde_json::to_string(&rec).expect("serializable")),
                Format::Csv => {
                    writeln!(out, "eps,d,n,criterion\n{},{},{},{}", rec.eps, rec.d, rec.n, rec.criterion.as_str())
                }
            }
            .map_err(io)?;
            writeln!(err, "n = {n}").map_err(io)?;
            Ok(EXIT_OK)
        }
        Command::ApproxNumbers { spec, d, n_max, budget, format } => {
            let spec = load_spec(&spec)?;
            let Problem::Sobolev(p) = spec.build()? else {
                return Err(Error::InvalidInput("approximation numbers need a sobolev specification".into()));
            };
            if n_max == 0 {
                return Err(Error::InvalidInput("n-max must be at least 1".into()));
            }
            let budget = Budget::new(budget.unwrap_or(DEFAULT_NODE_BUDGET));
            let rows = p.approx_numbers(d, n_max, &budget)?;
            match format {
                Format::Json => writeln!(out, "{}", serde_json::to_string(&rows).expect("serializable")).map_err(io)?,
                Format::Csv => {
                    writeln!(out, "n,a_n,level-weight,cumulative-count").map_err(io)?;
                    for r in &rows {
                        writeln!(out, "{},{},{},{}", r.n, format_f64(r.a_n), format_f64(r.level_weight), r.cumulative)
                            .map_err(io)?;
                    }
                }
            }
            Ok(EXIT_OK)
        }
        Command::Classify { spec, s, t } => {
            let spec = load_spec(&spec)?;
            let st = st_params(s, t)?;
            let verdict = spec.build()?.classify(spec.criterion, st);
            writeln!(out, "{}", serde_json::to_string(&verdict).expect("serializable")).map_err(io)?;
            writeln!(err, "{:?} ({})", verdict.outcome, verdict.clause).map_err(io)?;
            Ok(EXIT_OK)
        }
        Command::Sweep { spec, s, t, grid, size, eps, d, budget, format } => {
            let spec = load_spec(&spec)?;
            let st = st_params(s, t)?;
            let problem = spec.build()?;
            let grid = match grid {
                GridFamily::Diagonal => SweepGrid::scaled_diagonal(&problem, spec.criterion, size)?,
                GridFamily::FixedD => SweepGrid::fixed_d(d, size),
                GridFamily::FixedEps => SweepGrid::fixed_eps(parse_eps(&eps)?, size),
            };
            let budget = Budget::new(budget.unwrap_or(DEFAULT_NODE_BUDGET));
            let table = sweep(&problem, spec.criterion, st, &grid, &budget)?;
            match format {
                Format::Csv => write!(out, "{}", table.to_csv()).map_err(io)?,
                Format::Json => {
                    writeln!(out, "{}", serde_json::to_string(&table).expect("serializable")).map_err(io)?
                }
            }
            let summary = json!({ "summaries": table.summaries, "surrogate": table.surrogate });
            writeln!(err, "{summary}").map_err(io)?;
            Ok(EXIT_OK)
        }
        Command::Verify { suite, budget, seed, format } => {
            let mut cfg = VerifyConfig::default();
            if let Some(b) = budget {
                cfg.budget = b;
            }
            if let Some(s) = seed {
                cfg.seed = s;
            }
            let report = run_suite(&suite, &cfg)?;
            match format {
                Format::Json => {
                    writeln!(out, "{}", serde_json::to_string(&report).expect("serializable")).map_err(io)?
                }
                Format::Csv => {
                    writeln!(out, "check,passed,checks,violations").map_err(io)?;
                    for r in &report.results {
                        writeln!(out, "{},{},{},{}", r.name, r.passed, r.checks, r.violations).map_err(io)?;
                    }
                }
            }
            for r in &report.results {
                writeln!(err, "{} {} ({} checks)", if r.passed { "PASS" } else { "FAIL" }, r.name, r.checks)
                    .map_err(io)?;
            }
            Ok(if report.passed { EXIT_OK } else { EXIT_VERIFY_FAILED })
        }
    }
}
