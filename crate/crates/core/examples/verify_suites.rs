//! Runs the built-in invariant suites and prints one line per check.
//!
//! Run with `cargo run --release --example verify_suites [suite]`.

use st_tractability::verify::{run_suite, VerifyConfig};
use st_tractability::Result;

fn main() -> Result<()> {
    let suite = std::env::args().nth(1).unwrap_or_else(|| "all".into());
    let report = run_suite(&suite, &VerifyConfig::default())?;
    for r in &report.results {
        println!(
            "{} {:<24} {:>8} checks, {} violations",
            if r.passed { "PASS" } else { "FAIL" },
            r.name,
            r.checks,
            r.violations
        );
    }
    if !report.passed {
        std::process::exit(1);
    }
    Ok(())
}
