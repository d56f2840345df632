//! Numeric sweeps of ln n(eps,d) / (eps^-s + d^t) along grid families,
//! and the consistency gate comparing them with symbolic verdicts.
//!
//! Run with `cargo run --release --example tractability_sweep`.

use st_tractability::budget::Budget;
use st_tractability::classify::{consistency_gate, gate_st_grid, standard_portfolio, sweep, Problem, SweepGrid};
use st_tractability::hilbert::{Criterion, STParams};
use st_tractability::num::{int, rat};
use st_tractability::spectra::EigenSeq;
use st_tractability::tensor::TensorProblem;
use st_tractability::Result;

fn main() -> Result<()> {
    let problem = Problem::Tensor(TensorProblem::new(EigenSeq::geometric(int(1), rat(1, 2))?));
    let crit = Criterion::Normalized;
    let st = STParams::new(1.0, 1.0)?;

    let grid = SweepGrid::scaled_diagonal(&problem, crit, 12)?
        .extend(SweepGrid::fixed_d(4, 8))
        .extend(SweepGrid::fixed_eps(rat(3, 10), 8));
    let table = sweep(&problem, crit, st, &grid, &Budget::default())?;
    print!("{}", table.to_csv());
    for s in &table.summaries {
        println!("# {}: {} cells, flag {:?}, tail min {:.4}", s.family, s.cells, s.flag, s.tail_min);
    }

    let portfolio = standard_portfolio();
    let records = consistency_gate(&portfolio, &gate_st_grid(), 30);
    let contradictions: Vec<_> = records.iter().filter(|r| r.contradiction).collect();
    println!("\nconsistency gate: {} records, {} contradictions", records.len(), contradictions.len());
    for r in contradictions {
        println!("  {} at ({}, {}): {}", r.problem, r.st.s, r.st.t, r.note);
    }
    Ok(())
}
