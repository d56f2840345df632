//! Tractability verdicts across the built-in problem portfolio, uniform
//! weak tractability probes, and the monotonicity check across (s,t).
//!
//! Run with `cargo run --release --example classification`.

use st_tractability::classify::{
    default_st_grid, default_uwt_grid, hierarchy_relations, standard_portfolio, uwt_probe,
};
use st_tractability::hilbert::STParams;
use st_tractability::Result;

fn main() -> Result<()> {
    let portfolio = standard_portfolio();
    let points = [STParams::new(1.0, 1.0)?, STParams::new(0.5, 2.0)?, STParams::new(2.0, 0.5)?];

    println!("{:<28} {:<20} {:<20} {:<20}", "problem", "(1,1)", "(0.5,2)", "(2,0.5)");
    for entry in &portfolio {
        let cells: Vec<String> =
            points.iter().map(|st| format!("{:?}", entry.problem.classify(entry.crit, *st).outcome)).collect();
        println!("{:<28} {:<20} {:<20} {:<20}", entry.name, cells[0], cells[1], cells[2]);
    }

    println!("\nuniform weak tractability on a (0,1]^2 grid:");
    for entry in &portfolio {
        let report = uwt_probe(&entry.problem, entry.crit, &default_uwt_grid());
        println!("  {:<28} {:?} witness {:?}", entry.name, report.outcome, report.witness);
    }

    let report = hierarchy_relations(&portfolio, &default_st_grid());
    println!(
        "\nmonotonicity across (s,t): {} pairs checked, {} undecided, {} violations",
        report.checks,
        report.unpropagated,
        report.violations.len()
    );
    assert!(report.violations.is_empty());
    Ok(())
}
