//! Sampled limit conditions for general (non-tensor) problems whose
//! spectrum changes with the dimension.
//!
//! Run with `cargo run --example hilbert_conditions`.

use std::collections::BTreeMap;

use st_tractability::hilbert::{default_window, Criterion, DimensionRule, GeneralProblem, STParams};
use st_tractability::num::{int, rat};
use st_tractability::spectra::EigenSeq;
use st_tractability::Result;

fn main() -> Result<()> {
    // Dimension d gets lambda_{d,j} = j^-(d+1).
    let dims: BTreeMap<u32, EigenSeq> =
        (1..=6).map(|d| (d, EigenSeq::poly(int(1), int(d as i64 + 1)).unwrap())).collect();
    let p = GeneralProblem::new(DimensionRule::Explicit(dims));
    let crit = Criterion::Absolute;

    println!("n(eps, d):");
    for d in 1..=6 {
        let row: Vec<String> = [rat(1, 2), rat(1, 10), rat(1, 100)]
            .iter()
            .map(|e| p.info_complexity(crit, e, d).map(|n| n.to_string()))
            .collect::<Result<_>>()?;
        println!("  d = {d}: {}", row.join(", "));
    }

    let c1 = p.check_c1(crit, 1.0, 3, &default_window())?;
    println!("\nC1 at s = 1, d = 3: flag {:?}, symbolic {:?}", c1.flag, c1.symbolic);
    for [j, v] in &c1.samples {
        println!("  j = {j:>6}: {v:.3e}");
    }

    let c2 = p.check_c2(crit, STParams::new(1.0, 1.0)?, &[0.1, 0.5, 0.9], 6, 20_000)?;
    println!("\nC2 at (1,1): flag {:?}, witness {:?}", c2.flag, c2.witness);

    let c3 = p.check_c3(crit, &[1, 2, 3, 4, 5, 6])?;
    println!("C3: flag {:?}, last value {:?}", c3.flag, c3.last_value());

    println!("\nstandard-information bound from the trace:");
    for d in 1..=3 {
        let eps = rat(1, 10);
        println!(
            "  d = {d}: n_all = {}, n_std <= {}",
            p.info_complexity(crit, &eps, d)?,
            p.std_upper_bound_for(crit, &eps, d)?
        );
    }
    Ok(())
}
