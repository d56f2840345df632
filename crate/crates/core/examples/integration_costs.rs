//! Cost bounds for sparse-grid integration rules and their tractability verdicts.
//!
//! Run with `cargo run --example integration_costs`.

use st_tractability::hilbert::STParams;
use st_tractability::integration::{eps0, IntegrationBound, Variant, DEFAULT_C};
use st_tractability::Result;

fn main() -> Result<()> {
    for variant in [Variant::QRule, Variant::ARule, Variant::Ccs] {
        let bound = IntegrationBound::new(variant, DEFAULT_C)?;
        println!("{} rule, C = {DEFAULT_C}", variant.as_str());
        for d in [1, 4, 16] {
            for eps in [0.5, 1e-2, 1e-6] {
                let row = bound.ln_cost(eps, d)?;
                println!("  d = {:>2}, eps = {:>6}: ln cost = {:>10.3} ({})", d, eps, row.ln_cost, row.branch);
            }
        }
    }

    println!("\nbranch point eps0(d) = exp(-4 sqrt d)");
    for d in [1, 4, 9, 16] {
        println!("  d = {d:>2}: {:.3e}", eps0(d));
    }

    println!("\nverdicts");
    for (s, t) in [(1.0, 0.4), (1.0, 0.6), (1.0, 0.8), (2.0, 2.0)] {
        let st = STParams::new(s, t)?;
        for variant in [Variant::ARule, Variant::Ccs] {
            let v = IntegrationBound::new(variant, DEFAULT_C)?.classify(st);
            println!("  ({s}, {t}) {:>3}: {:?} [{}]", variant.as_str(), v.outcome, v.clause);
        }
    }
    Ok(())
}
