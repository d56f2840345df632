//! Approximation numbers and complexity of periodic Sobolev embeddings
//! under the three norm variants.
//!
//! Run with `cargo run --example sobolev_approximation`.

use st_tractability::budget::Budget;
use st_tractability::num::rat;
use st_tractability::sobolev::{l1_ball_count, Norm, SobolevProblem};
use st_tractability::Result;

fn main() -> Result<()> {
    let budget = Budget::unlimited();
    for norm in [Norm::Plus, Norm::Star, Norm::Sharp] {
        let p = SobolevProblem::new(1.0, norm)?;
        let rows = p.approx_numbers(3, 10, &budget)?;
        let values: Vec<String> = rows.iter().map(|r| format!("{:.4}", r.a_n)).collect();
        println!("{:>5} alpha=1 d=3: {}", norm.as_str(), values.join(" "));
    }

    println!("\nladder of the sharp norm, d = 2");
    let sharp = SobolevProblem::new(1.0, Norm::Sharp)?;
    let ladder = sharp.ladder(2, 4.0, &budget)?;
    for r in &ladder.rungs {
        println!(
            "  level {:>3}: weight {:>4}, a = {:.4}, multiplicity {:>3}, cumulative {}",
            r.level, r.weight, r.singular_value, r.multiplicity, r.cumulative
        );
    }
    // Sharp levels are l1 spheres, so cumulative counts are l1 ball sizes.
    for (m, r) in ladder.rungs.iter().enumerate() {
        assert_eq!(r.cumulative, l1_ball_count(m as u64, 2));
    }

    println!("\ncomplexity n(eps, d) at eps = 3/10");
    println!("{:>4} {:>10} {:>10} {:>10}", "d", "plus", "star", "sharp");
    let eps = rat(3, 10);
    for d in [1, 2, 4, 8, 16] {
        let n: Vec<String> = [Norm::Plus, Norm::Star, Norm::Sharp]
            .iter()
            .map(|&norm| SobolevProblem::new(1.0, norm)?.complexity(&eps, d).map(|n| n.to_string()))
            .collect::<Result<_>>()?;
        println!("{:>4} {:>10} {:>10} {:>10}", d, n[0], n[1], n[2]);
    }
    Ok(())
}
