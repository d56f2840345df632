//! Counting eigenvalues above a threshold for the built-in sequence families.
//!
//! Run with `cargo run --example spectra_counting`.

use st_tractability::num::{format_rational, int, ln_count, rat, Count};
use st_tractability::spectra::EigenSeq;
use st_tractability::Result;

/// Full digits for moderate counts, `e^x` beyond that.
fn show(n: &Count) -> String {
    let text = n.to_string();
    if text.len() <= 12 {
        text
    } else {
        format!("e^{:.1}", ln_count(n))
    }
}

fn main() -> Result<()> {
    let families = [
        ("geometric 1, 1/2", EigenSeq::geometric(int(1), rat(1, 2))?),
        ("poly 1, j^-2", EigenSeq::poly(int(1), int(2))?),
        ("log 1, sigma 2", EigenSeq::log(int(1), int(2))?),
        ("finite [1, 1, 1/2]", EigenSeq::finite_rank(vec![int(1), int(1), rat(1, 2)])?),
        ("explicit [4] then poly", EigenSeq::explicit(vec![int(4)], EigenSeq::poly(int(1), int(2))?)?),
    ];
    let thresholds = [rat(1, 2), rat(1, 10), rat(1, 1000)];

    println!("{:<24} {:>10} {:>10} {:>10}  decay", "sequence", "> 1/2", "> 1/10", "> 1/1000");
    for (name, seq) in &families {
        let counts: Vec<String> =
            thresholds.iter().map(|t| seq.count_above(t).map(|n| show(&n))).collect::<Result<_>>()?;
        println!("{:<24} {:>10} {:>10} {:>10}  {:?}", name, counts[0], counts[1], counts[2], seq.decay_class());
    }

    // Closed forms and bisection agree wherever bisection can reach the answer.
    for (name, seq) in &families {
        for t in &thresholds {
            if seq.count_above(t)? > Count::from(1u64 << 40) {
                continue;
            }
            assert_eq!(seq.count_above(t)?, seq.count_above_bisect(t)?, "{name} at {}", format_rational(t));
        }
    }

    let poly = EigenSeq::poly(int(1), int(2))?;
    println!("\nfirst values of j^-2:");
    for j in 1..=5 {
        println!("  lambda_{j} = {}", poly.eigen_at(j));
    }
    println!("trace of j^-2: {:?}", poly.trace());
    Ok(())
}
