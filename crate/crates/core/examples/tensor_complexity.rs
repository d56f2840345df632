//! Information complexity of tensor product problems, checked against
//! brute-force enumeration of multi-indices.
//!
//! Run with `cargo run --example tensor_complexity`.

use st_tractability::hilbert::Criterion;
use st_tractability::num::{format_rational, int, rat};
use st_tractability::spectra::EigenSeq;
use st_tractability::tensor::TensorProblem;
use st_tractability::Result;

fn main() -> Result<()> {
    let tp = TensorProblem::new(EigenSeq::geometric(int(1), rat(1, 4))?);
    let eps_list = [rat(49, 100), rat(1, 4), rat(1, 10), rat(1, 50)];

    println!("base lambda_j = 4^(1-j), absolute criterion");
    println!("{:>6} {:>4} {:>12} {:>12}", "eps", "d", "n(eps,d)", "brute force");
    for eps in &eps_list {
        for d in 1..=4 {
            let n = tp.tensor_count(Criterion::Absolute, eps, d)?;
            let brute = tp.brute_force_count(Criterion::Absolute, eps, d, 10_000_000)?;
            assert_eq!(n, brute);
            println!("{:>6} {:>4} {:>12} {:>12}", format_rational(eps), d, n, brute);
        }
    }

    // High dimensions stay cheap: the recursion only visits products above the threshold.
    let eps = rat(1, 10);
    for d in [10, 50, 200] {
        let c = tp.tensor_count_with(Criterion::Absolute, &eps, d, &Default::default())?;
        println!("d = {d:>3}: n = {} ({} nodes)", c.count, c.nodes);
    }

    // The normalized criterion divides by lambda_1^d; with lambda_1 = 2 it differs.
    let big = TensorProblem::new(EigenSeq::geometric(int(2), rat(1, 2))?);
    for d in 1..=3 {
        println!(
            "lambda_1 = 2, d = {d}: abs {} vs norm {}",
            big.tensor_count(Criterion::Absolute, &eps, d)?,
            big.tensor_count(Criterion::Normalized, &eps, d)?
        );
    }
    Ok(())
}
