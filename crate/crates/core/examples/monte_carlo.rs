// Estimates success probabilities by sampling and compares the estimate with
// the exact value, including on a double corona where no formula exists.
//
//     cargo run --release --example monte_carlo

use thresholdlab::graph::{build_corona, build_double_corona};
use thresholdlab::probability::{
    enumeration_probability, monte_carlo_probability, success_probability_corona,
};

pub fn run_example() -> thresholdlab::Result<()> {
    let trials = 50_000;
    let graph = build_corona(3, 1)?;
    let exact = success_probability_corona(3, 1, 2)?;
    for rng_seed in 0..3 {
        let est = monte_carlo_probability(&graph, 2, 4, trials, rng_seed)?;
        println!(
            "C_3 ⊙ K_1, k = 2, seed {rng_seed}: {:.4} ± {:.4} (exact {})",
            est.estimate, est.half_width, exact
        );
    }

    let graph = build_double_corona(4, 1)?;
    let exact = enumeration_probability(&graph, 2, 4, 1_000_000)?;
    let est = monte_carlo_probability(&graph, 2, 4, trials, 0)?;
    println!(
        "C_4 ⊙⊙ K_1, k = 2, |S| = 4: {:.4} ± {:.4} (exact {} = {})",
        est.estimate,
        est.half_width,
        exact,
        exact.to_decimal(4)
    );
    Ok(())
}

fn main() -> thresholdlab::Result<()> {
    run_example()
}
