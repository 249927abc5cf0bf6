// Exact probability that a uniformly random seed of minimum size converts a
// corona, checked against full enumeration.
//
//     cargo run --release --example probability

use thresholdlab::closed_form::conv_corona;
use thresholdlab::graph::build_corona;
use thresholdlab::probability::{
    enumeration_probability, resilience_factor, success_probability_corona,
};

pub fn run_example() -> thresholdlab::Result<()> {
    println!(
        "{:>2} {:>2} {:>2} {:>4} {:>14} {:>14}",
        "n", "p", "k", "|S|", "P(S)", "RF"
    );
    for (n, p) in [(3, 1), (4, 2), (5, 2)] {
        let graph = build_corona(n, p)?;
        for k in 1..=p + 3 {
            let size = conv_corona(n, p, k)?.value();
            let exact = success_probability_corona(n, p, k)?;
            assert_eq!(enumeration_probability(&graph, k, size, 1_000_000)?, exact);
            println!(
                "{n:>2} {p:>2} {k:>2} {size:>4} {:>14} {:>14}",
                exact.to_string(),
                resilience_factor(n, p, k)?.to_decimal(6)
            );
        }
    }
    Ok(())
}

fn main() -> thresholdlab::Result<()> {
    run_example()
}
