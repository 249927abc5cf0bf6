// Describes double-corona seeds as block patterns, one letter per block,
// and converts between patterns and vertex sets.
//
//     cargo run --example block_patterns

use thresholdlab::constructions::{
    canonical_double_corona_pattern, pattern_to_seed, seed_to_pattern, BlockPattern,
};
use thresholdlab::dynamics::run;
use thresholdlab::FamilySpec;

pub fn run_example() -> thresholdlab::Result<()> {
    for (n, p) in [(4, 2), (5, 2), (7, 1), (6, 3)] {
        let graph = FamilySpec::double_corona(n, p).build()?;
        let pattern = canonical_double_corona_pattern(n, p)?;
        let seed = pattern_to_seed(&pattern, n, p)?;
        let trace = run(&graph, &seed, 2, None);
        println!(
            "C_{n} ⊙⊙ K_{p}: {pattern:<8} |S| = {} converted = {} steps = {}",
            seed.len(),
            trace.converted,
            trace.steps()
        );
        assert_eq!(seed_to_pattern(&seed, n, p)?, pattern);
    }

    let pattern: BlockPattern = "OBOB".parse()?;
    let graph = FamilySpec::double_corona(4, 2).build()?;
    let trace = run(&graph, &pattern_to_seed(&pattern, 4, 2)?, 2, None);
    println!("OBOB on C_4 ⊙⊙ K_2 converted = {}", trace.converted);

    match pattern_to_seed(&"MMM".parse()?, 4, 2) {
        Err(e) => println!("MMM on four blocks: {e}"),
        Ok(seed) => println!("MMM on four blocks: {seed:?}"),
    }
    Ok(())
}

fn main() -> thresholdlab::Result<()> {
    run_example()
}
