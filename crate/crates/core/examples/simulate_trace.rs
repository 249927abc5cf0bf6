// Runs the threshold process step by step on a double corona and prints
// which vertices join at each step.
//
//     cargo run --example simulate_trace

use thresholdlab::constructions::canonical_double_corona_seed;
use thresholdlab::dynamics::{run, Simulator};
use thresholdlab::{FamilySpec, SeedSet};

pub fn run_example() -> thresholdlab::Result<()> {
    let (n, p, k) = (4, 3, 4);
    let spec = FamilySpec::double_corona(n, p);
    let graph = spec.build()?;
    let seed = canonical_double_corona_seed(n, p, k)?;
    let trace = run(&graph, &seed, k, None);

    println!("{spec}, k = {k}, |S_0| = {}", seed.len());
    let mut previous = SeedSet::default();
    for (t, state) in trace.snapshots.iter().enumerate() {
        let now = SeedSet::from_state(state);
        let added: Vec<String> = now
            .iter()
            .filter(|&v| !previous.contains(v))
            .map(|v| graph.role(v).map_or(v.to_string(), |r| r.to_string()))
            .collect();
        println!("  t = {t}: +{} {}", added.len(), added.join(" "));
        previous = now;
    }
    println!(
        "  converted: {} after {} steps",
        trace.converted,
        trace.steps()
    );

    // Dropping any one seed vertex breaks conversion.
    let mut sim = Simulator::new(&graph, k);
    let critical = seed
        .iter()
        .filter(|&v| {
            let rest: Vec<_> = seed.iter().filter(|&u| u != v).collect();
            !sim.converts(&rest)
        })
        .count();
    println!("  critical seed vertices: {critical}/{}", seed.len());

    let halted = run(&graph, &seed, k, Some(1));
    println!(
        "  with max_steps = 1: {} vertices colored",
        halted.final_state().count_ones(..)
    );
    Ok(())
}

fn main() -> thresholdlab::Result<()> {
    run_example()
}
