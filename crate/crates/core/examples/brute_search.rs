// Finds minimum conversion sets exhaustively and compares them with the
// closed forms.
//
//     THRESHOLDLAB_BUDGET=1000000 cargo run --release --example brute_search

use thresholdlab::closed_form::{conv_corona, conv_double_corona};
use thresholdlab::graph::Family;
use thresholdlab::search::{brute_force_min, SearchConfig};
use thresholdlab::FamilySpec;

pub fn run_example() -> thresholdlab::Result<()> {
    let config = SearchConfig::from_env();
    for (spec, k) in [
        (FamilySpec::corona(3, 2), 3),
        (FamilySpec::corona(4, 1), 3),
        (FamilySpec::double_corona(4, 2), 2),
        (FamilySpec::double_corona(3, 1), 5),
    ] {
        let graph = spec.build()?;
        let report = brute_force_min(&graph, k, &config)?;
        let formula = match spec.family {
            Family::Corona => conv_corona(spec.n, spec.p, k)?,
            _ => conv_double_corona(spec.n, spec.p, k)?,
        };
        assert_eq!(report.minimum, formula);
        let witness: Vec<String> = report
            .witness
            .iter()
            .flat_map(|s| s.iter())
            .map(|v| graph.role(v).map_or(v.to_string(), |r| r.to_string()))
            .collect();
        println!(
            "{spec}, k = {k}: {} after {} seeds; witness [{}]",
            report.minimum,
            report.sets_examined,
            witness.join(", ")
        );
    }

    let tight = SearchConfig::default().with_budget(100);
    let graph = FamilySpec::corona(6, 2).build()?;
    match brute_force_min(&graph, 2, &tight) {
        Err(e) => println!("budget of 100: {e}"),
        Ok(report) => println!("budget of 100 sufficed: {}", report.minimum),
    }
    Ok(())
}

fn main() -> thresholdlab::Result<()> {
    run_example()
}
