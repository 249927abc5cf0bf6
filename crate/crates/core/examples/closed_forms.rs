// Tabulates conversion numbers of coronas and double coronas from the
// closed forms and cross-checks them against the recurrences.
//
//     cargo run --example closed_forms

use thresholdlab::closed_form::{
    conv_corona, conv_cycle, conv_double_corona, reduce_corona, reduce_double_corona,
};

pub fn run_example() -> thresholdlab::Result<()> {
    let cycles = (3..=10)
        .map(|n| conv_cycle(n, 2).map(|c| c.value()))
        .collect::<Result<Vec<_>, _>>()?;
    println!("cycles C_3..C_10, k = 2: {cycles:?}");

    let n = 6;
    for p in 1..=3 {
        println!("n = {n}, p = {p}");
        for k in 1..=p + 3 {
            let corona = conv_corona(n, p, k)?;
            let double = conv_double_corona(n, p, k)?;
            assert_eq!(corona, reduce_corona(n, p, k)?);
            if k >= 2 {
                assert_eq!(double, reduce_double_corona(n, p, k)?);
            }
            println!(
                "  k = {k}: corona {:<18} double corona {double}",
                corona.to_string()
            );
        }
    }
    Ok(())
}

fn main() -> thresholdlab::Result<()> {
    run_example()
}
