//! Sweeps one criterion weight from 0 to 1 and prints where the ranking
//! changes.
//!
//!     cargo run --example weight_sweep [criterion] [steps]

use mcda_workbench::kb::default_kb;
use mcda_workbench::scenario::{fixtures, weight_sensitivity};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let criterion = args.next().unwrap_or_else(|| "f21".into());
    let steps: u32 = args.next().map(|s| s.parse()).transpose()?.unwrap_or(10);

    let points = weight_sensitivity(&default_kb(), &fixtures::experiment_2(), &criterion, steps)?;
    let mut previous = None;
    for p in &points {
        let marker = if previous.as_ref() != Some(&p.ranking) {
            "*"
        } else {
            " "
        };
        println!(
            "{marker} w({criterion}) = {:<6} {:?}",
            p.weight.to_decimal_string(2),
            p.ranking.classes
        );
        previous = Some(p.ranking.clone());
    }
    Ok(())
}
