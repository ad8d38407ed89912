//! Ranks the bundled experiment scenarios against the default knowledge base.
//!
//!     cargo run --example rank_experiments

use mcda_workbench::kb::default_kb;
use mcda_workbench::scenario::{fixtures, run_scenario};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let kb = default_kb();
    for scenario in fixtures::all() {
        let report = run_scenario(&kb, &scenario)?;
        println!(
            "{} ({} alternatives, {} criteria)",
            report.scenario,
            scenario.alternatives.len(),
            scenario.criteria.len()
        );
        for line in &report.ranked {
            let flow = report.flows.get(&line.alternative).unwrap();
            println!(
                "  {}. {:<8} phi = {:>7}  (exact {})",
                line.rank, line.alternative, line.net_display, flow.net
            );
        }
        assert!(report.flows.net_sum().is_zero());
        println!();
    }
    Ok(())
}
