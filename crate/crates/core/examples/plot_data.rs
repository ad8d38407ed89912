//! Produces chart-ready data from a ranking report.
//!
//!     cargo run --example plot_data

use mcda_workbench::interface::{plot_data, PlotKind};
use mcda_workbench::kb::default_kb;
use mcda_workbench::scenario::{fixtures, run_scenario};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let report = run_scenario(&default_kb(), &fixtures::experiment_2())?;
    let chart = plot_data(&report, PlotKind::Histogram);
    println!("{}", chart.title);
    for p in &chart.series {
        let len = ((p.value + 0.5) * 40.0).round().max(0.0) as usize;
        println!("{:<7} {:>7.3} {}", p.label, p.value, "#".repeat(len));
    }
    println!();
    println!(
        "{}",
        mcda_workbench::canonical::to_string(&plot_data(&report, PlotKind::Points))?
    );
    Ok(())
}
