//! What-if analysis: add an alternative, drop criteria, compare rankings.
//!
//!     cargo run --example what_if

use mcda_workbench::kb::default_kb;
use mcda_workbench::scenario::{diff_rankings, fixtures, run_scenario, RankDiff};

fn show(title: &str, d: &RankDiff) {
    println!("{title}");
    if !d.entered.is_empty() {
        println!("  entered: {}", d.entered.join(", "));
    }
    for a in &d.shared {
        println!(
            "  {:<7} class {} -> {}  phi {} -> {}",
            a.alternative,
            a.class_before + 1,
            a.class_after + 1,
            a.net_before.to_decimal_string(3),
            a.net_after.to_decimal_string(3)
        );
    }
    for inv in &d.inversions {
        println!("  {} overtook {}", inv.behind, inv.ahead);
    }
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let kb = default_kb();
    let five = run_scenario(&kb, &fixtures::experiment_1())?;
    let six = run_scenario(&kb, &fixtures::experiment_2())?;
    show("adding GIM:", &diff_rankings(&five, &six));

    let reduced = fixtures::experiment_1()
        .without_criterion("f31")
        .without_criterion("f32");
    let reduced = run_scenario(&kb, &reduced)?;
    show(
        "dropping the decision criteria:",
        &diff_rankings(&five, &reduced),
    );
    Ok(())
}
