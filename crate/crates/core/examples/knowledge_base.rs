//! Edits a knowledge base: validate, add a technique, export the schema graph.
//!
//!     cargo run --example knowledge_base

use mcda_workbench::kb::{default_kb, export_graph, serialize_kb, validate_kb, TechniqueInstance};
use mcda_workbench::scenario::{run_scenario, Scenario};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let kb = default_kb();
    println!("{} v{}", kb.meta.name, kb.meta.version);
    for family in kb.families() {
        let members: Vec<&str> = kb
            .criteria
            .iter()
            .filter(|c| c.family == family)
            .map(|c| c.id.as_str())
            .collect();
        println!("  {family}: {}", members.join(" "));
    }

    let mut idef = TechniqueInstance::new("IDEF0", "Integration Definition for Function Modeling");
    for c in &kb.criteria {
        idef = idef.with_value(c.id.clone(), "partial");
    }
    let kb = kb.add_instance(idef)?;
    println!("instances: {}", kb.instances.len());

    match kb.add_instance(TechniqueInstance::new("PERA", "again")) {
        Err(e) => println!("rejected: error[{}] {e}", e.code()),
        Ok(_) => unreachable!(),
    }

    let mut broken = kb.clone();
    broken.instances[0]
        .values
        .insert("f12".into(), "superb".into());
    for v in validate_kb(&broken) {
        println!("violation {} at {}: {}", v.code.as_str(), v.path, v.message);
    }

    let graph = export_graph(&kb);
    println!(
        "graph: {} nodes, {} edges",
        graph.nodes.len(),
        graph.edges.len()
    );

    let s = Scenario::new(
        "with IDEF0",
        ["PERA", "GIM", "IDEF0"],
        ["f11", "f12", "f13", "f41"],
    );
    let report = run_scenario(&kb, &s)?;
    println!("ranking: {:?}", report.complete.classes);
    println!("serialized size: {} bytes", serialize_kb(&kb).len());
    Ok(())
}
