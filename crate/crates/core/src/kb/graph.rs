use serde::{Deserialize, Serialize};

use super::defaults::family_label;
use super::KnowledgeBase;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphNode {
    pub id: String,
    pub kind: String,
    pub label: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphEdge {
    pub from: String,
    pub to: String,
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDocument {
    pub nodes: Vec<GraphNode>,
    pub edges: Vec<GraphEdge>,
}

pub const ROOT_NODE: &str = "F";
pub const TECHNIQUE_NODE: &str = "T";

fn node(id: String, kind: &str, label: &str) -> GraphNode {
    GraphNode {
        id,
        kind: kind.to_string(),
        label: label.to_string(),
    }
}

fn edge(from: &str, to: &str, kind: &str, label: Option<&str>) -> GraphEdge {
    GraphEdge {
        from: from.to_string(),
        to: to.to_string(),
        kind: kind.to_string(),
        label: label.map(str::to_string),
    }
}

/// Schema graph of the KB.
///
/// Node order is fixed: root `F`, families in registry order, criteria in
/// registry order, concept `T`, then techniques in KB order. Node ids are
/// namespaced (`family:f3`, `criterion:f31`, `technique:GRAI`) so a
/// technique can never collide with a criterion.
pub fn export_graph(kb: &KnowledgeBase) -> GraphDocument {
    let mut nodes = vec![node(ROOT_NODE.into(), "root", "criteria")];
    let mut edges = Vec::new();

    for family in kb.families() {
        let id = format!("family:{family}");
        nodes.push(node(
            id.clone(),
            "family",
            family_label(family).unwrap_or(family),
        ));
        edges.push(edge(&id, ROOT_NODE, "subfamily_of", None));
    }
    for c in &kb.criteria {
        let id = format!("criterion:{}", c.id);
        nodes.push(node(id.clone(), "criterion", &c.label));
        edges.push(edge(
            &id,
            &format!("family:{}", c.family),
            "member_of",
            None,
        ));
    }
    nodes.push(node(TECHNIQUE_NODE.into(), "concept", "technique"));
    for inst in &kb.instances {
        let id = format!("technique:{}", inst.id);
        nodes.push(node(id.clone(), "technique", &inst.label));
        edges.push(edge(&id, TECHNIQUE_NODE, "instance_of", None));
        // registry order, not map order
        for c in &kb.criteria {
            if let Some(value) = inst.values.get(&c.id) {
                edges.push(edge(
                    &id,
                    &format!("criterion:{}", c.id),
                    "value",
                    Some(value),
                ));
            }
        }
    }
    GraphDocument { nodes, edges }
}
