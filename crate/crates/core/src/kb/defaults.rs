use super::{parse_kb, KnowledgeBase};

/// The five criterion families below the root `F`.
pub const FAMILIES: [&str; 5] = ["f1", "f2", "f3", "f4", "f5"];

pub const DEFAULT_SCALE_ID: &str = "default";

/// Shipped knowledge base in canonical form: the 14-criterion registry and
/// six techniques. Technique values are illustrative fixture data.
pub const DEFAULT_KB_JSON: &str = include_str!("../../data/default_kb.json");

pub fn family_label(family: &str) -> Option<&'static str> {
    match family {
        "f1" => Some("model"),
        "f2" => Some("general"),
        "f3" => Some("structure"),
        "f4" => Some("resources"),
        "f5" => Some("views"),
        _ => None,
    }
}

pub fn default_kb() -> KnowledgeBase {
    parse_kb(DEFAULT_KB_JSON).expect("shipped knowledge base is valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_shape() {
        let kb = default_kb();
        let sizes: Vec<usize> = FAMILIES
            .iter()
            .map(|f| kb.criteria.iter().filter(|c| c.family == *f).count())
            .collect();
        assert_eq!(sizes, vec![4, 3, 2, 1, 4]);
        let ids: Vec<&str> = kb.criteria.iter().map(|c| c.id.as_str()).collect();
        assert_eq!(
            ids,
            [
                "f11", "f12", "f13", "f14", "f21", "f22", "f23", "f31", "f32", "f41", "f51", "f52",
                "f53", "f54"
            ]
        );
        assert_eq!(kb.criterion("f31").unwrap().label, "decision flow");
        assert_eq!(kb.criterion("f32").unwrap().label, "decision function");
    }

    #[test]
    fn default_scale_is_strictly_increasing() {
        let kb = default_kb();
        let scale = kb.scale(DEFAULT_SCALE_ID).unwrap();
        let labels: Vec<_> = scale.labels().collect();
        assert_eq!(labels, ["unknown", "weak", "partial", "good", "total"]);
        assert!(scale.levels.windows(2).all(|w| w[0].score < w[1].score));
    }

    #[test]
    fn cimosa_structure_values() {
        let kb = default_kb();
        let cimosa = kb.instance("CIMOSA").unwrap();
        assert_eq!(cimosa.values["f31"], "unknown");
        assert_eq!(cimosa.values["f32"], "partial");
    }
}
