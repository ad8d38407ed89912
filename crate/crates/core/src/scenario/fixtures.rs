//! The shipped experiment scenarios.
//!
//! * `experiment-1`: five techniques, ten criteria.
//! * `experiment-2`: experiment 1 plus GIM.
//! * `experiment-3-five` / `experiment-3-six`: both alternative sets with
//!   the two decision criteria (`f31`, `f32`) removed.

use super::Scenario;

pub const EXPERIMENT_1_JSON: &str = include_str!("../../data/scenarios/experiment-1.json");
pub const EXPERIMENT_2_JSON: &str = include_str!("../../data/scenarios/experiment-2.json");
pub const EXPERIMENT_3_FIVE_JSON: &str =
    include_str!("../../data/scenarios/experiment-3-five.json");
pub const EXPERIMENT_3_SIX_JSON: &str = include_str!("../../data/scenarios/experiment-3-six.json");

fn load(text: &str) -> Scenario {
    Scenario::from_json(text).expect("shipped scenario parses")
}

pub fn experiment_1() -> Scenario {
    load(EXPERIMENT_1_JSON)
}

pub fn experiment_2() -> Scenario {
    load(EXPERIMENT_2_JSON)
}

pub fn experiment_3_five() -> Scenario {
    load(EXPERIMENT_3_FIVE_JSON)
}

pub fn experiment_3_six() -> Scenario {
    load(EXPERIMENT_3_SIX_JSON)
}

pub fn all() -> Vec<Scenario> {
    vec![
        experiment_1(),
        experiment_2(),
        experiment_3_five(),
        experiment_3_six(),
    ]
}

pub fn by_name(name: &str) -> Option<Scenario> {
    all().into_iter().find(|s| s.name == name)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shapes() {
        let sizes: Vec<_> = all()
            .iter()
            .map(|s| (s.alternatives.len(), s.criteria.len()))
            .collect();
        assert_eq!(sizes, vec![(5, 10), (6, 10), (5, 8), (6, 8)]);
        let e3 = experiment_3_six();
        assert!(!e3.criteria.iter().any(|c| c == "f31" || c == "f32"));
        assert_eq!(
            experiment_2()
                .without_criterion("f31")
                .without_criterion("f32")
                .criteria,
            e3.criteria
        );
        assert!(by_name("experiment-2").is_some());
        assert!(by_name("nope").is_none());
    }
}
