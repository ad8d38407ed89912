use serde::{Deserialize, Serialize};

use super::{Scenario, ScenarioError};
use crate::kb::KnowledgeBase;
use crate::mcda::{outrank, CompleteRanking};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepPoint {
    pub weight: Rational,
    pub ranking: CompleteRanking,
}

/// Sweeps the weight of `criterion` over `0, 1/steps, …, 1`.
///
/// The remaining criteria share `1 − t` in proportion to their normalized
/// scenario weights; if they all had zero weight they share it equally.
pub fn weight_sensitivity(
    kb: &KnowledgeBase,
    scenario: &Scenario,
    criterion: &str,
    steps: u32,
) -> Result<Vec<SweepPoint>, ScenarioError> {
    let target = scenario
        .criteria
        .iter()
        .position(|c| c == criterion)
        .ok_or_else(|| {
            scenario.usage(
                "UNKNOWN_CRITERION",
                format!("criterion {criterion:?} is not part of the scenario"),
            )
        })?;
    if steps < 2 {
        return Err(scenario.usage("INVALID_STEPS", format!("steps must be >= 2, got {steps}")));
    }
    let n = scenario.criteria.len();
    if n < 2 {
        return Err(scenario.usage(
            "SINGLE_CRITERION",
            "weight sweep needs at least two criteria".to_string(),
        ));
    }

    let raw = scenario.raw_weights();
    let total: Rational = raw.iter().sum();
    if !total.is_positive() {
        // let the table report it
        scenario.table_with_weights(kb, &raw)?;
    }
    let base: Vec<Rational> = raw.iter().map(|w| w / &total).collect();
    let others: Rational = base
        .iter()
        .enumerate()
        .filter(|(j, _)| *j != target)
        .map(|(_, w)| w)
        .sum();

    let steps_r = Rational::from(steps);
    let mut points = Vec::with_capacity(steps as usize + 1);
    for s in 0..=steps {
        let t = Rational::from(s) / &steps_r;
        let rest = Rational::one() - &t;
        let weights: Vec<Rational> = (0..n)
            .map(|j| {
                if j == target {
                    t.clone()
                } else if others.is_positive() {
                    &base[j] * &rest / &others
                } else {
                    &rest / Rational::from_integer(n as i64 - 1)
                }
            })
            .collect();
        let table = scenario.table_with_weights(kb, &weights)?;
        let ranking = outrank(&table).map_err(|e| scenario.mcda_err(e))?.complete;
        points.push(SweepPoint { weight: t, ranking });
    }
    Ok(points)
}
