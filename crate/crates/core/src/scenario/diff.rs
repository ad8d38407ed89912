use serde::{Deserialize, Serialize};

use super::RankingReport;
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlternativeDelta {
    pub alternative: String,
    /// 0-based class index in the first report.
    pub class_before: usize,
    pub class_after: usize,
    pub net_before: Rational,
    pub net_after: Rational,
    pub net_change: Rational,
}

/// `ahead` was strictly ahead of `behind` in the first report and is
/// strictly behind it in the second.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Inversion {
    pub ahead: String,
    pub behind: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankDiff {
    pub before: String,
    pub after: String,
    /// Alternatives present in both reports, in the first report's order.
    pub shared: Vec<AlternativeDelta>,
    pub entered: Vec<String>,
    pub departed: Vec<String>,
    pub inversions: Vec<Inversion>,
}

impl RankDiff {
    /// No class moves, no flow changes, no inversions, same membership.
    pub fn is_unchanged(&self) -> bool {
        self.entered.is_empty()
            && self.departed.is_empty()
            && self.inversions.is_empty()
            && self
                .shared
                .iter()
                .all(|d| d.class_before == d.class_after && d.net_change.is_zero())
    }
}

pub fn diff_rankings(a: &RankingReport, b: &RankingReport) -> RankDiff {
    let in_b = |id: &str| b.flows.get(id).is_some();
    let in_a = |id: &str| a.flows.get(id).is_some();

    let order_a: Vec<&str> = a.complete.order().collect();
    let shared_ids: Vec<&str> = order_a.iter().copied().filter(|id| in_b(id)).collect();

    let shared = shared_ids
        .iter()
        .map(|&id| {
            let net_before = a.flows.get(id).map(|f| f.net.clone()).unwrap_or_default();
            let net_after = b.flows.get(id).map(|f| f.net.clone()).unwrap_or_default();
            AlternativeDelta {
                alternative: id.to_string(),
                class_before: a.complete.class_of(id).unwrap_or_default(),
                class_after: b.complete.class_of(id).unwrap_or_default(),
                net_change: &net_after - &net_before,
                net_before,
                net_after,
            }
        })
        .collect::<Vec<_>>();

    let entered = b
        .complete
        .order()
        .filter(|id| !in_a(id))
        .map(str::to_string)
        .collect();
    let departed = order_a
        .iter()
        .filter(|id| !in_b(id))
        .map(|s| s.to_string())
        .collect();

    let mut inversions = Vec::new();
    for (x_idx, x) in shared.iter().enumerate() {
        for y in &shared[x_idx + 1..] {
            // shared is sorted by the first ranking, so x is never behind y there
            if x.class_before < y.class_before && x.class_after > y.class_after {
                inversions.push(Inversion {
                    ahead: x.alternative.clone(),
                    behind: y.alternative.clone(),
                });
            }
        }
    }

    RankDiff {
        before: a.scenario.clone(),
        after: b.scenario.clone(),
        shared,
        entered,
        departed,
        inversions,
    }
}
