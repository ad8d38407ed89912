use serde::{Deserialize, Serialize};

use crate::canonical;
use crate::mcda::{
    flows, preference_index, rank_complete, rank_partial, CompleteRanking, CredibilityMatrix,
    FlowTable, McdaError, PartialRanking, PerformanceTable,
};

/// Net flows are shown with this many decimals.
pub const DISPLAY_DECIMALS: u32 = 3;

/// One line of the human-facing ranking, best first.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RankedFlow {
    /// 1-based position of the indifference class.
    pub rank: usize,
    pub alternative: String,
    pub label: String,
    /// Net flow rounded for display; never used for ordering.
    pub net_display: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RankingReport {
    pub scenario: String,
    pub table: PerformanceTable,
    pub credibility: CredibilityMatrix,
    pub flows: FlowTable,
    pub complete: CompleteRanking,
    pub partial: PartialRanking,
    pub ranked: Vec<RankedFlow>,
}

pub fn report_from_table(
    scenario: &str,
    table: PerformanceTable,
) -> Result<RankingReport, McdaError> {
    let credibility = preference_index(&table);
    let flows = flows(&credibility)?;
    let complete = rank_complete(&flows);
    let partial = rank_partial(&flows);
    let ranked = ranked_flows(&table, &flows, &complete);
    Ok(RankingReport {
        scenario: scenario.to_string(),
        table,
        credibility,
        flows,
        complete,
        partial,
        ranked,
    })
}

fn ranked_flows(
    table: &PerformanceTable,
    flows: &FlowTable,
    complete: &CompleteRanking,
) -> Vec<RankedFlow> {
    let mut out = Vec::with_capacity(flows.len());
    for (class_idx, class) in complete.classes.iter().enumerate() {
        for id in class {
            let label = table
                .alternatives()
                .iter()
                .find(|a| &a.id == id)
                .map(|a| a.label.clone())
                .unwrap_or_else(|| id.clone());
            let net = flows.get(id).map(|f| &f.net);
            out.push(RankedFlow {
                rank: class_idx + 1,
                alternative: id.clone(),
                label,
                net_display: net
                    .map(|n| n.to_decimal_string(DISPLAY_DECIMALS))
                    .unwrap_or_default(),
            });
        }
    }
    out
}

impl RankingReport {
    /// Recomputes every derived component from the embedded table and
    /// checks it matches.
    pub fn verify(&self) -> Result<(), McdaError> {
        let fresh = report_from_table(&self.scenario, self.table.clone())?;
        let mismatch = |what: &str| {
            Err(McdaError::Inconsistent(format!(
                "{what} does not match the table"
            )))
        };
        if fresh.credibility != self.credibility {
            return mismatch("credibility matrix");
        }
        if fresh.flows != self.flows {
            return mismatch("flow table");
        }
        if fresh.complete != self.complete {
            return mismatch("complete ranking");
        }
        if fresh.partial != self.partial {
            return mismatch("partial ranking");
        }
        if fresh.ranked != self.ranked {
            return mismatch("display ranking");
        }
        self.credibility.check()?;
        self.flows.check()?;
        self.partial.check()
    }

    pub fn to_canonical_json(&self) -> String {
        canonical::to_string(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }
}
