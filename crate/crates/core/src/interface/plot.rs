use serde::{Deserialize, Serialize};

use crate::scenario::{RankingReport, DISPLAY_DECIMALS};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PlotKind {
    Points,
    Histogram,
}

impl std::str::FromStr for PlotKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "points" => Ok(PlotKind::Points),
            "histogram" => Ok(PlotKind::Histogram),
            other => Err(format!("unknown plot kind {other:?}")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PlotPoint {
    pub label: String,
    pub alternative: String,
    /// Net flow rounded to three decimals.
    pub value: f64,
    /// 0-based indifference class; equal groups share a band.
    pub group: usize,
}

/// Chart-ready ranking, best first.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PlotData {
    pub kind: PlotKind,
    pub title: String,
    pub series: Vec<PlotPoint>,
}

pub fn plot_data(report: &RankingReport, kind: PlotKind) -> PlotData {
    let mut series = Vec::with_capacity(report.flows.len());
    for (group, class) in report.complete.classes.iter().enumerate() {
        for id in class {
            let label = report
                .table
                .alternatives()
                .iter()
                .find(|a| &a.id == id)
                .map_or_else(|| id.clone(), |a| a.label.clone());
            let value = report
                .flows
                .get(id)
                .map_or(0.0, |f| f.net.to_rounded_f64(DISPLAY_DECIMALS));
            series.push(PlotPoint {
                label,
                alternative: id.clone(),
                value,
                group,
            });
        }
    }
    PlotData {
        kind,
        title: format!(
            "Ranking of {} alternatives following {} criteria",
            report.table.num_alternatives(),
            report.table.num_criteria()
        ),
        series,
    }
}
