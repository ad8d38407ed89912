//! What-if layer: scenarios over a knowledge base, ranking reports, report
//! diffs and weight sweeps.

mod diff;
pub mod fixtures;
mod report;
mod sensitivity;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

pub use diff::{diff_rankings, AlternativeDelta, Inversion, RankDiff};
pub use report::{report_from_table, RankedFlow, RankingReport, DISPLAY_DECIMALS};
pub use sensitivity::{weight_sensitivity, SweepPoint};

use crate::kb::{score_matrix, KbError, KnowledgeBase};
use crate::mcda::{CriterionSpec, McdaError, PerformanceTable, PreferenceFunction};
use crate::rational::Rational;
use crate::ErrorKind;

/// A selection of alternatives and criteria, with optional overrides.
///
/// Criteria absent from `weights` keep the default relative weight 1; the
/// resulting weights are normalized to sum to one.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Scenario {
    pub name: String,
    pub alternatives: Vec<String>,
    pub criteria: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<BTreeMap<String, Rational>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub functions: Option<BTreeMap<String, PreferenceFunction>>,
}

impl Scenario {
    pub fn new<A, C>(name: impl Into<String>, alternatives: A, criteria: C) -> Self
    where
        A: IntoIterator,
        A::Item: Into<String>,
        C: IntoIterator,
        C::Item: Into<String>,
    {
        Scenario {
            name: name.into(),
            alternatives: alternatives.into_iter().map(Into::into).collect(),
            criteria: criteria.into_iter().map(Into::into).collect(),
            weights: None,
            functions: None,
        }
    }

    pub fn from_json(text: &str) -> Result<Self, ScenarioError> {
        serde_json::from_str(text).map_err(|e| ScenarioError::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })
    }

    pub fn with_weight(mut self, criterion: impl Into<String>, weight: Rational) -> Self {
        self.weights
            .get_or_insert_with(BTreeMap::new)
            .insert(criterion.into(), weight);
        self
    }

    pub fn with_function(mut self, criterion: impl Into<String>, f: PreferenceFunction) -> Self {
        self.functions
            .get_or_insert_with(BTreeMap::new)
            .insert(criterion.into(), f);
        self
    }

    /// Same scenario without criterion `id` (and its overrides).
    pub fn without_criterion(&self, id: &str) -> Scenario {
        let mut s = self.clone();
        s.criteria.retain(|c| c != id);
        if let Some(w) = &mut s.weights {
            w.remove(id);
        }
        if let Some(f) = &mut s.functions {
            f.remove(id);
        }
        s
    }

    /// Raw (unnormalized) weight of each selected criterion.
    pub fn raw_weights(&self) -> Vec<Rational> {
        self.criteria
            .iter()
            .map(|c| {
                self.weights
                    .as_ref()
                    .and_then(|w| w.get(c))
                    .cloned()
                    .unwrap_or_else(Rational::one)
            })
            .collect()
    }

    fn check_overrides(&self) -> Result<(), ScenarioError> {
        let keys = self
            .weights
            .iter()
            .flat_map(|w| w.keys())
            .chain(self.functions.iter().flat_map(|f| f.keys()));
        for key in keys {
            if !self.criteria.contains(key) {
                return Err(self.usage(
                    "UNKNOWN_CRITERION",
                    format!("override for criterion {key:?} which is not selected"),
                ));
            }
        }
        Ok(())
    }

    fn usage(&self, code: &'static str, message: String) -> ScenarioError {
        ScenarioError::Usage {
            scenario: self.name.clone(),
            code,
            message,
        }
    }

    fn kb_err(&self, source: KbError) -> ScenarioError {
        ScenarioError::Kb {
            scenario: self.name.clone(),
            source,
        }
    }

    fn mcda_err(&self, source: McdaError) -> ScenarioError {
        ScenarioError::Mcda {
            scenario: self.name.clone(),
            source,
        }
    }

    /// Performance table for this scenario with the given raw weights.
    pub(crate) fn table_with_weights(
        &self,
        kb: &KnowledgeBase,
        weights: &[Rational],
    ) -> Result<PerformanceTable, ScenarioError> {
        self.check_overrides()?;
        let (alternatives, scores) =
            score_matrix(kb, &self.alternatives, &self.criteria).map_err(|e| self.kb_err(e))?;
        let specs = self
            .criteria
            .iter()
            .zip(weights)
            .map(|(id, w)| {
                let mut spec = CriterionSpec::new(id.clone(), w.clone());
                if let Some(f) = self.functions.as_ref().and_then(|f| f.get(id)) {
                    spec.function = f.clone();
                }
                spec
            })
            .collect();
        PerformanceTable::new(alternatives, specs, scores).map_err(|e| self.mcda_err(e))
    }

    pub fn performance_table(&self, kb: &KnowledgeBase) -> Result<PerformanceTable, ScenarioError> {
        self.table_with_weights(kb, &self.raw_weights())
    }
}

/// Runs the full pipeline for a scenario against a KB snapshot.
pub fn run_scenario(
    kb: &KnowledgeBase,
    scenario: &Scenario,
) -> Result<RankingReport, ScenarioError> {
    let table = scenario.performance_table(kb)?;
    report_from_table(&scenario.name, table).map_err(|e| scenario.mcda_err(e))
}

#[derive(Debug, thiserror::Error)]
pub enum ScenarioError {
    #[error("scenario {scenario:?}: {source}")]
    Kb {
        scenario: String,
        #[source]
        source: KbError,
    },
    #[error("scenario {scenario:?}: {source}")]
    Mcda {
        scenario: String,
        #[source]
        source: McdaError,
    },
    #[error("scenario {scenario:?}: {message}")]
    Usage {
        scenario: String,
        code: &'static str,
        message: String,
    },
    #[error("invalid scenario document at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

impl ScenarioError {
    pub fn code(&self) -> &'static str {
        match self {
            ScenarioError::Kb { source, .. } => source.code(),
            ScenarioError::Mcda { source, .. } => source.code(),
            ScenarioError::Usage { code, .. } => code,
            ScenarioError::Parse { .. } => "SYNTAX_ERROR",
        }
    }

    pub fn kind(&self) -> ErrorKind {
        match self {
            ScenarioError::Kb { source, .. } => source.kind(),
            ScenarioError::Mcda { source, .. } => source.kind(),
            ScenarioError::Usage { .. } => ErrorKind::Usage,
            ScenarioError::Parse { .. } => ErrorKind::Data,
        }
    }

    pub fn path(&self) -> String {
        match self {
            ScenarioError::Kb { source, .. } => source.path(),
            _ => String::new(),
        }
    }
}
