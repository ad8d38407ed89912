use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use super::preference::PreferenceFunction;
use super::McdaError;
use crate::rational::Rational;

/// A candidate being ranked.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Alternative {
    pub id: String,
    pub label: String,
}

impl Alternative {
    pub fn new(id: impl Into<String>, label: impl Into<String>) -> Self {
        Alternative {
            id: id.into(),
            label: label.into(),
        }
    }

    /// Alternative whose label is its id.
    pub fn named(id: impl Into<String>) -> Self {
        let id = id.into();
        Alternative {
            label: id.clone(),
            id,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    #[default]
    Maximize,
    Minimize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CriterionSpec {
    pub id: String,
    pub weight: Rational,
    #[serde(default)]
    pub direction: Direction,
    #[serde(default)]
    pub function: PreferenceFunction,
}

impl CriterionSpec {
    /// Maximized criterion with a Usual function and the given raw weight.
    pub fn new(id: impl Into<String>, weight: Rational) -> Self {
        CriterionSpec {
            id: id.into(),
            weight,
            direction: Direction::Maximize,
            function: PreferenceFunction::Usual,
        }
    }

    pub fn with_direction(mut self, direction: Direction) -> Self {
        self.direction = direction;
        self
    }

    pub fn with_function(mut self, function: PreferenceFunction) -> Self {
        self.function = function;
        self
    }
}

/// Alternatives × criteria score matrix.
///
/// Construction validates dimensions, ids, thresholds and weights, and
/// normalizes weights so they sum to exactly one. Fields are read-only.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PerformanceTable {
    alternatives: Vec<Alternative>,
    criteria: Vec<CriterionSpec>,
    scores: Vec<Vec<Rational>>,
}

impl PerformanceTable {
    pub fn new(
        alternatives: Vec<Alternative>,
        mut criteria: Vec<CriterionSpec>,
        scores: Vec<Vec<Rational>>,
    ) -> Result<Self, McdaError> {
        if alternatives.len() < 2 {
            return Err(McdaError::TooFewAlternatives {
                found: alternatives.len(),
            });
        }
        if criteria.is_empty() {
            return Err(McdaError::NoCriteria);
        }
        let mut seen = HashSet::new();
        for alt in &alternatives {
            if alt.id.is_empty() {
                return Err(McdaError::EmptyId);
            }
            if !seen.insert(alt.id.as_str()) {
                return Err(McdaError::DuplicateId { id: alt.id.clone() });
            }
        }
        let mut seen = HashSet::new();
        for c in &criteria {
            if c.id.is_empty() {
                return Err(McdaError::EmptyId);
            }
            if !seen.insert(c.id.as_str()) {
                return Err(McdaError::DuplicateId { id: c.id.clone() });
            }
            c.function
                .check()
                .map_err(|reason| McdaError::InvalidThreshold {
                    criterion: c.id.clone(),
                    reason,
                })?;
            if c.weight.is_negative() {
                return Err(McdaError::NegativeWeight {
                    criterion: c.id.clone(),
                });
            }
        }
        if scores.len() != alternatives.len() {
            return Err(McdaError::DimensionMismatch {
                expected: (alternatives.len(), criteria.len()),
                row: None,
                found: scores.len(),
            });
        }
        if let Some((row, r)) = scores
            .iter()
            .enumerate()
            .find(|(_, r)| r.len() != criteria.len())
        {
            return Err(McdaError::DimensionMismatch {
                expected: (alternatives.len(), criteria.len()),
                row: Some(row),
                found: r.len(),
            });
        }

        let total: Rational = criteria.iter().map(|c| &c.weight).sum();
        if !total.is_positive() {
            return Err(McdaError::ZeroWeights);
        }
        for c in &mut criteria {
            c.weight = &c.weight / &total;
        }

        Ok(PerformanceTable {
            alternatives,
            criteria,
            scores,
        })
    }

    /// Table with equal weights, Maximize direction and Usual functions on
    /// every criterion.
    pub fn with_equal_weights(
        alternatives: Vec<Alternative>,
        criterion_ids: Vec<String>,
        scores: Vec<Vec<Rational>>,
    ) -> Result<Self, McdaError> {
        let criteria = criterion_ids
            .into_iter()
            .map(|id| CriterionSpec::new(id, Rational::one()))
            .collect();
        Self::new(alternatives, criteria, scores)
    }

    pub fn alternatives(&self) -> &[Alternative] {
        &self.alternatives
    }

    pub fn criteria(&self) -> &[CriterionSpec] {
        &self.criteria
    }

    pub fn scores(&self) -> &[Vec<Rational>] {
        &self.scores
    }

    pub fn score(&self, alternative: usize, criterion: usize) -> &Rational {
        &self.scores[alternative][criterion]
    }

    pub fn num_alternatives(&self) -> usize {
        self.alternatives.len()
    }

    pub fn num_criteria(&self) -> usize {
        self.criteria.len()
    }

    pub fn alternative_index(&self, id: &str) -> Option<usize> {
        self.alternatives.iter().position(|a| a.id == id)
    }

    pub fn criterion_index(&self, id: &str) -> Option<usize> {
        self.criteria.iter().position(|c| c.id == id)
    }

    /// Oriented difference on criterion `j`: positive means `i` is better
    /// than `k`.
    pub fn directed_difference(&self, j: usize, i: usize, k: usize) -> Result<Rational, McdaError> {
        let (m, n) = (self.num_alternatives(), self.num_criteria());
        if j >= n {
            return Err(McdaError::IndexOutOfRange {
                what: "criterion",
                index: j,
                len: n,
            });
        }
        for idx in [i, k] {
            if idx >= m {
                return Err(McdaError::IndexOutOfRange {
                    what: "alternative",
                    index: idx,
                    len: m,
                });
            }
        }
        Ok(self.oriented(j, i, k))
    }

    // unchecked variant for the hot loop
    pub(crate) fn oriented(&self, j: usize, i: usize, k: usize) -> Rational {
        let (a, b) = (&self.scores[i][j], &self.scores[k][j]);
        match self.criteria[j].direction {
            Direction::Maximize => a - b,
            Direction::Minimize => b - a,
        }
    }

    /// Copy of the table restricted to the given criterion indices, with
    /// weights renormalized over the kept criteria.
    pub fn select_criteria(&self, keep: &[usize]) -> Result<Self, McdaError> {
        let n = self.num_criteria();
        if let Some(&bad) = keep.iter().find(|&&j| j >= n) {
            return Err(McdaError::IndexOutOfRange {
                what: "criterion",
                index: bad,
                len: n,
            });
        }
        let criteria = keep.iter().map(|&j| self.criteria[j].clone()).collect();
        let scores = self
            .scores
            .iter()
            .map(|row| keep.iter().map(|&j| row[j].clone()).collect())
            .collect();
        Self::new(self.alternatives.clone(), criteria, scores)
    }
}

impl<'de> Deserialize<'de> for PerformanceTable {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(deny_unknown_fields)]
        struct Raw {
            alternatives: Vec<Alternative>,
            criteria: Vec<CriterionSpec>,
            scores: Vec<Vec<Rational>>,
        }
        let raw = Raw::deserialize(deserializer)?;
        PerformanceTable::new(raw.alternatives, raw.criteria, raw.scores)
            .map_err(serde::de::Error::custom)
    }
}
