//! PROMETHEE I/II over exact rationals.
//!
//! The pipeline is `PerformanceTable` → [`preference_index`] →
//! [`flows`] → [`rank_complete`] / [`rank_partial`]. Every step is a pure
//! function; nothing is rounded until display.

mod flows;
mod preference;
mod ranking;
mod table;

pub use flows::{criterion_degrees, flows, preference_index, CredibilityMatrix, Flow, FlowTable};
pub use preference::{PreferenceFunction, GAUSSIAN_DENOMINATOR};
pub use ranking::{rank_complete, rank_partial, CompleteRanking, PairRelation, PartialRanking};
pub use table::{Alternative, CriterionSpec, Direction, PerformanceTable};

use crate::ErrorKind;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum McdaError {
    #[error("ranking needs at least two alternatives (got {found})")]
    TooFewAlternatives { found: usize },
    #[error("a performance table needs at least one criterion")]
    NoCriteria,
    #[error("all criterion weights are zero")]
    ZeroWeights,
    #[error("criterion {criterion}: weight must be non-negative")]
    NegativeWeight { criterion: String },
    #[error("criterion {criterion}: invalid preference thresholds: {reason}")]
    InvalidThreshold { criterion: String, reason: String },
    #[error("duplicate id {id:?}")]
    DuplicateId { id: String },
    #[error("empty id")]
    EmptyId,
    #[error("score matrix shape mismatch: expected {expected:?}, row {row:?} has {found}")]
    DimensionMismatch {
        expected: (usize, usize),
        row: Option<usize>,
        found: usize,
    },
    #[error("{what} index {index} out of range (len {len})")]
    IndexOutOfRange {
        what: &'static str,
        index: usize,
        len: usize,
    },
    #[error("inconsistent ranking data: {0}")]
    Inconsistent(String),
}

impl McdaError {
    pub fn code(&self) -> &'static str {
        match self {
            McdaError::TooFewAlternatives { .. } => "TOO_FEW_ALTERNATIVES",
            McdaError::NoCriteria => "NO_CRITERIA",
            McdaError::ZeroWeights => "ZERO_WEIGHTS",
            McdaError::NegativeWeight { .. } => "NEGATIVE_WEIGHT",
            McdaError::InvalidThreshold { .. } => "INVALID_THRESHOLD",
            McdaError::DuplicateId { .. } => "DUPLICATE_ID",
            McdaError::EmptyId => "EMPTY_ID",
            McdaError::DimensionMismatch { .. } => "DIMENSION_MISMATCH",
            McdaError::IndexOutOfRange { .. } => "INDEX_OUT_OF_RANGE",
            McdaError::Inconsistent(_) => "INCONSISTENT",
        }
    }

    pub fn kind(&self) -> ErrorKind {
        match self {
            McdaError::TooFewAlternatives { .. }
            | McdaError::NoCriteria
            | McdaError::ZeroWeights
            | McdaError::IndexOutOfRange { .. } => ErrorKind::Usage,
            McdaError::NegativeWeight { .. } | McdaError::InvalidThreshold { .. } => {
                ErrorKind::Config
            }
            _ => ErrorKind::Data,
        }
    }
}

/// All outputs of one ranking run over a table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outranking {
    pub credibility: CredibilityMatrix,
    pub flows: FlowTable,
    pub complete: CompleteRanking,
    pub partial: PartialRanking,
}

pub fn outrank(table: &PerformanceTable) -> Result<Outranking, McdaError> {
    let credibility = preference_index(table);
    let flows = flows(&credibility)?;
    Ok(Outranking {
        complete: rank_complete(&flows),
        partial: rank_partial(&flows),
        credibility,
        flows,
    })
}
