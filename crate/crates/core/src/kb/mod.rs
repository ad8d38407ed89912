//! Knowledge base of techniques and hierarchical criteria.
//!
//! The structure mirrors a small domain ontology: a root concept `F` with
//! the criterion families `f1`–`f5` below it, criteria as attributes of
//! those families, and a concept `T` whose instances are the techniques
//! being evaluated. Each technique assigns a qualitative label to some
//! criteria; a per-criterion [`ValueScale`] turns labels into scores on the
//! 0–4 scale.
//!
//! A [`KnowledgeBase`] is plain data. [`parse_kb`] only hands out values
//! that pass [`validate_kb`]; values built by hand can be checked the same
//! way.

mod defaults;
mod graph;
mod io;
mod store;
mod table;
mod validate;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

pub use defaults::{default_kb, family_label, DEFAULT_KB_JSON, DEFAULT_SCALE_ID, FAMILIES};
pub use graph::{export_graph, GraphDocument, GraphEdge, GraphNode};
pub use io::{parse_kb, parse_kb_unvalidated, serialize_kb};
pub use store::KbStore;
pub use table::{build_performance_table, qualitative_to_score, score_matrix};
pub use validate::{validate_kb, Violation, ViolationCode};

use crate::mcda::McdaError;
use crate::ErrorKind;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct KbMeta {
    pub name: String,
    pub version: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScaleLevel {
    pub label: String,
    pub score: i64,
}

/// Ordered qualitative labels with their scores in `0..=4`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ValueScale {
    pub id: String,
    pub levels: Vec<ScaleLevel>,
}

impl ValueScale {
    pub fn score_of(&self, label: &str) -> Option<i64> {
        self.levels
            .iter()
            .find(|l| l.label == label)
            .map(|l| l.score)
    }

    pub fn labels(&self) -> impl Iterator<Item = &str> {
        self.levels.iter().map(|l| l.label.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CriterionDef {
    pub id: String,
    pub family: String,
    pub label: String,
    /// Id of the [`ValueScale`] used to score this criterion.
    pub scale: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TechniqueInstance {
    pub id: String,
    pub label: String,
    /// Criterion id → qualitative label.
    #[serde(default)]
    pub values: BTreeMap<String, String>,
}

impl TechniqueInstance {
    pub fn new(id: impl Into<String>, label: impl Into<String>) -> Self {
        TechniqueInstance {
            id: id.into(),
            label: label.into(),
            values: BTreeMap::new(),
        }
    }

    pub fn with_value(mut self, criterion: impl Into<String>, label: impl Into<String>) -> Self {
        self.values.insert(criterion.into(), label.into());
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct KnowledgeBase {
    pub meta: KbMeta,
    pub scales: Vec<ValueScale>,
    pub criteria: Vec<CriterionDef>,
    pub instances: Vec<TechniqueInstance>,
}

impl KnowledgeBase {
    pub fn criterion(&self, id: &str) -> Option<&CriterionDef> {
        self.criteria.iter().find(|c| c.id == id)
    }

    pub fn scale(&self, id: &str) -> Option<&ValueScale> {
        self.scales.iter().find(|s| s.id == id)
    }

    pub fn instance(&self, id: &str) -> Option<&TechniqueInstance> {
        self.instances.iter().find(|i| i.id == id)
    }

    /// Scale of a criterion, if both exist.
    pub fn scale_for(&self, criterion: &str) -> Option<&ValueScale> {
        self.criterion(criterion).and_then(|c| self.scale(&c.scale))
    }

    /// Distinct families in first-appearance order of the registry.
    pub fn families(&self) -> Vec<&str> {
        let mut out: Vec<&str> = Vec::new();
        for c in &self.criteria {
            if !out.contains(&c.family.as_str()) {
                out.push(&c.family);
            }
        }
        out
    }

    /// Returns a new knowledge base with `inst` appended. The receiver is
    /// left untouched.
    pub fn add_instance(&self, inst: TechniqueInstance) -> Result<KnowledgeBase, KbError> {
        if self.instance(&inst.id).is_some() {
            return Err(KbError::DuplicateId { id: inst.id });
        }
        let mut next = self.clone();
        next.instances.push(inst);
        check(&next)?;
        Ok(next)
    }

    /// Returns a new knowledge base where the given values are merged into
    /// instance `id`.
    pub fn set_values(
        &self,
        id: &str,
        values: BTreeMap<String, String>,
    ) -> Result<KnowledgeBase, KbError> {
        let mut next = self.clone();
        let inst = next
            .instances
            .iter_mut()
            .find(|i| i.id == id)
            .ok_or_else(|| KbError::UnknownInstance { id: id.to_string() })?;
        inst.values.extend(values);
        check(&next)?;
        Ok(next)
    }
}

/// Free-function form of [`KnowledgeBase::add_instance`].
pub fn add_instance(kb: &KnowledgeBase, inst: TechniqueInstance) -> Result<KnowledgeBase, KbError> {
    kb.add_instance(inst)
}

fn check(kb: &KnowledgeBase) -> Result<(), KbError> {
    let violations = validate_kb(kb);
    if violations.is_empty() {
        Ok(())
    } else {
        Err(KbError::Invalid(violations))
    }
}

#[derive(Debug, thiserror::Error)]
pub enum KbError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("schema error at line {line}, column {column}: {message}")]
    Schema {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("invalid knowledge base: {}", summarize(.0))]
    Invalid(Vec<Violation>),
    #[error("duplicate id {id:?}")]
    DuplicateId { id: String },
    #[error("unknown instance {id:?}")]
    UnknownInstance { id: String },
    #[error("unknown criterion {id:?}")]
    UnknownCriterion { id: String },
    #[error("label {label:?} is not in scale {scale:?}")]
    UnknownLabel { label: String, scale: String },
    #[error("missing values: {}", .0.iter().map(|(i, c)| format!("({i}, {c})")).collect::<Vec<_>>().join(", "))]
    MissingValues(Vec<(String, String)>),
    #[error("empty {0} selection")]
    EmptySelection(&'static str),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Mcda(#[from] McdaError),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

fn summarize(v: &[Violation]) -> String {
    v.iter()
        .map(|x| format!("{} at {}: {}", x.code.as_str(), x.path, x.message))
        .collect::<Vec<_>>()
        .join("; ")
}

impl KbError {
    pub fn code(&self) -> &'static str {
        match self {
            KbError::Syntax { .. } => "SYNTAX_ERROR",
            KbError::Schema { .. } => "SCHEMA_ERROR",
            KbError::Invalid(v) => v.first().map(|x| x.code.as_str()).unwrap_or("INVALID_KB"),
            KbError::DuplicateId { .. } => "DUPLICATE_ID",
            KbError::UnknownInstance { .. } => "UNKNOWN_INSTANCE",
            KbError::UnknownCriterion { .. } => "UNKNOWN_CRITERION",
            KbError::UnknownLabel { .. } => "UNKNOWN_LABEL",
            KbError::MissingValues(_) => "MISSING_VALUE",
            KbError::EmptySelection(_) => "EMPTY_SELECTION",
            KbError::Usage(_) => "USAGE",
            KbError::Mcda(e) => e.code(),
            KbError::Io { .. } => "IO_ERROR",
        }
    }

    pub fn kind(&self) -> ErrorKind {
        match self {
            KbError::EmptySelection(_) | KbError::Usage(_) => ErrorKind::Usage,
            KbError::Mcda(e) => e.kind(),
            _ => ErrorKind::Data,
        }
    }

    /// Path of the offending element, when one is known.
    pub fn path(&self) -> String {
        match self {
            KbError::Invalid(v) => v.first().map(|x| x.path.clone()).unwrap_or_default(),
            KbError::UnknownInstance { id } => format!("/instances/{id}"),
            KbError::UnknownCriterion { id } => format!("/criteria/{id}"),
            KbError::DuplicateId { id } => format!("/instances/{id}"),
            KbError::MissingValues(gaps) => gaps
                .first()
                .map(|(i, c)| format!("/instances/{i}/values/{c}"))
                .unwrap_or_default(),
            _ => String::new(),
        }
    }
}
