use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use super::defaults::FAMILIES;
use super::KnowledgeBase;

pub const MIN_SCORE: i64 = 0;
pub const MAX_SCORE: i64 = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ViolationCode {
    EmptyId,
    DuplicateId,
    UnknownFamily,
    FamilyMismatch,
    UnknownScale,
    ScaleTooSmall,
    DuplicateLabel,
    ScoreOutOfRange,
    UnknownCriterion,
    UnknownLabel,
}

impl ViolationCode {
    pub fn as_str(self) -> &'static str {
        match self {
            ViolationCode::EmptyId => "EMPTY_ID",
            ViolationCode::DuplicateId => "DUPLICATE_ID",
            ViolationCode::UnknownFamily => "UNKNOWN_FAMILY",
            ViolationCode::FamilyMismatch => "FAMILY_MISMATCH",
            ViolationCode::UnknownScale => "UNKNOWN_SCALE",
            ViolationCode::ScaleTooSmall => "SCALE_TOO_SMALL",
            ViolationCode::DuplicateLabel => "DUPLICATE_LABEL",
            ViolationCode::ScoreOutOfRange => "SCORE_OUT_OF_RANGE",
            ViolationCode::UnknownCriterion => "UNKNOWN_CRITERION",
            ViolationCode::UnknownLabel => "UNKNOWN_LABEL",
        }
    }
}

/// One broken invariant. `path` is a JSON pointer into the KB document.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub code: ViolationCode,
    pub path: String,
    pub message: String,
}

struct Report(Vec<Violation>);

impl Report {
    fn push(&mut self, code: ViolationCode, path: String, message: String) {
        self.0.push(Violation {
            code,
            path,
            message,
        });
    }

    fn id(&mut self, seen: &mut HashSet<String>, id: &str, path: String, what: &str) {
        if id.is_empty() {
            self.push(ViolationCode::EmptyId, path, format!("{what} id is empty"));
        } else if !seen.insert(id.to_string()) {
            self.push(
                ViolationCode::DuplicateId,
                path,
                format!("duplicate {what} id {id:?}"),
            );
        }
    }
}

/// Collects every invariant violation; an empty list means the KB is valid.
pub fn validate_kb(kb: &KnowledgeBase) -> Vec<Violation> {
    let mut report = Report(Vec::new());

    let mut seen = HashSet::new();
    for (si, scale) in kb.scales.iter().enumerate() {
        report.id(&mut seen, &scale.id, format!("/scales/{si}/id"), "scale");
        if scale.levels.len() < 2 {
            report.push(
                ViolationCode::ScaleTooSmall,
                format!("/scales/{si}/levels"),
                format!(
                    "scale {:?} has {} level(s), needs at least 2",
                    scale.id,
                    scale.levels.len()
                ),
            );
        }
        let mut labels = HashSet::new();
        for (li, level) in scale.levels.iter().enumerate() {
            if !labels.insert(level.label.as_str()) {
                report.push(
                    ViolationCode::DuplicateLabel,
                    format!("/scales/{si}/levels/{li}/label"),
                    format!("label {:?} repeated in scale {:?}", level.label, scale.id),
                );
            }
            if !(MIN_SCORE..=MAX_SCORE).contains(&level.score) {
                report.push(
                    ViolationCode::ScoreOutOfRange,
                    format!("/scales/{si}/levels/{li}/score"),
                    format!("score {} outside {MIN_SCORE}..={MAX_SCORE}", level.score),
                );
            }
        }
    }

    let mut seen = HashSet::new();
    for (ci, c) in kb.criteria.iter().enumerate() {
        report.id(&mut seen, &c.id, format!("/criteria/{ci}/id"), "criterion");
        if !FAMILIES.contains(&c.family.as_str()) {
            report.push(
                ViolationCode::UnknownFamily,
                format!("/criteria/{ci}/family"),
                format!(
                    "family {:?} is not one of {}",
                    c.family,
                    FAMILIES.join(", ")
                ),
            );
        } else if !c.id.is_empty() && !id_in_family(&c.id, &c.family) {
            report.push(
                ViolationCode::FamilyMismatch,
                format!("/criteria/{ci}/id"),
                format!(
                    "criterion {:?} does not belong to family {:?}",
                    c.id, c.family
                ),
            );
        }
        if kb.scale(&c.scale).is_none() {
            report.push(
                ViolationCode::UnknownScale,
                format!("/criteria/{ci}/scale"),
                format!(
                    "criterion {:?} references unknown scale {:?}",
                    c.id, c.scale
                ),
            );
        }
    }

    let mut seen = HashSet::new();
    for (ii, inst) in kb.instances.iter().enumerate() {
        report.id(
            &mut seen,
            &inst.id,
            format!("/instances/{ii}/id"),
            "instance",
        );
        for (crit, label) in &inst.values {
            let path = format!("/instances/{ii}/values/{crit}");
            match kb.criterion(crit) {
                None => report.push(
                    ViolationCode::UnknownCriterion,
                    path,
                    format!(
                        "instance {:?} references unknown criterion {crit:?}",
                        inst.id
                    ),
                ),
                Some(def) => {
                    if let Some(scale) = kb.scale(&def.scale) {
                        if scale.score_of(label).is_none() {
                            report.push(
                                ViolationCode::UnknownLabel,
                                path,
                                format!("label {label:?} is not in scale {:?}", scale.id),
                            );
                        }
                    }
                }
            }
        }
    }

    report.0
}

// "f31" belongs to "f3": family prefix followed by at least one digit.
fn id_in_family(id: &str, family: &str) -> bool {
    id.strip_prefix(family)
        .is_some_and(|rest| !rest.is_empty() && rest.chars().all(|c| c.is_ascii_digit()))
}
