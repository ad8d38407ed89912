use super::{KbError, KnowledgeBase, ValueScale};
use crate::mcda::{Alternative, CriterionSpec, PerformanceTable};
use crate::rational::Rational;

/// Exact lookup of a qualitative label in a scale.
pub fn qualitative_to_score(label: &str, scale: &ValueScale) -> Result<i64, KbError> {
    scale.score_of(label).ok_or_else(|| KbError::UnknownLabel {
        label: label.to_string(),
        scale: scale.id.clone(),
    })
}

/// Resolves the selection to alternatives and a score matrix in the
/// requested order. Every `(instance, criterion)` gap is reported at once.
pub fn score_matrix<A: AsRef<str>, C: AsRef<str>>(
    kb: &KnowledgeBase,
    alternatives: &[A],
    criteria: &[C],
) -> Result<(Vec<Alternative>, Vec<Vec<Rational>>), KbError> {
    if alternatives.is_empty() {
        return Err(KbError::EmptySelection("alternative"));
    }
    if criteria.is_empty() {
        return Err(KbError::EmptySelection("criterion"));
    }
    let instances = alternatives
        .iter()
        .map(|id| {
            kb.instance(id.as_ref())
                .ok_or_else(|| KbError::UnknownInstance {
                    id: id.as_ref().to_string(),
                })
        })
        .collect::<Result<Vec<_>, _>>()?;
    let scales = criteria
        .iter()
        .map(|id| {
            let id = id.as_ref();
            let def = kb
                .criterion(id)
                .ok_or_else(|| KbError::UnknownCriterion { id: id.to_string() })?;
            kb.scale(&def.scale).ok_or_else(|| {
                KbError::Usage(format!("criterion {id:?} has no scale {:?}", def.scale))
            })
        })
        .collect::<Result<Vec<_>, _>>()?;

    let mut gaps = Vec::new();
    let mut scores = Vec::with_capacity(instances.len());
    for inst in &instances {
        let mut row = Vec::with_capacity(criteria.len());
        for (crit, scale) in criteria.iter().zip(&scales) {
            match inst.values.get(crit.as_ref()) {
                Some(label) => {
                    row.push(Rational::from_integer(qualitative_to_score(label, scale)?))
                }
                None => gaps.push((inst.id.clone(), crit.as_ref().to_string())),
            }
        }
        scores.push(row);
    }
    if !gaps.is_empty() {
        return Err(KbError::MissingValues(gaps));
    }
    let alternatives = instances
        .iter()
        .map(|i| Alternative::new(i.id.clone(), i.label.clone()))
        .collect();
    Ok((alternatives, scores))
}

/// Performance table for the selection. Without `weights` every criterion
/// gets the same weight; criteria are maximized with the Usual function.
pub fn build_performance_table<A: AsRef<str>, C: AsRef<str>>(
    kb: &KnowledgeBase,
    alternatives: &[A],
    criteria: &[C],
    weights: Option<&[Rational]>,
) -> Result<PerformanceTable, KbError> {
    let (alts, scores) = score_matrix(kb, alternatives, criteria)?;
    if let Some(w) = weights {
        if w.len() != criteria.len() {
            return Err(KbError::Usage(format!(
                "{} weights given for {} criteria",
                w.len(),
                criteria.len()
            )));
        }
    }
    let specs = criteria
        .iter()
        .enumerate()
        .map(|(j, c)| {
            let weight = weights.map_or_else(Rational::one, |w| w[j].clone());
            CriterionSpec::new(c.as_ref(), weight)
        })
        .collect();
    Ok(PerformanceTable::new(alts, specs, scores)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kb::{default_kb, DEFAULT_SCALE_ID};

    #[test]
    fn default_scale_lookups() {
        let kb = default_kb();
        let scale = kb.scale(DEFAULT_SCALE_ID).unwrap();
        assert_eq!(qualitative_to_score("unknown", scale).unwrap(), 0);
        assert_eq!(qualitative_to_score("partial", scale).unwrap(), 2);
        assert_eq!(qualitative_to_score("total", scale).unwrap(), 4);
        let err = qualitative_to_score("superb", scale).unwrap_err();
        assert!(err.to_string().contains("superb") && err.to_string().contains("default"));
    }

    #[test]
    fn equal_weights_by_default() {
        let kb = default_kb();
        let t = build_performance_table(&kb, &["PERA", "GRAI"], &["f12", "f31"], None).unwrap();
        assert_eq!(t.num_alternatives(), 2);
        assert!(t.criteria().iter().all(|c| c.weight == Rational::new(1, 2)));
        assert_eq!(t.alternatives()[0].id, "PERA");
        assert_eq!(t.criteria()[1].id, "f31");
    }

    #[test]
    fn ten_criterion_selection() {
        let kb = default_kb();
        let crits = [
            "f12", "f13", "f21", "f22", "f31", "f32", "f51", "f52", "f53", "f54",
        ];
        let alts = ["MERISE", "GRAI", "CIMOSA", "PERA", "GERAM"];
        let t = build_performance_table(&kb, &alts, &crits, None).unwrap();
        assert_eq!((t.num_alternatives(), t.num_criteria()), (5, 10));
        assert!(t
            .criteria()
            .iter()
            .all(|c| c.weight == Rational::new(1, 10)));
        // CIMOSA: decision flow unknown, decision function partial
        assert_eq!(*t.score(2, 4), 0);
        assert_eq!(*t.score(2, 5), 2);
    }

    #[test]
    fn all_gaps_are_listed() {
        let mut kb = default_kb();
        kb.instances[0].values.remove("f12");
        kb.instances[1].values.remove("f13");
        let first = kb.instances[0].id.clone();
        let second = kb.instances[1].id.clone();
        let err =
            build_performance_table(&kb, &[&first, &second], &["f12", "f13"], None).unwrap_err();
        match err {
            KbError::MissingValues(gaps) => assert_eq!(
                gaps,
                vec![(first, "f12".to_string()), (second, "f13".to_string())]
            ),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn selection_errors() {
        let kb = default_kb();
        let none: [&str; 0] = [];
        assert_eq!(
            build_performance_table(&kb, &none, &["f12"], None)
                .unwrap_err()
                .code(),
            "EMPTY_SELECTION"
        );
        assert_eq!(
            build_performance_table(&kb, &["PERA", "ZACHMAN"], &["f12"], None)
                .unwrap_err()
                .code(),
            "UNKNOWN_INSTANCE"
        );
        assert_eq!(
            build_performance_table(&kb, &["PERA", "GRAI"], &["f12"], Some(&[]))
                .unwrap_err()
                .code(),
            "USAGE"
        );
    }
}
