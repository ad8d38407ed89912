use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use super::flows::FlowTable;
use super::McdaError;

/// Complete preorder by decreasing net flow. Alternatives with exactly
/// equal net flow share a class; members keep their input order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CompleteRanking {
    pub classes: Vec<Vec<String>>,
}

impl CompleteRanking {
    /// Zero-based index of the class containing `id`.
    pub fn class_of(&self, id: &str) -> Option<usize> {
        self.classes
            .iter()
            .position(|class| class.iter().any(|a| a == id))
    }

    /// Alternatives best first, ties in class order.
    pub fn order(&self) -> impl Iterator<Item = &str> {
        self.classes.iter().flatten().map(String::as_str)
    }

    pub fn len(&self) -> usize {
        self.classes.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Same classes irrespective of member order inside a class.
    pub fn same_classes(&self, other: &CompleteRanking) -> bool {
        let norm = |r: &CompleteRanking| {
            r.classes
                .iter()
                .map(|c| {
                    let mut c = c.clone();
                    c.sort();
                    c
                })
                .collect::<Vec<_>>()
        };
        norm(self) == norm(other)
    }
}

pub fn rank_complete(flows: &FlowTable) -> CompleteRanking {
    let mut order: Vec<usize> = (0..flows.len()).collect();
    // stable: equal nets keep input order
    order.sort_by(|&a, &b| flows.entries[b].net.cmp(&flows.entries[a].net));
    let mut classes: Vec<Vec<String>> = Vec::new();
    let mut last: Option<usize> = None;
    for idx in order {
        let entry = &flows.entries[idx];
        match last {
            Some(prev) if flows.entries[prev].net == entry.net => {
                classes.last_mut().unwrap().push(entry.alternative.clone());
            }
            _ => classes.push(vec![entry.alternative.clone()]),
        }
        last = Some(idx);
    }
    CompleteRanking { classes }
}

/// Relation of the row alternative to the column alternative.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PairRelation {
    /// Row outranks column.
    Prefer,
    /// Column outranks row (mirror of `Prefer`).
    PreferredBy,
    Indifferent,
    Incomparable,
    #[serde(rename = "self")]
    Itself,
}

impl PairRelation {
    pub fn mirror(self) -> Self {
        match self {
            PairRelation::Prefer => PairRelation::PreferredBy,
            PairRelation::PreferredBy => PairRelation::Prefer,
            other => other,
        }
    }
}

/// Partial preorder from the joint comparison of positive and negative
/// flows.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PartialRanking {
    pub alternatives: Vec<String>,
    pub relations: Vec<Vec<PairRelation>>,
}

impl PartialRanking {
    pub fn relation(&self, a: &str, b: &str) -> Option<PairRelation> {
        let i = self.alternatives.iter().position(|x| x == a)?;
        let k = self.alternatives.iter().position(|x| x == b)?;
        Some(self.relations[i][k])
    }

    pub fn check(&self) -> Result<(), McdaError> {
        let m = self.alternatives.len();
        if self.relations.len() != m || self.relations.iter().any(|r| r.len() != m) {
            return Err(McdaError::Inconsistent(
                "relation matrix is not square".into(),
            ));
        }
        for i in 0..m {
            for k in 0..m {
                let r = self.relations[i][k];
                let ok = if i == k {
                    r == PairRelation::Itself
                } else {
                    r != PairRelation::Itself && self.relations[k][i] == r.mirror()
                };
                if !ok {
                    return Err(McdaError::Inconsistent(format!(
                        "relation ({i}, {k}) breaks symmetry"
                    )));
                }
            }
        }
        Ok(())
    }
}

pub fn rank_partial(flows: &FlowTable) -> PartialRanking {
    let e = &flows.entries;
    let relations = (0..e.len())
        .map(|i| {
            (0..e.len())
                .map(|k| {
                    if i == k {
                        return PairRelation::Itself;
                    }
                    // larger positive flow is better, smaller negative flow is better
                    let plus = e[i].positive.cmp(&e[k].positive);
                    let minus = e[k].negative.cmp(&e[i].negative);
                    use Ordering::*;
                    match (plus, minus) {
                        (Equal, Equal) => PairRelation::Indifferent,
                        (Greater | Equal, Greater | Equal) => PairRelation::Prefer,
                        (Less | Equal, Less | Equal) => PairRelation::PreferredBy,
                        _ => PairRelation::Incomparable,
                    }
                })
                .collect()
        })
        .collect();
    PartialRanking {
        alternatives: e.iter().map(|f| f.alternative.clone()).collect(),
        relations,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mcda::flows::Flow;
    use crate::rational::Rational;

    fn flow_table(rows: &[(&str, Rational, Rational)]) -> FlowTable {
        FlowTable {
            entries: rows
                .iter()
                .map(|(id, p, n)| Flow {
                    alternative: id.to_string(),
                    net: p - n,
                    positive: p.clone(),
                    negative: n.clone(),
                })
                .collect(),
        }
    }

    fn nets(rows: &[(&str, Rational)]) -> FlowTable {
        FlowTable {
            entries: rows
                .iter()
                .map(|(id, net)| Flow {
                    alternative: id.to_string(),
                    positive: Rational::zero(),
                    negative: Rational::zero(),
                    net: net.clone(),
                })
                .collect(),
        }
    }

    fn classes(r: &CompleteRanking) -> Vec<Vec<&str>> {
        r.classes
            .iter()
            .map(|c| c.iter().map(String::as_str).collect())
            .collect()
    }

    #[test]
    fn dominance_gives_two_classes() {
        let r = rank_complete(&nets(&[
            ("b", Rational::from_integer(-1)),
            ("a", Rational::one()),
        ]));
        assert_eq!(classes(&r), vec![vec!["a"], vec!["b"]]);
    }

    #[test]
    fn all_equal_is_one_class_in_input_order() {
        let z = Rational::zero();
        let r = rank_complete(&nets(&[("x", z.clone()), ("a", z.clone()), ("m", z)]));
        assert_eq!(classes(&r), vec![vec!["x", "a", "m"]]);
    }

    #[test]
    fn six_technique_tie_structure() {
        let d = |s: &str| s.parse::<Rational>().unwrap();
        let r = rank_complete(&nets(&[
            ("PERA", d("0.078")),
            ("GIM", d("0.033")),
            ("CIMOSA", d("-0.022")),
            ("GERAM", d("-0.022")),
            ("GRAI", d("-0.022")),
            ("MERISE", d("-0.045")),
        ]));
        assert_eq!(
            classes(&r),
            vec![
                vec!["PERA"],
                vec!["GIM"],
                vec!["CIMOSA", "GERAM", "GRAI"],
                vec!["MERISE"]
            ]
        );
        assert_eq!(r.class_of("GRAI"), Some(2));
    }

    #[test]
    fn partial_relations() {
        let (o, z) = (Rational::one(), Rational::zero());
        let half = Rational::new(1, 2);
        let p = rank_partial(&flow_table(&[
            ("a", o.clone(), z.clone()),
            ("b", z.clone(), o.clone()),
        ]));
        assert_eq!(p.relation("a", "b"), Some(PairRelation::Prefer));
        assert_eq!(p.relation("b", "a"), Some(PairRelation::PreferredBy));
        assert_eq!(p.relation("a", "a"), Some(PairRelation::Itself));

        // a has more strength but also more weakness
        let p = rank_partial(&flow_table(&[
            ("a", o.clone(), half.clone()),
            ("b", half.clone(), z.clone()),
        ]));
        assert_eq!(p.relation("a", "b"), Some(PairRelation::Incomparable));
        assert_eq!(p.relation("b", "a"), Some(PairRelation::Incomparable));

        let p = rank_partial(&flow_table(&[
            ("a", half.clone(), half.clone()),
            ("b", half.clone(), half),
        ]));
        assert_eq!(p.relation("a", "b"), Some(PairRelation::Indifferent));
        p.check().unwrap();
    }

    #[test]
    fn serialized_relation_names() {
        let s = serde_json::to_string(&[PairRelation::Itself, PairRelation::PreferredBy]).unwrap();
        assert_eq!(s, r#"["self","preferred_by"]"#);
    }
}
