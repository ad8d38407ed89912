use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::table::PerformanceTable;
use super::McdaError;
use crate::rational::Rational;

/// Pairwise preference indices `Π(a_i, a_k)`; row `i` holds how strongly
/// alternative `i` is preferred to each other alternative.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CredibilityMatrix {
    pub alternatives: Vec<String>,
    pub values: Vec<Vec<Rational>>,
}

impl CredibilityMatrix {
    pub fn len(&self) -> usize {
        self.alternatives.len()
    }

    pub fn is_empty(&self) -> bool {
        self.alternatives.is_empty()
    }

    pub fn get(&self, i: usize, k: usize) -> &Rational {
        &self.values[i][k]
    }

    /// Square shape, zero diagonal and entries in `[0, 1]`.
    pub fn check(&self) -> Result<(), McdaError> {
        let m = self.alternatives.len();
        if self.values.len() != m || self.values.iter().any(|r| r.len() != m) {
            return Err(McdaError::Inconsistent(
                "credibility matrix is not square".into(),
            ));
        }
        for (i, row) in self.values.iter().enumerate() {
            for (k, v) in row.iter().enumerate() {
                if i == k && !v.is_zero() {
                    return Err(McdaError::Inconsistent(format!(
                        "diagonal entry {i} is {v}, expected 0"
                    )));
                }
                if v.is_negative() || *v > 1 {
                    return Err(McdaError::Inconsistent(format!(
                        "entry ({i}, {k}) = {v} outside [0, 1]"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Degrees `P_j(a_i, a_k)` for a single criterion, as an m×m matrix.
pub fn criterion_degrees(
    table: &PerformanceTable,
    j: usize,
) -> Result<Vec<Vec<Rational>>, McdaError> {
    let n = table.num_criteria();
    if j >= n {
        return Err(McdaError::IndexOutOfRange {
            what: "criterion",
            index: j,
            len: n,
        });
    }
    let m = table.num_alternatives();
    let f = &table.criteria()[j].function;
    Ok((0..m)
        .map(|i| (0..m).map(|k| f.degree(&table.oriented(j, i, k))).collect())
        .collect())
}

/// Weighted aggregation of preference degrees over all criteria. With equal
/// weights this is the plain mean `Σ_j P_j(a_i, a_k) / n`.
///
/// Rows are computed in parallel; the result does not depend on scheduling.
pub fn preference_index(table: &PerformanceTable) -> CredibilityMatrix {
    let m = table.num_alternatives();
    let criteria = table.criteria();
    let values = (0..m)
        .into_par_iter()
        .map(|i| {
            (0..m)
                .map(|k| {
                    if i == k {
                        return Rational::zero();
                    }
                    criteria
                        .iter()
                        .enumerate()
                        .filter(|(_, c)| !c.weight.is_zero())
                        .map(|(j, c)| &c.weight * c.function.degree(&table.oriented(j, i, k)))
                        .sum()
                })
                .collect()
        })
        .collect();
    CredibilityMatrix {
        alternatives: table.alternatives().iter().map(|a| a.id.clone()).collect(),
        values,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Flow {
    pub alternative: String,
    pub positive: Rational,
    pub negative: Rational,
    pub net: Rational,
}

/// Positive, negative and net outranking flows, one entry per alternative in
/// table order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FlowTable {
    pub entries: Vec<Flow>,
}

impl FlowTable {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, alternative: &str) -> Option<&Flow> {
        self.entries.iter().find(|f| f.alternative == alternative)
    }

    pub fn net_sum(&self) -> Rational {
        self.entries.iter().map(|f| &f.net).sum()
    }

    /// `net = positive − negative` per entry, ranges, and zero sum.
    pub fn check(&self) -> Result<(), McdaError> {
        for f in &self.entries {
            if f.net != &f.positive - &f.negative {
                return Err(McdaError::Inconsistent(format!(
                    "net flow of {} is not positive − negative",
                    f.alternative
                )));
            }
            let unit = |v: &Rational| !v.is_negative() && *v <= 1;
            if !unit(&f.positive) || !unit(&f.negative) {
                return Err(McdaError::Inconsistent(format!(
                    "flows of {} outside [0, 1]",
                    f.alternative
                )));
            }
        }
        let total = self.net_sum();
        if !total.is_zero() {
            return Err(McdaError::Inconsistent(format!(
                "net flows sum to {total}, not 0"
            )));
        }
        Ok(())
    }
}

/// Outranking flows averaged over the `m − 1` other alternatives.
pub fn flows(pi: &CredibilityMatrix) -> Result<FlowTable, McdaError> {
    let m = pi.len();
    if m < 2 {
        return Err(McdaError::TooFewAlternatives { found: m });
    }
    let others = Rational::from_integer(m as i64 - 1);
    let entries = (0..m)
        .map(|a| {
            let out: Rational = (0..m).filter(|&b| b != a).map(|b| pi.get(a, b)).sum();
            let inc: Rational = (0..m).filter(|&b| b != a).map(|b| pi.get(b, a)).sum();
            let positive = out / &others;
            let negative = inc / &others;
            Flow {
                alternative: pi.alternatives[a].clone(),
                net: &positive - &negative,
                positive,
                negative,
            }
        })
        .collect();
    Ok(FlowTable { entries })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mcda::table::Alternative;

    fn matrix(values: &[&[(i64, i64)]]) -> CredibilityMatrix {
        let names = ["a", "b", "c", "d", "e"];
        CredibilityMatrix {
            alternatives: names[..values.len()]
                .iter()
                .map(|s| s.to_string())
                .collect(),
            values: values
                .iter()
                .map(|r| r.iter().map(|&(n, d)| Rational::new(n, d)).collect())
                .collect(),
        }
    }

    fn table(rows: &[&[i64]]) -> PerformanceTable {
        let m = rows.len();
        let n = rows[0].len();
        PerformanceTable::with_equal_weights(
            (0..m)
                .map(|i| Alternative::named(format!("a{i}")))
                .collect(),
            (0..n).map(|j| format!("c{j}")).collect(),
            rows.iter()
                .map(|r| r.iter().map(|&v| Rational::from_integer(v)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn unanimous_strict_preference() {
        let pi = preference_index(&table(&[&[3, 4], &[1, 2]]));
        assert_eq!(pi.values[0][1], 1);
        assert_eq!(pi.values[1][0], 0);
    }

    #[test]
    fn split_criteria_give_half() {
        let pi = preference_index(&table(&[&[3, 1], &[1, 3]]));
        assert_eq!(pi.values[0][1], Rational::new(1, 2));
        assert_eq!(pi.values[1][0], Rational::new(1, 2));
    }

    #[test]
    fn identical_rows_give_zero() {
        let pi = preference_index(&table(&[&[2, 2], &[2, 2]]));
        assert_eq!(pi.values[0][1], 0);
        assert_eq!(pi.values[1][0], 0);
        pi.check().unwrap();
    }

    #[test]
    fn total_dominance_flows() {
        let f = flows(&matrix(&[&[(0, 1), (1, 1)], &[(0, 1), (0, 1)]])).unwrap();
        assert_eq!(f.entries[0].net, 1);
        assert_eq!(f.entries[1].net, -1);
        f.check().unwrap();
    }

    #[test]
    fn zero_matrix_flows() {
        let z = (0, 1);
        let f = flows(&matrix(&[&[z, z, z], &[z, z, z], &[z, z, z]])).unwrap();
        assert!(f
            .entries
            .iter()
            .all(|e| e.net.is_zero() && e.positive.is_zero()));
    }

    #[test]
    fn three_cycle_is_balanced() {
        let (z, o) = ((0, 1), (1, 1));
        // a > b, b > c, c > a
        let f = flows(&matrix(&[&[z, o, z], &[z, z, o], &[o, z, z]])).unwrap();
        for e in &f.entries {
            assert_eq!(e.positive, Rational::new(1, 2));
            assert_eq!(e.negative, Rational::new(1, 2));
            assert_eq!(e.net, 0);
        }
    }

    #[test]
    fn single_alternative_is_rejected() {
        let err = flows(&matrix(&[&[(0, 1)]])).unwrap_err();
        assert!(err.to_string().contains("at least two alternatives"));
        assert!(matches!(err.kind(), crate::ErrorKind::Usage));
    }

    #[test]
    fn check_rejects_bad_matrices() {
        assert!(matrix(&[&[(1, 1), (0, 1)], &[(0, 1), (0, 1)]])
            .check()
            .is_err());
        assert!(matrix(&[&[(0, 1), (3, 2)], &[(0, 1), (0, 1)]])
            .check()
            .is_err());
    }
}
