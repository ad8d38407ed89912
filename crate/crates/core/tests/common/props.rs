#![allow(clippy::needless_range_loop)]

//! Ranking invariants as reusable property checks.

use mcda_workbench::mcda::{
    criterion_degrees, outrank, preference_index, rank_complete, Alternative, CriterionSpec,
    Direction, PairRelation, PerformanceTable, PreferenceFunction,
};
use mcda_workbench::Rational;
use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

pub fn scores_strategy() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (2usize..=6, 1usize..=14).prop_flat_map(|(m, n)| {
        proptest::collection::vec(proptest::collection::vec(0i64..=4, n), m)
    })
}

fn rat() -> impl Strategy<Value = Rational> + Clone {
    (0i64..=12, 1i64..=4).prop_map(|(n, d)| Rational::new(n, d))
}

fn function_strategy() -> impl Strategy<Value = PreferenceFunction> {
    let pos = || rat().prop_map(|r| r + Rational::new(1, 4));
    prop_oneof![
        3 => Just(PreferenceFunction::Usual),
        1 => rat().prop_map(|q| PreferenceFunction::UShape { q }),
        1 => pos().prop_map(|p| PreferenceFunction::VShape { p }),
        1 => (rat(), pos()).prop_map(|(q, gap)| PreferenceFunction::Level { p: &q + gap, q }),
        1 => (rat(), pos()).prop_map(|(q, gap)| PreferenceFunction::Linear { p: &q + gap, q }),
        1 => pos().prop_map(|s| PreferenceFunction::Gaussian { s }),
    ]
}

fn spec_strategy() -> impl Strategy<Value = (i64, bool, PreferenceFunction)> {
    (0i64..=4, proptest::bool::weighted(0.2), function_strategy())
}

/// Tables with arbitrary weights, directions and preference functions.
pub fn general_table_strategy() -> impl Strategy<Value = PerformanceTable> {
    scores_strategy()
        .prop_flat_map(|scores| {
            let n = scores[0].len();
            (Just(scores), proptest::collection::vec(spec_strategy(), n))
        })
        .prop_map(|(scores, specs)| {
            let m = scores.len();
            let criteria = specs
                .into_iter()
                .enumerate()
                .map(|(j, (w, minimize, f))| {
                    // keep at least one positive weight
                    let w = if j == 0 { w + 1 } else { w };
                    CriterionSpec::new(format!("c{j}"), Rational::from_integer(w))
                        .with_direction(if minimize {
                            Direction::Minimize
                        } else {
                            Direction::Maximize
                        })
                        .with_function(f)
                })
                .collect();
            PerformanceTable::new(
                (0..m)
                    .map(|i| Alternative::named(format!("a{i}")))
                    .collect(),
                criteria,
                scores
                    .iter()
                    .map(|r| r.iter().map(|&v| Rational::from_integer(v)).collect())
                    .collect(),
            )
            .unwrap()
        })
}

fn rebuild(
    t: &PerformanceTable,
    alts: Vec<Alternative>,
    scores: Vec<Vec<Rational>>,
) -> PerformanceTable {
    PerformanceTable::new(alts, t.criteria().to_vec(), scores).unwrap()
}

pub fn check_translation_invariance(
    t: &PerformanceTable,
    j: usize,
    shift: &Rational,
) -> Result<(), TestCaseError> {
    let j = j % t.num_criteria();
    let shifted: Vec<Vec<Rational>> = t
        .scores()
        .iter()
        .map(|row| {
            row.iter()
                .enumerate()
                .map(|(c, v)| if c == j { v + shift } else { v.clone() })
                .collect()
        })
        .collect();
    let t2 = rebuild(t, t.alternatives().to_vec(), shifted);
    prop_assert_eq!(preference_index(t), preference_index(&t2));
    Ok(())
}

pub fn check_clone_indifference(t: &PerformanceTable, a: usize) -> Result<(), TestCaseError> {
    let a = a % t.num_alternatives();
    let mut alts = t.alternatives().to_vec();
    alts.push(Alternative::named("clone"));
    let mut scores = t.scores().to_vec();
    scores.push(scores[a].clone());
    let t2 = rebuild(t, alts, scores);
    let out = outrank(&t2).unwrap();
    let orig = &t.alternatives()[a].id;
    prop_assert_eq!(
        &out.flows.get(orig).unwrap().net,
        &out.flows.get("clone").unwrap().net
    );
    prop_assert_eq!(out.complete.class_of(orig), out.complete.class_of("clone"));
    Ok(())
}

/// Raising a score on a maximized criterion never lowers that
/// alternative's net flow.
pub fn check_monotonicity(
    t: &PerformanceTable,
    a: usize,
    j: usize,
    bump: i64,
) -> Result<(), TestCaseError> {
    let (a, j) = (a % t.num_alternatives(), j % t.num_criteria());
    let mut criteria = t.criteria().to_vec();
    criteria[j].direction = Direction::Maximize;
    let base = PerformanceTable::new(
        t.alternatives().to_vec(),
        criteria.clone(),
        t.scores().to_vec(),
    )
    .unwrap();
    let mut scores = t.scores().to_vec();
    scores[a][j] = &scores[a][j] + Rational::from_integer(bump);
    let raised = PerformanceTable::new(t.alternatives().to_vec(), criteria, scores).unwrap();
    let before = outrank(&base).unwrap().flows.entries[a].net.clone();
    let after = outrank(&raised).unwrap().flows.entries[a].net.clone();
    prop_assert!(
        after >= before,
        "net flow dropped from {} to {}",
        before,
        after
    );
    Ok(())
}

/// With Usual functions, at most one direction of a pair is preferred on
/// any criterion.
pub fn check_exclusivity(scores: &[Vec<i64>]) -> Result<(), TestCaseError> {
    let t = super::table_from_ints(scores);
    for j in 0..t.num_criteria() {
        let p = criterion_degrees(&t, j).unwrap();
        for a in 0..t.num_alternatives() {
            for b in 0..t.num_alternatives() {
                prop_assert!(p[a][b].clone().min(p[b][a].clone()).is_zero());
            }
        }
    }
    let pi = preference_index(&t);
    for a in 0..t.num_alternatives() {
        for b in 0..t.num_alternatives() {
            prop_assert!(pi.values[a][b].clone() + pi.values[b][a].clone() <= Rational::one());
        }
    }
    Ok(())
}

/// PROMETHEE I preference implies PROMETHEE II order.
pub fn check_one_two_consistency(t: &PerformanceTable) -> Result<(), TestCaseError> {
    let out = outrank(t).unwrap();
    let e = &out.flows.entries;
    for a in 0..e.len() {
        for b in 0..e.len() {
            if out.partial.relations[a][b] != PairRelation::Prefer {
                continue;
            }
            prop_assert!(e[a].net >= e[b].net);
            if e[a].positive > e[b].positive && e[a].negative < e[b].negative {
                prop_assert!(e[a].net > e[b].net);
            }
            prop_assert!(
                out.complete.class_of(&e[a].alternative) < out.complete.class_of(&e[b].alternative)
            );
        }
    }
    prop_assert!(out.partial.check().is_ok());
    Ok(())
}

pub fn check_permutation_equivariance(
    t: &PerformanceTable,
    perm: &[usize],
) -> Result<(), TestCaseError> {
    let m = t.num_alternatives();
    let perm: Vec<usize> = {
        // turn an arbitrary key vector into a permutation of 0..m
        let mut idx: Vec<usize> = (0..m).collect();
        idx.sort_by_key(|&i| (perm.get(i).copied().unwrap_or(0), i));
        idx
    };
    let alts = perm.iter().map(|&i| t.alternatives()[i].clone()).collect();
    let scores = perm.iter().map(|&i| t.scores()[i].clone()).collect();
    let t2 = rebuild(t, alts, scores);
    let (o1, o2) = (outrank(t).unwrap(), outrank(&t2).unwrap());
    for (new_pos, &old_pos) in perm.iter().enumerate() {
        prop_assert_eq!(&o2.flows.entries[new_pos], &o1.flows.entries[old_pos]);
    }
    prop_assert!(o1.complete.same_classes(&o2.complete));
    prop_assert_eq!(
        rank_complete(&o2.flows).classes.len(),
        o1.complete.classes.len()
    );
    Ok(())
}
