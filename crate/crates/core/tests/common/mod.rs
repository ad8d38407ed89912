#![allow(dead_code, clippy::needless_range_loop)]
//! Shared test helpers: an independent brute-force ranking oracle and
//! random-input generators.
//!
//! The oracle works on plain `i64` scores and `Ratio<i64>`, and does not
//! touch any of the library's ranking code.

use std::collections::BTreeMap;

pub mod props;

use mcda_workbench::kb::{
    CriterionDef, KbMeta, KnowledgeBase, ScaleLevel, TechniqueInstance, ValueScale,
};
use mcda_workbench::mcda::{Alternative, PerformanceTable};
use mcda_workbench::Rational;
use num_rational::Ratio;
use num_traits::ToPrimitive;
use rand::seq::SliceRandom;
use rand::Rng;

pub type Q = Ratio<i64>;

pub fn to_q(r: &Rational) -> Q {
    Q::new(r.numer().to_i64().unwrap(), r.denom().to_i64().unwrap())
}

pub struct OracleResult {
    pub pi: Vec<Vec<Q>>,
    pub plus: Vec<Q>,
    pub minus: Vec<Q>,
    pub net: Vec<Q>,
    /// Classes of alternative indices, best first.
    pub classes: Vec<Vec<usize>>,
}

/// Equal weights, Usual functions, maximized criteria.
///
/// Π(a_i, a_k) = Σ_j P_j(a_i, a_k) / n, φ⁺/φ⁻ averaged over m − 1,
/// φ = φ⁺ − φ⁻.
pub fn oracle(scores: &[Vec<i64>]) -> OracleResult {
    let m = scores.len();
    let n = scores[0].len();
    let mut pi = vec![vec![Q::from_integer(0); m]; m];
    for i in 0..m {
        for k in 0..m {
            if i == k {
                continue;
            }
            let mut count = 0i64;
            for j in 0..n {
                if scores[i][j] - scores[k][j] > 0 {
                    count += 1;
                }
            }
            pi[i][k] = Q::new(count, n as i64);
        }
    }
    let mut plus = Vec::new();
    let mut minus = Vec::new();
    let mut net = Vec::new();
    for a in 0..m {
        let mut out = Q::from_integer(0);
        let mut inc = Q::from_integer(0);
        for b in 0..m {
            if b != a {
                out += pi[a][b];
                inc += pi[b][a];
            }
        }
        let p = out / (m as i64 - 1);
        let q = inc / (m as i64 - 1);
        plus.push(p);
        minus.push(q);
        net.push(p - q);
    }
    let mut distinct: Vec<Q> = net.clone();
    distinct.sort();
    distinct.dedup();
    distinct.reverse();
    let classes = distinct
        .iter()
        .map(|v| (0..m).filter(|&a| net[a] == *v).collect())
        .collect();
    OracleResult {
        pi,
        plus,
        minus,
        net,
        classes,
    }
}

pub fn alt_name(i: usize) -> String {
    format!("a{i}")
}

pub fn table_from_ints(scores: &[Vec<i64>]) -> PerformanceTable {
    let m = scores.len();
    let n = scores[0].len();
    PerformanceTable::with_equal_weights(
        (0..m).map(|i| Alternative::named(alt_name(i))).collect(),
        (0..n).map(|j| format!("c{j}")).collect(),
        scores
            .iter()
            .map(|r| r.iter().map(|&v| Rational::from_integer(v)).collect())
            .collect(),
    )
    .unwrap()
}

/// m ∈ 2..=6, n ∈ 1..=14, scores in 0..=4.
pub fn random_scores<R: Rng>(rng: &mut R) -> Vec<Vec<i64>> {
    let m = rng.gen_range(2..=6);
    let n = rng.gen_range(1..=14);
    (0..m)
        .map(|_| (0..n).map(|_| rng.gen_range(0..=4)).collect())
        .collect()
}

const WORDS: [&str; 8] = [
    "none",
    "low",
    "some",
    "fair",
    "high",
    "full",
    "n/a",
    "ünïcode",
];

/// Random knowledge base that passes validation.
pub fn random_valid_kb<R: Rng>(rng: &mut R) -> KnowledgeBase {
    let n_scales = rng.gen_range(1..=3);
    let scales: Vec<ValueScale> = (0..n_scales)
        .map(|s| {
            let mut words = WORDS.to_vec();
            words.shuffle(rng);
            let k = rng.gen_range(2..=5);
            ValueScale {
                id: format!("scale{s}"),
                levels: words[..k]
                    .iter()
                    .map(|w| ScaleLevel {
                        label: w.to_string(),
                        score: rng.gen_range(0..=4),
                    })
                    .collect(),
            }
        })
        .collect();
    let n_crit = rng.gen_range(1..=14);
    let criteria: Vec<CriterionDef> = (0..n_crit)
        .map(|c| {
            let fam = rng.gen_range(1..=5);
            CriterionDef {
                id: format!("f{fam}{}", c + 1),
                family: format!("f{fam}"),
                label: format!("criterion \"{c}\""),
                scale: scales[rng.gen_range(0..n_scales)].id.clone(),
            }
        })
        .collect();
    let n_inst = rng.gen_range(0..=6);
    let instances = (0..n_inst)
        .map(|i| {
            let mut values = BTreeMap::new();
            for c in &criteria {
                if rng.gen_bool(0.8) {
                    let scale = scales.iter().find(|s| s.id == c.scale).unwrap();
                    let level = &scale.levels[rng.gen_range(0..scale.levels.len())];
                    values.insert(c.id.clone(), level.label.clone());
                }
            }
            TechniqueInstance {
                id: format!("T{i}"),
                label: format!("Technique {i}"),
                values,
            }
        })
        .collect();
    KnowledgeBase {
        meta: KbMeta {
            name: format!("kb-{}", rng.gen::<u32>()),
            version: "1".into(),
            note: rng.gen_bool(0.5).then(|| "generated".to_string()),
        },
        scales,
        criteria,
        instances,
    }
}

/// Default registry with `m` random techniques filled on every criterion.
pub fn random_technique_kb<R: Rng>(rng: &mut R, m: usize) -> KnowledgeBase {
    let mut kb = mcda_workbench::kb::default_kb();
    let labels: Vec<String> = kb.scales[0].labels().map(str::to_string).collect();
    kb.instances = (0..m)
        .map(|i| TechniqueInstance {
            id: format!("T{i}"),
            label: format!("T{i}"),
            values: kb
                .criteria
                .iter()
                .map(|c| (c.id.clone(), labels[rng.gen_range(0..labels.len())].clone()))
                .collect(),
        })
        .collect();
    kb
}
