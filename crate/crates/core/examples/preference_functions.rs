//! Tabulates the six preference functions and ranks a small table with
//! mixed functions, directions and weights.
//!
//!     cargo run --example preference_functions

use mcda_workbench::mcda::{
    outrank, Alternative, CriterionSpec, Direction, PerformanceTable, PreferenceFunction,
};
use mcda_workbench::Rational;

fn q(s: &str) -> Rational {
    s.parse().unwrap()
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let functions = [
        PreferenceFunction::Usual,
        PreferenceFunction::UShape { q: q("1") },
        PreferenceFunction::VShape { p: q("2") },
        PreferenceFunction::Level {
            q: q("1"),
            p: q("2"),
        },
        PreferenceFunction::Linear {
            q: q("1/2"),
            p: q("3"),
        },
        PreferenceFunction::Gaussian { s: q("1.5") },
    ];
    let diffs = ["-1", "0", "1/2", "1", "3/2", "2", "3"];
    print!("{:<10}", "d");
    for d in diffs {
        print!("{d:>10}");
    }
    println!();
    for f in &functions {
        print!("{:<10}", f.name());
        for d in diffs {
            print!("{:>10}", f.degree(&q(d)).to_decimal_string(4));
        }
        println!();
    }

    // price is minimized, quality is graded with a linear function
    let table = PerformanceTable::new(
        vec![
            Alternative::new("a", "budget"),
            Alternative::new("b", "balanced"),
            Alternative::new("c", "premium"),
        ],
        vec![
            CriterionSpec::new("price", q("2"))
                .with_direction(Direction::Minimize)
                .with_function(PreferenceFunction::VShape { p: q("50") }),
            CriterionSpec::new("quality", q("3")).with_function(PreferenceFunction::Linear {
                q: q("1"),
                p: q("4"),
            }),
            CriterionSpec::new("support", q("1")),
        ],
        vec![
            vec![q("100"), q("2"), q("1")],
            vec![q("140"), q("5"), q("1")],
            vec![q("190"), q("8"), q("0")],
        ],
    )?;
    let out = outrank(&table)?;
    println!();
    for f in &out.flows.entries {
        println!(
            "{}: phi+ {}  phi- {}  phi {}",
            f.alternative, f.positive, f.negative, f.net
        );
    }
    println!("classes: {:?}", out.complete.classes);
    println!("a vs c: {:?}", out.partial.relation("a", "c").unwrap());
    Ok(())
}
