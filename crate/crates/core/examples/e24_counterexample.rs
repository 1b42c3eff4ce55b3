//! The 24-point solution of level 3 with abelian IYB group that is not a
//! generalized twisted union, checked step by step.

use ybe::corpus::e24;
use ybe::retract::{multipermutation_level, tower, RetractMode};
use ybe::twisted::{search_gtu, GtuMode};

fn main() -> ybe::Result<()> {
    let s = e24();
    let report = s.validate();
    println!(
        "solution: {}, square-free: {}",
        report.is_solution(),
        report.square_free
    );

    let g = s.iyb_group();
    println!("G_r abelian: {}, order {}", g.is_abelian(), g.order()?);
    for (k, orbit) in s.orbits().to_one_based().iter().enumerate() {
        println!("orbit X{}: {orbit:?}", k + 1);
    }

    let sizes: Vec<usize> = tower(&s, RetractMode::Ret)?.iter().map(|t| t.n()).collect();
    println!("retraction sizes: {sizes:?}");
    println!("multipermutation level: {:?}", multipermutation_level(&s)?);

    let search = search_gtu(&s, GtuMode::SquareFree)?;
    println!("twisted union: {}", search.decomposition.is_some());
    let orbits = s.orbits();
    for c in &search.candidates {
        let mut parts: Vec<String> =
            c.y.iter()
                .map(|&x| format!("X{}", orbits.class_of(x) + 1))
                .collect();
        parts.dedup();
        println!(
            "  Y = {}: {} violations, first {}",
            parts.join(" + "),
            c.violations.len(),
            serde_json::to_string(&c.violations[0]).unwrap()
        );
    }
    Ok(())
}
