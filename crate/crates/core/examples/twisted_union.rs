//! Checking ordered splits `X = Y ∪ Z` against the twisted-union conditions.

use std::collections::BTreeMap;

use ybe::corpus::{e24, s4};
use ybe::twisted::{
    check_cyclic_condition, check_full_cyclic_condition, gtu_violations, search_gtu, GtuMode,
    GtuViolation,
};

fn tally(v: &[GtuViolation]) -> BTreeMap<&'static str, usize> {
    let mut out = BTreeMap::new();
    for x in v {
        let key = match x {
            GtuViolation::Condition1 { .. } => "1",
            GtuViolation::Condition2 { .. } => "2",
            GtuViolation::Condition3 { .. } => "3",
            GtuViolation::Condition4 { .. } => "4",
        };
        *out.entry(key).or_default() += 1;
    }
    out
}

fn main() -> ybe::Result<()> {
    let s = s4();
    println!("s4 cyclic condition: {:?}", check_cyclic_condition(&s));
    println!(
        "s4 full cyclic condition: {:?}",
        check_full_cyclic_condition(&s)
    );
    for mode in [GtuMode::SquareFree, GtuMode::General] {
        let found = search_gtu(&s, mode)?;
        println!(
            "s4 {mode:?}: {}",
            serde_json::to_string(&found.decomposition).unwrap()
        );
    }
    // Y must be a union of orbits
    println!(
        "Y = {{1,3}}: {}",
        gtu_violations(&s, &[0, 2], &[1, 3], GtuMode::SquareFree).unwrap_err()
    );

    let big = e24();
    let orbits = big.orbits().classes();
    for mode in [GtuMode::SquareFree, GtuMode::General] {
        for (k, y) in orbits.iter().enumerate() {
            let z: Vec<usize> = (0..24).filter(|x| !y.contains(x)).collect();
            let v = gtu_violations(&big, y, &z, mode)?;
            println!(
                "e24 {mode:?} Y = X{}: violations by condition {:?}",
                k + 1,
                tally(&v)
            );
        }
    }
    Ok(())
}
