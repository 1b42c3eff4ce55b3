//! Iterating `Ret` and `Ret_ρ` down to a point or a trivial solution.

use ybe::corpus::{e24, s4};
use ybe::retract::{
    multipermutation_level, retract_classes, rho_classes, strong_level, tower, RetractMode,
};
use ybe::Solution;

fn show(name: &str, s: &Solution) -> ybe::Result<()> {
    println!("{name}: n = {}", s.n());
    println!("  ~ classes: {:?}", retract_classes(s).to_one_based());
    println!("  rho classes: {:?}", rho_classes(s).to_one_based());
    for mode in [RetractMode::Ret, RetractMode::Rho] {
        let steps = tower(s, mode)?;
        let sizes: Vec<usize> = steps.iter().map(Solution::n).collect();
        println!("  {mode:?} tower sizes: {sizes:?}");
    }
    println!(
        "  level {:?}, strong level {:?}",
        multipermutation_level(s)?,
        strong_level(s)?
    );
    Ok(())
}

fn main() -> ybe::Result<()> {
    show("trivial(3)", &Solution::trivial(3))?;
    show("s4", &s4())?;
    show("e24", &e24())?;
    Ok(())
}
