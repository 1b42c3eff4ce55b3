//! Permutations in cycle notation, generated groups, orbits and conjugacy.

use ybe::{Perm, PermGroup};

fn main() -> ybe::Result<()> {
    let a = Perm::parse_cycles(6, "(1,2,3)")?;
    let b = Perm::parse_cycles(6, "(1,2)(4,5)")?;
    println!(
        "a = {a}, b = {b}, a*b = {}, a^-1 = {}",
        &a * &b,
        a.inverse()
    );
    println!("cycle type of b: {:?}", b.cycle_type());
    let g = PermGroup::new(vec![a.clone(), b.clone()])?.closure()?;
    println!("order {}, abelian {}", g.order()?, g.is_abelian());
    println!("orbits {:?}", g.orbits().to_one_based());
    let c = a.conjugate_by(&b);
    println!("{a} and {c} conjugate: {}", g.are_conjugate(&a, &c)?);
    println!("{a} and {b} conjugate: {}", g.are_conjugate(&a, &b)?);
    Ok(())
}
