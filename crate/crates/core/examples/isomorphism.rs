//! Relabelings, isomorphism witnesses and canonical forms.

use ybe::corpus::s4;
use ybe::Perm;

fn main() -> ybe::Result<()> {
    let s = s4();
    let p = Perm::parse_cycles(4, "(1,3)")?;
    let t = s.relabel(&p);
    println!(
        "s4 sigmas:        {:?}",
        s.sigmas().iter().map(Perm::to_string).collect::<Vec<_>>()
    );
    println!(
        "relabeled by {p}: {:?}",
        t.sigmas().iter().map(Perm::to_string).collect::<Vec<_>>()
    );
    let found = s.is_isomorphic(&t).expect("isomorphic");
    println!(
        "witness {found}, maps s4 onto it: {}",
        s.relabel(&found) == t
    );
    let c = s.canonical_form()?;
    println!(
        "canonical form:   {:?}",
        c.sigmas().iter().map(Perm::to_string).collect::<Vec<_>>()
    );
    println!("same for both: {}", c == t.canonical_form()?);
    println!(
        "iso to trivial(4): {:?}",
        s.is_isomorphic(&ybe::Solution::trivial(4))
    );
    Ok(())
}
