//! Built-in named solutions, stored as cycle notation and parsed on load.

use crate::error::{Error, Result};
use crate::perm::Perm;
use crate::solution::Solution;

/// The 24-point square-free solution of level 3 with abelian `G_r` that
/// admits no twisted-union split. Each row lists the 1-based indices
/// sharing one `σ`, then that `σ` in cycle notation.
pub const E24_SIGMAS: [(&[usize], &str); 8] = [
    (
        &[1, 2],
        "(9,10)(11,12)(13,14)(15,16)(17,18)(19,20)(21,22)(23,24)",
    ),
    (
        &[3, 4],
        "(9,11)(10,12)(13,15)(14,16)(17,18)(19,20)(21,22)(23,24)",
    ),
    (
        &[5, 6],
        "(9,10)(11,12)(13,14)(15,16)(17,19)(18,20)(21,23)(22,24)",
    ),
    (
        &[7, 8],
        "(9,11)(10,12)(13,15)(14,16)(17,19)(18,20)(21,23)(22,24)",
    ),
    (
        &[9, 12, 13, 16],
        "(1,5)(2,6)(3,7)(4,8)(17,21)(18,22)(19,23)(20,24)",
    ),
    (
        &[10, 11, 14, 15],
        "(1,5)(2,6)(3,7)(4,8)(17,24)(18,23)(19,22)(20,21)",
    ),
    (
        &[17, 20, 21, 24],
        "(9,13)(10,14)(11,15)(12,16)(1,3,2,4)(5,7,6,8)",
    ),
    (
        &[18, 19, 22, 23],
        "(9,16)(10,15)(11,14)(12,13)(1,3,2,4)(5,7,6,8)",
    ),
];

pub fn trivial(n: usize) -> Solution {
    Solution::trivial(n)
}

pub fn e24() -> Solution {
    let mut sigmas = vec![None; 24];
    for (indices, cycles) in E24_SIGMAS {
        let p = Perm::parse_cycles(24, cycles).expect("e24 cycle data parses");
        for &i in indices {
            sigmas[i - 1] = Some(p.clone());
        }
    }
    let sigmas = sigmas
        .into_iter()
        .map(|p| p.expect("every index assigned"))
        .collect();
    Solution::from_sigma(sigmas).expect("e24 is a square-free solution")
}

/// `σ_1 = σ_2 = (3 4)`, `σ_3 = σ_4 = (1 2)`.
pub fn s4() -> Solution {
    Solution::from_cycle_strings(&["(3,4)", "(3,4)", "(1,2)", "(1,2)"])
        .expect("s4 is a square-free solution")
}

/// Names accepted by [`lookup`]; `trivial-N` takes any `N ≥ 1`.
pub fn names() -> Vec<&'static str> {
    vec!["e24", "s4", "trivial-N"]
}

pub fn lookup(name: &str) -> Result<Solution> {
    match name {
        "e24" => Ok(e24()),
        "s4" => Ok(s4()),
        _ => match name.strip_prefix("trivial-").map(str::parse::<usize>) {
            Some(Ok(n)) if n >= 1 => Ok(trivial(n)),
            _ => Err(Error::Parse(format!("unknown corpus entry {name:?}"))),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn entries_load() {
        for s in [e24(), s4(), trivial(1), trivial(24)] {
            let r = s.validate();
            assert!(r.is_solution() && r.square_free);
        }
        assert_eq!(lookup("trivial-7").unwrap(), Solution::trivial(7));
        assert!(lookup("trivial-0").is_err());
        assert!(lookup("e25").is_err());
    }

    #[test]
    fn e24_sigmas() {
        let s = e24();
        assert_eq!(
            s.sigma(0).to_string(),
            "(9,10)(11,12)(13,14)(15,16)(17,18)(19,20)(21,22)(23,24)"
        );
        assert_eq!(
            s.sigma(17).to_string(),
            "(1,3,2,4)(5,7,6,8)(9,16)(10,15)(11,14)(12,13)"
        );
        assert_eq!(s.r(0, 8), (9, 4));
    }
}
