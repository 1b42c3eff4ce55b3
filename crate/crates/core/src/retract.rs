//! Retraction: the relation `x_i ~ x_j ⟺ σ_i = σ_j`, its refinement `ρ` by
//! `G_r`-orbits, the induced quotient solutions and the levels obtained by
//! iterating them.
//!
//! Quotient point `k` stands for the `k`-th class in minimal-member order,
//! represented by that minimal member.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::solution::{Pair, RTable, Solution, Verdict};

/// Classes of points with identical `σ`.
pub fn retract_classes(s: &Solution) -> Partition {
    Partition::from_labels(s.sigmas())
}

/// `~` refined by membership in a common `G_r`-orbit.
pub fn rho_classes(s: &Solution) -> Partition {
    retract_classes(s).meet(&s.orbits())
}

/// The solution induced on the classes of a compatible partition.
pub fn quotient(s: &Solution, p: &Partition) -> Result<Solution> {
    let n = s.n();
    if p.len() != n {
        return Err(Error::DegreeMismatch {
            left: n,
            right: p.len(),
        });
    }
    let c = p.num_classes();
    let mut induced: Vec<Option<((usize, usize), Pair)>> = vec![None; c * c];
    for i in 0..n {
        for j in 0..n {
            let (k, l) = s.r(i, j);
            let slot = &mut induced[p.class_of(i) * c + p.class_of(j)];
            let image = (p.class_of(k), p.class_of(l));
            match slot {
                None => *slot = Some((image, Pair(i, j))),
                Some((seen, first)) if *seen != image => {
                    return Err(Error::IncompatiblePartition {
                        first: *first,
                        second: Pair(i, j),
                    })
                }
                Some(_) => {}
            }
        }
    }
    let rows = induced
        .chunks(c)
        .map(|row| {
            row.iter()
                .map(|e| e.expect("every class pair occurs").0)
                .collect()
        })
        .collect();
    Solution::from_r_table(&RTable::new(rows)?)
        .map_err(|e| Error::Internal(format!("quotient failed validation: {e}")))
}

/// `Ret(X, r)`.
pub fn ret(s: &Solution) -> Result<Solution> {
    quotient(s, &retract_classes(s))
}

/// `Ret_ρ(X, r)`.
pub fn ret_rho(s: &Solution) -> Result<Solution> {
    quotient(s, &rho_classes(s))
}

/// Which retraction operator to iterate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RetractMode {
    Ret,
    Rho,
}

/// The sequence `s, R(s), R(R(s)), ...` stopping at a single point
/// ([`RetractMode::Ret`]) or a trivial solution ([`RetractMode::Rho`]), or
/// at a non-trivial fixpoint.
pub fn tower(s: &Solution, mode: RetractMode) -> Result<Vec<Solution>> {
    let mut out = vec![s.clone()];
    loop {
        let cur = out.last().expect("non-empty");
        let done = match mode {
            RetractMode::Ret => cur.n() == 1,
            RetractMode::Rho => cur.is_trivial(),
        };
        if done {
            return Ok(out);
        }
        let next = match mode {
            RetractMode::Ret => ret(cur)?,
            RetractMode::Rho => ret_rho(cur)?,
        };
        if next.n() == cur.n() {
            return Ok(out);
        }
        out.push(next);
    }
}

/// Least `m` with `|Ret^m(X,r)| = 1`, or `None` if the iteration stalls.
pub fn multipermutation_level(s: &Solution) -> Result<Option<usize>> {
    let t = tower(s, RetractMode::Ret)?;
    let last = t.last().expect("non-empty");
    Ok((last.n() == 1).then(|| t.len() - 1))
}

/// Least `m ≥ 0` with `Ret_ρ^m(X,r)` trivial, or `None` if the iteration
/// stalls on a non-trivial solution. Already trivial inputs have level 0.
pub fn strong_level(s: &Solution) -> Result<Option<usize>> {
    let t = tower(s, RetractMode::Rho)?;
    Ok(t.last()
        .expect("non-empty")
        .is_trivial()
        .then(|| t.len() - 1))
}

/// Witness that the generator map `σ_i ↦ σ'_{[i]}` is not equivariant.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EquivarianceFailure {
    /// Generator index in `X` (1-based in JSON).
    #[serde(serialize_with = "crate::solution::one_based")]
    pub generator: usize,
    /// A point of `X` whose image class disagrees with the quotient action.
    #[serde(serialize_with = "crate::solution::one_based")]
    pub point: usize,
}

/// The generator map onto the `ρ`-quotient is well defined and
/// equivariant: `[σ_i(u)] = σ'_{[i]}([u])` for every `i` and every member
/// `u` of every class.
pub fn check_epimorphism(s: &Solution) -> Result<Verdict<EquivarianceFailure>> {
    let rho = rho_classes(s);
    let q = quotient(s, &rho)?;
    for i in 0..s.n() {
        let induced = q.sigma(rho.class_of(i));
        for u in 0..s.n() {
            if rho.class_of(s.sigma(i).apply(u)) != induced.apply(rho.class_of(u)) {
                return Ok(Err(EquivarianceFailure {
                    generator: i,
                    point: u,
                }));
            }
        }
    }
    Ok(Ok(()))
}

/// The `ρ`-quotient has as many orbits as `X`, and each orbit of `X` maps
/// onto exactly one quotient orbit.
pub fn check_orbit_preservation(s: &Solution) -> Result<bool> {
    let rho = rho_classes(s);
    let q = quotient(s, &rho)?;
    let orbits = s.orbits();
    let q_orbits = q.orbits();
    if orbits.num_classes() != q_orbits.num_classes() {
        return Ok(false);
    }
    let mut images: Vec<Vec<usize>> = orbits
        .classes()
        .iter()
        .map(|orbit| {
            let mut img: Vec<usize> = orbit.iter().map(|&x| rho.class_of(x)).collect();
            img.sort_unstable();
            img.dedup();
            img
        })
        .collect();
    images.sort();
    let mut expected = q_orbits.classes();
    expected.sort();
    Ok(images == expected)
}

/// For a non-trivial square-free solution with abelian `G_r`: some
/// `ρ`-class has at least two points.
pub fn check_abelian_collapse(s: &Solution) -> Result<bool> {
    if !s.is_square_free() {
        return Err(Error::PreconditionUnmet(
            "solution is not square-free".into(),
        ));
    }
    if !s.iyb_group().is_abelian() {
        return Err(Error::PreconditionUnmet("G_r is not abelian".into()));
    }
    if s.is_trivial() {
        return Err(Error::PreconditionUnmet("solution is trivial".into()));
    }
    Ok(rho_classes(s).max_class_size() >= 2)
}

/// Points `(i, x)` with `x` in the orbit of `i` and `σ_i(x) ≠ x`.
pub fn check_orbit_identity(s: &Solution) -> Verdict<Pair> {
    let orbits = s.orbits();
    for i in 0..s.n() {
        for x in 0..s.n() {
            if orbits.same_class(i, x) && s.sigma(i).apply(x) != x {
                return Err(Pair(i, x));
            }
        }
    }
    Ok(())
}

/// `σ_i(j) = j` forces `σ_i` to fix the whole orbit of `j`; the witness is
/// `(i, l)` with `l` in that orbit and `σ_i(l) ≠ l`.
pub fn check_fixed_point_orbit(s: &Solution) -> Verdict<Pair> {
    let orbits = s.orbits().classes();
    for i in 0..s.n() {
        for orbit in &orbits {
            let fixes_one = orbit.iter().any(|&j| s.sigma(i).apply(j) == j);
            if let Some(&l) = orbit.iter().find(|&&l| s.sigma(i).apply(l) != l) {
                if fixes_one {
                    return Err(Pair(i, l));
                }
            }
        }
    }
    Ok(())
}

/// For every orbit `X_k` on which all its own points act trivially:
/// `σ_j` and `σ_{σ_i(j)}` agree on `X_k` for `i ∈ X_k` and any `j`. Products
/// of several such `σ_i` follow by chaining. Witness `(i, j)`.
pub fn check_trivial_orbit_agreement(s: &Solution) -> Verdict<Pair> {
    for orbit in s.orbits().classes() {
        if !orbit.iter().all(|&i| s.sigma(i).is_identity_on(&orbit)) {
            continue;
        }
        for &i in &orbit {
            for j in 0..s.n() {
                let j2 = s.sigma(i).apply(j);
                if !s.sigma(j).agrees_on(s.sigma(j2), &orbit) {
                    return Err(Pair(i, j));
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s4() -> Solution {
        Solution::from_cycle_strings(&["(3,4)", "(3,4)", "(1,2)", "(1,2)"]).unwrap()
    }

    #[test]
    fn classes_of_small_solutions() {
        let t = Solution::trivial(3);
        assert_eq!(retract_classes(&t).num_classes(), 1);
        assert_eq!(rho_classes(&t).num_classes(), 3);
        let s = s4();
        assert_eq!(retract_classes(&s).classes(), vec![vec![0, 1], vec![2, 3]]);
        assert_eq!(rho_classes(&s).classes(), vec![vec![0, 1], vec![2, 3]]);
    }

    #[test]
    fn quotients() {
        let s = s4();
        let same = quotient(&s, &Partition::discrete(4)).unwrap();
        assert_eq!(same, s);
        assert_eq!(ret(&s).unwrap(), Solution::trivial(2));
        assert_eq!(ret_rho(&s).unwrap(), Solution::trivial(2));
        assert_eq!(ret(&Solution::trivial(5)).unwrap(), Solution::trivial(1));
        assert_eq!(
            ret_rho(&Solution::trivial(3)).unwrap(),
            Solution::trivial(3)
        );
    }

    #[test]
    fn incompatible_partition_is_reported() {
        // {1,3},{2},{4} mixes the two σ-classes of S4
        let p = Partition::from_labels(&[0, 1, 0, 2]);
        assert!(matches!(
            quotient(&s4(), &p),
            Err(Error::IncompatiblePartition { .. })
        ));
    }

    #[test]
    fn levels() {
        assert_eq!(
            multipermutation_level(&Solution::trivial(1)).unwrap(),
            Some(0)
        );
        assert_eq!(
            multipermutation_level(&Solution::trivial(4)).unwrap(),
            Some(1)
        );
        assert_eq!(multipermutation_level(&s4()).unwrap(), Some(2));
        assert_eq!(strong_level(&Solution::trivial(4)).unwrap(), Some(0));
        assert_eq!(strong_level(&s4()).unwrap(), Some(1));
    }

    #[test]
    fn permutation_solution_levels() {
        // r(x,y) = (f(y), f⁻¹(x)), f = (1 2): both σ equal f, Ret has one point
        let f = [1usize, 0];
        let rows = (0..2)
            .map(|i| (0..2).map(|j| (f[j], f[i])).collect())
            .collect();
        let s = Solution::from_r_table(&RTable::new(rows).unwrap()).unwrap();
        assert_eq!(multipermutation_level(&s).unwrap(), Some(1));
        // σ_1 = f ≠ id, ρ = ~ (one orbit), so Ret_ρ collapses to a point
        assert_eq!(strong_level(&s).unwrap(), Some(1));
    }

    #[test]
    fn orbit_checks_on_s4() {
        let s = s4();
        assert!(check_epimorphism(&s).unwrap().is_ok());
        assert!(check_orbit_preservation(&s).unwrap());
        assert!(check_abelian_collapse(&s).unwrap());
        assert!(check_orbit_identity(&s).is_ok());
        assert!(check_fixed_point_orbit(&s).is_ok());
        assert!(check_trivial_orbit_agreement(&s).is_ok());
        let t = Solution::trivial(3);
        assert!(check_epimorphism(&t).unwrap().is_ok());
        assert!(check_orbit_preservation(&t).unwrap());
        assert!(matches!(
            check_abelian_collapse(&t),
            Err(Error::PreconditionUnmet(_))
        ));
    }
}
