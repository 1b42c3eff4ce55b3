//! Cyclic conditions, generalized twisted unions and solutions whose
//! generators are cycles.
//!
//! The cyclic and full cyclic conditions are checked in their one-step
//! form, quantified over all pairs `(w, j)`:
//!
//! * cyclic: `γ_j(w) = γ_{σ_w(j)}(w)`, i.e. the second output of
//!   `r(w, ·)` is constant along each `σ_w`-cycle;
//! * full cyclic: additionally `σ_{γ_j(w)}(j) = σ_w(j)`, i.e. the first
//!   output does not change when `w` is replaced by the next element of its
//!   chain.
//!
//! The chain formulations over whole cycles follow from these by induction
//! along the cycle.
//!
//! A generalized twisted union splits `X = Y ∪ Z` into non-empty
//! `G_r`-invariant parts. In general form it requires
//!
//! 1. `σ_{γ_y(z)}|_Y = σ_{γ_{y'}(z)}|_Y` for `z ∈ Z`, `y, y' ∈ Y`;
//! 2. `γ_{σ_z(y)}|_Z = γ_{σ_{z'}(y)}|_Z` for `y ∈ Y`, `z, z' ∈ Z`;
//!
//! and for square-free solutions the equivalent
//!
//! 3. `σ_{σ_y(z)}|_Y = σ_z|_Y` for `y ∈ Y`, `z ∈ Z`;
//! 4. `σ_{σ_z(y)}|_Z = σ_y|_Z` for `y ∈ Y`, `z ∈ Z`.
//!
//! The conditions are not symmetric in `Y` and `Z`, so searches run over
//! ordered pairs.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::solution::{one_based, Pair, Solution, Verdict};

/// `γ_j(w) = γ_{σ_w(j)}(w)` for all `w, j`; witness `(w, j)`.
pub fn check_cyclic_condition(s: &Solution) -> Verdict<Pair> {
    let n = s.n();
    for w in 0..n {
        for j in 0..n {
            if s.gamma(j).apply(w) != s.gamma(s.sigma(w).apply(j)).apply(w) {
                return Err(Pair(w, j));
            }
        }
    }
    Ok(())
}

/// The cyclic condition plus `σ_{γ_j(w)}(j) = σ_w(j)`; witness `(w, j)`.
pub fn check_full_cyclic_condition(s: &Solution) -> Verdict<Pair> {
    let n = s.n();
    for w in 0..n {
        for j in 0..n {
            let next = s.gamma(j).apply(w);
            if s.sigma(next).apply(j) != s.sigma(w).apply(j)
                || s.gamma(s.sigma(w).apply(j)).apply(w) != next
            {
                return Err(Pair(w, j));
            }
        }
    }
    Ok(())
}

/// Which form of the twisted-union conditions to check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GtuMode {
    General,
    #[serde(rename = "squarefree")]
    SquareFree,
}

impl GtuMode {
    pub fn for_solution(s: &Solution) -> GtuMode {
        if s.is_square_free() {
            GtuMode::SquareFree
        } else {
            GtuMode::General
        }
    }
}

/// A violated twisted-union condition. Points are 0-based; JSON is 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "condition")]
pub enum GtuViolation {
    /// `σ_{γ_y(z)}|_Y ≠ σ_{γ_{y'}(z)}|_Y`.
    #[serde(rename = "1")]
    Condition1 {
        #[serde(serialize_with = "one_based")]
        z: usize,
        #[serde(serialize_with = "one_based")]
        y: usize,
        #[serde(serialize_with = "one_based")]
        y_prime: usize,
    },
    /// `γ_{σ_z(y)}|_Z ≠ γ_{σ_{z'}(y)}|_Z`.
    #[serde(rename = "2")]
    Condition2 {
        #[serde(serialize_with = "one_based")]
        y: usize,
        #[serde(serialize_with = "one_based")]
        z: usize,
        #[serde(serialize_with = "one_based")]
        z_prime: usize,
    },
    /// `σ_y(z) = image` and `σ_image|_Y ≠ σ_z|_Y`.
    #[serde(rename = "3")]
    Condition3 {
        #[serde(serialize_with = "one_based")]
        y: usize,
        #[serde(serialize_with = "one_based")]
        z: usize,
        #[serde(serialize_with = "one_based")]
        image: usize,
    },
    /// `σ_z(y) = image` and `σ_image|_Z ≠ σ_y|_Z`.
    #[serde(rename = "4")]
    Condition4 {
        #[serde(serialize_with = "one_based")]
        z: usize,
        #[serde(serialize_with = "one_based")]
        y: usize,
        #[serde(serialize_with = "one_based")]
        image: usize,
    },
}

fn check_split(s: &Solution, y: &[usize], z: &[usize]) -> Result<()> {
    let n = s.n();
    if y.is_empty() || z.is_empty() {
        return Err(Error::NotAPartition("Y and Z must be non-empty".into()));
    }
    let mut seen = vec![0u8; n];
    for &x in y.iter().chain(z) {
        if x >= n {
            return Err(Error::IndexOutOfRange { index: x, n });
        }
        seen[x] += 1;
    }
    if let Some(x) = seen.iter().position(|&c| c != 1) {
        return Err(Error::NotAPartition(format!(
            "point {} occurs {} times",
            x + 1,
            seen[x]
        )));
    }
    let in_y: Vec<bool> = (0..n).map(|x| y.contains(&x)).collect();
    for (i, sigma) in s.sigmas().iter().enumerate() {
        for &x in y.iter().chain(z) {
            if in_y[sigma.apply(x)] != in_y[x] {
                return Err(Error::NotInvariant {
                    sigma: i,
                    point: x,
                    image: sigma.apply(x),
                });
            }
        }
    }
    Ok(())
}

fn sorted(v: &[usize]) -> Vec<usize> {
    let mut v = v.to_vec();
    v.sort_unstable();
    v
}

/// Every violation of the conditions for the ordered split `(Y, Z)`, in
/// condition order and then lexicographic order of the fields.
pub fn gtu_violations(
    s: &Solution,
    y: &[usize],
    z: &[usize],
    mode: GtuMode,
) -> Result<Vec<GtuViolation>> {
    check_split(s, y, z)?;
    if mode == GtuMode::SquareFree && !s.is_square_free() {
        return Err(Error::PreconditionUnmet(
            "square-free conditions on a solution that is not square-free".into(),
        ));
    }
    let (y, z) = (sorted(y), sorted(z));
    let mut out = Vec::new();
    match mode {
        GtuMode::General => {
            for &zz in &z {
                for &a in &y {
                    for &b in &y {
                        let sa = s.sigma(s.gamma(a).apply(zz));
                        let sb = s.sigma(s.gamma(b).apply(zz));
                        if a != b && !sa.agrees_on(sb, &y) {
                            out.push(GtuViolation::Condition1 {
                                z: zz,
                                y: a,
                                y_prime: b,
                            });
                        }
                    }
                }
            }
            for &yy in &y {
                for &a in &z {
                    for &b in &z {
                        let ga = s.gamma(s.sigma(a).apply(yy));
                        let gb = s.gamma(s.sigma(b).apply(yy));
                        if a != b && !ga.agrees_on(gb, &z) {
                            out.push(GtuViolation::Condition2 {
                                y: yy,
                                z: a,
                                z_prime: b,
                            });
                        }
                    }
                }
            }
        }
        GtuMode::SquareFree => {
            for &yy in &y {
                for &zz in &z {
                    let image = s.sigma(yy).apply(zz);
                    if !s.sigma(image).agrees_on(s.sigma(zz), &y) {
                        out.push(GtuViolation::Condition3 {
                            y: yy,
                            z: zz,
                            image,
                        });
                    }
                }
            }
            for &zz in &z {
                for &yy in &y {
                    let image = s.sigma(zz).apply(yy);
                    if !s.sigma(image).agrees_on(s.sigma(yy), &z) {
                        out.push(GtuViolation::Condition4 {
                            z: zz,
                            y: yy,
                            image,
                        });
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Checks one ordered split; the witness is the first violation.
pub fn check_gtu_pair(
    s: &Solution,
    y: &[usize],
    z: &[usize],
    mode: GtuMode,
) -> Result<Verdict<GtuViolation>> {
    Ok(match gtu_violations(s, y, z, mode)?.into_iter().next() {
        Some(v) => Err(v),
        None => Ok(()),
    })
}

/// An ordered split that passed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GtuDecomposition {
    #[serde(rename = "Y", serialize_with = "one_based_vec")]
    pub y: Vec<usize>,
    #[serde(rename = "Z", serialize_with = "one_based_vec")]
    pub z: Vec<usize>,
    pub mode: GtuMode,
}

/// One candidate split examined by [`search_gtu`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GtuCandidate {
    #[serde(rename = "Y", serialize_with = "one_based_vec")]
    pub y: Vec<usize>,
    #[serde(rename = "Z", serialize_with = "one_based_vec")]
    pub z: Vec<usize>,
    /// Empty iff the split passed.
    pub violations: Vec<GtuViolation>,
}

/// Outcome of a decomposition search with per-candidate diagnostics.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GtuSearch {
    pub mode: GtuMode,
    pub decomposition: Option<GtuDecomposition>,
    pub candidates: Vec<GtuCandidate>,
}

fn one_based_vec<S: serde::Serializer>(v: &[usize], s: S) -> std::result::Result<S::Ok, S::Error> {
    v.iter().map(|x| x + 1).collect::<Vec<_>>().serialize(s)
}

/// Non-empty proper subsets of `{0..m}` as sorted index lists, in
/// lexicographic order.
fn proper_subsets(m: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut cur: Vec<usize> = Vec::new();
    let mut started = false;
    std::iter::from_fn(move || loop {
        if !started {
            started = true;
            if m < 2 {
                return None;
            }
            cur.push(0);
        } else if let Some(&last) = cur.last() {
            if last + 1 < m {
                cur.push(last + 1);
            } else {
                cur.pop();
                let top = cur.pop()?;
                cur.push(top + 1);
            }
        } else {
            return None;
        }
        if cur.len() < m {
            return Some(cur.clone());
        }
    })
}

/// Tries every ordered split into a non-empty proper union of orbits `Y`
/// and its complement `Z`, stopping at the first that passes. A single
/// orbit admits no split.
pub fn search_gtu(s: &Solution, mode: GtuMode) -> Result<GtuSearch> {
    let orbits = s.orbits().classes();
    let mut candidates = Vec::new();
    for subset in proper_subsets(orbits.len()) {
        let mut y: Vec<usize> = subset.iter().flat_map(|&k| orbits[k].clone()).collect();
        y.sort_unstable();
        let z: Vec<usize> = (0..s.n()).filter(|x| y.binary_search(x).is_err()).collect();
        let violations = gtu_violations(s, &y, &z, mode)?;
        let passed = violations.is_empty();
        candidates.push(GtuCandidate {
            y: y.clone(),
            z: z.clone(),
            violations,
        });
        if passed {
            return Ok(GtuSearch {
                mode,
                decomposition: Some(GtuDecomposition { y, z, mode }),
                candidates,
            });
        }
    }
    Ok(GtuSearch {
        mode,
        decomposition: None,
        candidates,
    })
}

/// First passing split in the mode matching the solution.
pub fn find_gtu_decomposition(s: &Solution) -> Result<Option<GtuDecomposition>> {
    Ok(search_gtu(s, GtuMode::for_solution(s))?.decomposition)
}

/// Every `σ_i` is a single cycle or the identity.
pub fn check_cyclic_generators(s: &Solution) -> bool {
    s.sigmas().iter().all(|p| p.is_cyclic())
}

fn require_cyclic_square_free(s: &Solution) -> Result<()> {
    if !s.is_square_free() {
        return Err(Error::PreconditionUnmet(
            "solution is not square-free".into(),
        ));
    }
    if !check_cyclic_generators(s) {
        return Err(Error::PreconditionUnmet(
            "some sigma_i is not a cycle".into(),
        ));
    }
    Ok(())
}

/// Why the conjugacy statement for cyclic generators failed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Key2Failure {
    /// `σ_a` moves some point of `orbit` but `σ_b` is the identity there,
    /// with `a, b` in one orbit.
    Identity {
        #[serde(serialize_with = "one_based")]
        a: usize,
        #[serde(serialize_with = "one_based")]
        b: usize,
        #[serde(serialize_with = "one_based")]
        orbit: usize,
    },
    /// `σ_a` and `σ_b` are not conjugate in `G_r`.
    NotConjugate {
        #[serde(serialize_with = "one_based")]
        a: usize,
        #[serde(serialize_with = "one_based")]
        b: usize,
    },
}

/// For square-free solutions with cyclic generators: within an orbit, the
/// `σ` are pairwise conjugate in `G_r`, and they are non-trivial on the
/// same orbits.
pub fn check_key2(s: &Solution) -> Result<Verdict<Key2Failure>> {
    require_cyclic_square_free(s)?;
    let orbits = s.orbits().classes();
    let group = s.iyb_group().closure()?;
    for members in &orbits {
        for &a in members {
            for (k, target) in orbits.iter().enumerate() {
                if s.sigma(a).is_identity_on(target) {
                    continue;
                }
                if let Some(&b) = members.iter().find(|&&b| s.sigma(b).is_identity_on(target)) {
                    return Ok(Err(Key2Failure::Identity { a, b, orbit: k }));
                }
            }
        }
        let a = members[0];
        for &b in &members[1..] {
            if !group.are_conjugate(s.sigma(a), s.sigma(b))? {
                return Ok(Err(Key2Failure::NotConjugate { a, b }));
            }
        }
    }
    Ok(Ok(()))
}

/// For square-free solutions with cyclic generators: strongly retractable,
/// and a twisted union when `n > 1`.
pub fn check_theorem_cyclic1(s: &Solution) -> Result<bool> {
    require_cyclic_square_free(s)?;
    let retractable = crate::retract::strong_level(s)?.is_some();
    let split = s.n() < 2 || find_gtu_decomposition(s)?.is_some();
    Ok(retractable && split)
}
