//! Finite involutive non-degenerate solutions `(X, r)` with `X = {0..n}`.
//!
//! A solution is stored through its left actions `σ_i` and right actions
//! `γ_j`, so that `r(i, j) = (σ_i(j), γ_j(i))`. Every [`Solution`] value has
//! passed the exhaustive check of involutivity, non-degeneracy and the braid
//! relation; there is no way to hold an unvalidated one. Raw tables that
//! may be broken are represented by [`RTable`] and checked with
//! [`validate_table`].
//!
//! For an involutive map the `σ` alone determine `r`: from `r(r(i,j)) =
//! (i,j)` one gets `γ_j(i) = σ_k⁻¹(i)` with `k = σ_i(j)`. This is the formula
//! used by [`Solution::from_sigma`] and [`RTable::from_sigmas`].

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::perm::{Perm, PermGroup};

/// Outcome of a check that either holds or produces a witness.
pub type Verdict<W> = std::result::Result<(), W>;

/// An ordered pair of points (0-based; displayed 1-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pair(pub usize, pub usize);

impl fmt::Display for Pair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.0 + 1, self.1 + 1)
    }
}

impl Serialize for Pair {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.0 + 1, self.1 + 1].serialize(s)
    }
}

/// Why a table fails to be a solution.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Failure {
    /// `r(r(pair)) ≠ pair`.
    NotInvolutive { pair: Pair },
    /// `σ_index` is not a bijection (1-based in JSON).
    SigmaNotBijective {
        #[serde(serialize_with = "one_based")]
        index: usize,
    },
    /// `γ_index` is not a bijection.
    GammaNotBijective {
        #[serde(serialize_with = "one_based")]
        index: usize,
    },
    /// The two composites of the braid relation differ on this triple.
    Braid {
        #[serde(serialize_with = "one_based_triple")]
        triple: (usize, usize, usize),
    },
    /// `σ_i σ_j ≠ σ_k σ_l` where `r(i,j) = (k,l)`.
    Criterion { pair: Pair },
}

pub(crate) fn one_based<S: serde::Serializer>(
    x: &usize,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_u64(*x as u64 + 1)
}

fn one_based_triple<S: serde::Serializer>(
    t: &(usize, usize, usize),
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    [t.0 + 1, t.1 + 1, t.2 + 1].serialize(s)
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::NotInvolutive { pair } => write!(f, "r(r{pair}) != {pair}"),
            Failure::SigmaNotBijective { index } => {
                write!(f, "sigma_{} is not a bijection", index + 1)
            }
            Failure::GammaNotBijective { index } => {
                write!(f, "gamma_{} is not a bijection", index + 1)
            }
            Failure::Braid { triple: (a, b, c) } => {
                write!(
                    f,
                    "braid composites differ on ({},{},{})",
                    a + 1,
                    b + 1,
                    c + 1
                )
            }
            Failure::Criterion { pair } => write!(f, "criterion fails at {pair}"),
        }
    }
}

/// A raw map `X² → X²` given by its table; not necessarily a solution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RTable {
    n: usize,
    entries: Vec<(usize, usize)>,
}

impl RTable {
    /// `rows[i][j]` is the 0-based image of `(i, j)`.
    pub fn new(rows: Vec<Vec<(usize, usize)>>) -> Result<RTable> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::Parse("empty r table".into()));
        }
        let mut entries = Vec::with_capacity(n * n);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != n {
                return Err(Error::Parse(format!(
                    "row {} has {} entries, expected {n}",
                    i + 1,
                    row.len()
                )));
            }
            for (k, l) in row {
                for x in [k, l] {
                    if x >= n {
                        return Err(Error::IndexOutOfRange { index: x, n });
                    }
                }
                entries.push((k, l));
            }
        }
        Ok(RTable { n, entries })
    }

    /// The involutive table determined by the left actions.
    pub fn from_sigmas(sigmas: &[Perm]) -> Result<RTable> {
        let n = sigmas.len();
        if n == 0 {
            return Err(Error::Parse("no permutations given".into()));
        }
        if let Some(bad) = sigmas.iter().find(|s| s.degree() != n) {
            return Err(Error::DegreeMismatch {
                left: n,
                right: bad.degree(),
            });
        }
        let inverses: Vec<Perm> = sigmas.iter().map(Perm::inverse).collect();
        let mut entries = Vec::with_capacity(n * n);
        for (i, sigma) in sigmas.iter().enumerate() {
            for j in 0..n {
                let k = sigma.apply(j);
                entries.push((k, inverses[k].apply(i)));
            }
        }
        Ok(RTable { n, entries })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> (usize, usize) {
        self.entries[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<(usize, usize)>> {
        self.entries.chunks(self.n).map(<[_]>::to_vec).collect()
    }
}

/// Result of the exhaustive axiom checks on a table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub involutive: bool,
    pub nondegenerate: bool,
    pub braid: bool,
    pub square_free: bool,
    /// First failing axiom in the order involutive, non-degenerate, braid;
    /// present iff one of those three is false. Square-freeness is a
    /// property, not an axiom, and never produces a failure.
    pub first_failure: Option<Failure>,
}

impl ValidationReport {
    pub fn is_solution(&self) -> bool {
        self.involutive && self.nondegenerate && self.braid
    }
}

fn first_non_involutive(t: &RTable) -> Option<Pair> {
    let n = t.n;
    (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .find(|&(i, j)| {
            let (k, l) = t.get(i, j);
            t.get(k, l) != (i, j)
        })
        .map(|(i, j)| Pair(i, j))
}

fn first_degenerate(t: &RTable) -> Option<Failure> {
    let n = t.n;
    let is_bijective = |f: &dyn Fn(usize) -> usize| {
        let mut seen = vec![false; n];
        (0..n).all(|x| !std::mem::replace(&mut seen[f(x)], true))
    };
    if let Some(index) = (0..n).find(|&i| !is_bijective(&|j| t.get(i, j).0)) {
        return Some(Failure::SigmaNotBijective { index });
    }
    (0..n)
        .find(|&j| !is_bijective(&|i| t.get(i, j).1))
        .map(|index| Failure::GammaNotBijective { index })
}

fn first_braid_failure(t: &RTable) -> Option<(usize, usize, usize)> {
    let n = t.n;
    for a in 0..n {
        for b in 0..n {
            let (a1, b1) = t.get(a, b);
            for c in 0..n {
                // r12 r23 r12: r12 acts first
                let (b2, c2) = t.get(b1, c);
                let (a3, b3) = t.get(a1, b2);
                let left = (a3, b3, c2);
                // r23 r12 r23
                let (y1, z1) = t.get(b, c);
                let (x2, y2) = t.get(a, y1);
                let (y3, z3) = t.get(y2, z1);
                if left != (x2, y3, z3) {
                    return Some((a, b, c));
                }
            }
        }
    }
    None
}

/// Exhaustive axiom check over all `n²` pairs and `n³` triples.
pub fn validate_table(t: &RTable) -> ValidationReport {
    let invol = first_non_involutive(t);
    let degen = first_degenerate(t);
    let braid = first_braid_failure(t);
    let square_free = (0..t.n).all(|i| t.get(i, i) == (i, i));
    let first_failure = invol
        .map(|pair| Failure::NotInvolutive { pair })
        .or_else(|| degen.clone())
        .or(braid.map(|triple| Failure::Braid { triple }));
    ValidationReport {
        involutive: invol.is_none(),
        nondegenerate: degen.is_none(),
        braid: braid.is_none(),
        square_free,
        first_failure,
    }
}

/// A validated finite involutive non-degenerate solution.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Solution {
    sigma: Vec<Perm>,
    gamma: Vec<Perm>,
    square_free: bool,
}

impl Solution {
    /// Validates a raw table and extracts `σ` and `γ`.
    pub fn from_r_table(t: &RTable) -> Result<Solution> {
        let report = validate_table(t);
        match report.first_failure {
            Some(Failure::NotInvolutive { pair }) => return Err(Error::NotInvolutive(pair)),
            Some(f @ (Failure::SigmaNotBijective { .. } | Failure::GammaNotBijective { .. })) => {
                return Err(Error::NotNondegenerate(f))
            }
            Some(f) => return Err(Error::BraidFails(f)),
            None => {}
        }
        let n = t.n;
        let sigma = (0..n)
            .map(|i| Perm::from_images_unchecked((0..n).map(|j| t.get(i, j).0).collect()))
            .collect();
        let gamma = (0..n)
            .map(|j| Perm::from_images_unchecked((0..n).map(|i| t.get(i, j).1).collect()))
            .collect();
        Ok(Solution {
            sigma,
            gamma,
            square_free: report.square_free,
        })
    }

    /// Square-free construction from the left actions. Accepts iff every
    /// `σ_i` fixes `i` and `σ_i σ_j = σ_k σ_l` whenever `r(i,j) = (k,l)`;
    /// the full axiom check is run afterwards as well.
    pub fn from_sigma(sigmas: Vec<Perm>) -> Result<Solution> {
        let t = RTable::from_sigmas(&sigmas)?;
        for (i, s) in sigmas.iter().enumerate() {
            if s.apply(i) != i {
                return Err(Error::NotSquareFreeInput {
                    index: i,
                    image: s.apply(i),
                });
            }
        }
        if let Err(pair) = criterion(&sigmas, &t) {
            return Err(Error::CriterionFails(pair));
        }
        Solution::from_r_table(&t)
    }

    /// General involutive construction from the left actions, with no
    /// square-free requirement. Used by the document reader.
    pub fn from_sigma_general(sigmas: Vec<Perm>) -> Result<Solution> {
        Solution::from_r_table(&RTable::from_sigmas(&sigmas)?)
    }

    /// Parses one cycle string per point, e.g. `["()", "(3,4)", ...]`.
    pub fn from_cycle_strings<S: AsRef<str>>(cycles: &[S]) -> Result<Solution> {
        let n = cycles.len();
        let sigmas = cycles
            .iter()
            .map(|c| Perm::parse_cycles(n, c.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        Solution::from_sigma(sigmas)
    }

    /// The solution `r(i,j) = (j,i)`.
    pub fn trivial(n: usize) -> Solution {
        assert!(n >= 1, "a solution needs at least one point");
        let id = Perm::identity(n);
        Solution {
            sigma: vec![id.clone(); n],
            gamma: vec![id; n],
            square_free: true,
        }
    }

    pub fn n(&self) -> usize {
        self.sigma.len()
    }

    pub fn sigma(&self, i: usize) -> &Perm {
        &self.sigma[i]
    }

    pub fn sigmas(&self) -> &[Perm] {
        &self.sigma
    }

    pub fn gamma(&self, j: usize) -> &Perm {
        &self.gamma[j]
    }

    pub fn gammas(&self) -> &[Perm] {
        &self.gamma
    }

    pub fn is_square_free(&self) -> bool {
        self.square_free
    }

    /// `r(i, j)` without bounds reporting.
    #[inline]
    pub fn r(&self, i: usize, j: usize) -> (usize, usize) {
        (self.sigma[i].apply(j), self.gamma[j].apply(i))
    }

    pub fn r_apply(&self, i: usize, j: usize) -> Result<(usize, usize)> {
        let n = self.n();
        for x in [i, j] {
            if x >= n {
                return Err(Error::IndexOutOfRange { index: x, n });
            }
        }
        Ok(self.r(i, j))
    }

    pub fn r_table(&self) -> RTable {
        let n = self.n();
        RTable {
            n,
            entries: (0..n)
                .flat_map(|i| (0..n).map(move |j| (i, j)))
                .map(|(i, j)| self.r(i, j))
                .collect(),
        }
    }

    /// Re-runs the exhaustive checks.
    pub fn validate(&self) -> ValidationReport {
        validate_table(&self.r_table())
    }

    /// Row-major `σ` image table, 0-based.
    pub fn sigma_table(&self) -> Vec<usize> {
        self.sigma
            .iter()
            .flat_map(|s| s.images().iter().copied())
            .collect()
    }

    fn distinct(perms: &[Perm]) -> Vec<Perm> {
        let mut v = perms.to_vec();
        v.sort();
        v.dedup();
        v
    }

    /// `G_r`, generated by the distinct `σ_i`.
    pub fn iyb_group(&self) -> PermGroup {
        PermGroup::new(Self::distinct(&self.sigma)).expect("σ share degree n")
    }

    /// The group generated by the distinct `γ_j`; equal to `G_r` as a set.
    pub fn gamma_group(&self) -> PermGroup {
        PermGroup::new(Self::distinct(&self.gamma)).expect("γ share degree n")
    }

    pub fn orbits(&self) -> Partition {
        self.iyb_group().orbits()
    }

    pub fn is_trivial(&self) -> bool {
        self.sigma.iter().all(Perm::is_identity)
    }

    /// `σ_i σ_j = σ_k σ_l` for every `r(i,j) = (k,l)`.
    pub fn check_lemma_permutat(&self) -> Verdict<Pair> {
        criterion(&self.sigma, &self.r_table())
    }

    /// Restriction to a subset invariant under every `σ_i`, relabeled
    /// order-preservingly to `{0..|subset|}`.
    pub fn restrict(&self, subset: &[usize]) -> Result<Solution> {
        let n = self.n();
        let mut points = subset.to_vec();
        points.sort_unstable();
        points.dedup();
        if points.is_empty() {
            return Err(Error::PreconditionUnmet(
                "restriction to an empty set".into(),
            ));
        }
        if let Some(&bad) = points.iter().find(|&&x| x >= n) {
            return Err(Error::IndexOutOfRange { index: bad, n });
        }
        let mut new_index = vec![usize::MAX; n];
        for (k, &x) in points.iter().enumerate() {
            new_index[x] = k;
        }
        let member: Vec<bool> = new_index.iter().map(|&k| k != usize::MAX).collect();
        for (s, sigma) in self.sigma.iter().enumerate() {
            if let Some(x) = sigma.maps_into(&points, &member) {
                return Err(Error::NotInvariant {
                    sigma: s,
                    point: x,
                    image: sigma.apply(x),
                });
            }
        }
        let rows = points
            .iter()
            .map(|&i| {
                points
                    .iter()
                    .map(|&j| {
                        let (k, l) = self.r(i, j);
                        if member[k] && member[l] {
                            Ok((new_index[k], new_index[l]))
                        } else {
                            Err(Error::Internal(format!(
                                "r maps {} outside an invariant subset",
                                Pair(i, j)
                            )))
                        }
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Solution::from_r_table(&RTable::new(rows)?)
            .map_err(|e| Error::Internal(format!("restriction is not a solution: {e}")))
    }

    /// The isomorphic copy `(p×p) r (p×p)⁻¹`: `σ'_{p(i)} = p σ_i p⁻¹`.
    pub fn relabel(&self, p: &Perm) -> Solution {
        assert_eq!(p.degree(), self.n(), "relabeling degree");
        let n = self.n();
        let mut sigma = vec![Perm::identity(n); n];
        let mut gamma = vec![Perm::identity(n); n];
        for i in 0..n {
            sigma[p.apply(i)] = self.sigma[i].conjugate_by(p);
            gamma[p.apply(i)] = self.gamma[i].conjugate_by(p);
        }
        Solution {
            sigma,
            gamma,
            square_free: self.square_free,
        }
    }
}

/// Checks `σ_i σ_j = σ_k σ_l` with `(k,l) = t(i,j)`, first failure in
/// lexicographic order.
fn criterion(sigmas: &[Perm], t: &RTable) -> Verdict<Pair> {
    let n = sigmas.len();
    for i in 0..n {
        for j in 0..n {
            let (k, l) = t.get(i, j);
            let ok = (0..n).all(|x| {
                sigmas[i].apply(sigmas[j].apply(x)) == sigmas[k].apply(sigmas[l].apply(x))
            });
            if !ok {
                return Err(Pair(i, j));
            }
        }
    }
    Ok(())
}
