//! Exhaustive enumeration of square-free solutions on small sets.
//!
//! The search assigns `σ_0, σ_1, ...` in index order, each `σ_i` ranging
//! over the permutations fixing `i` in lexicographic order. A constraint
//! `σ_i σ_j = σ_k σ_l` with `k = σ_i(j)`, `l = σ_k⁻¹(i)` is checked as soon
//! as all four permutations are assigned. Every surviving tuple is then
//! built with [`Solution::from_sigma`], which also runs the full axiom
//! check.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::perm::Perm;
use crate::solution::Solution;

/// Default largest `n` for enumeration.
pub const ENUMERATION_CAP: usize = 6;

/// Hard limit on `n`, even with an override.
pub const ENUMERATION_LIMIT: usize = 8;

#[derive(Debug, Clone)]
pub struct EnumerateOptions {
    /// Emit one canonical form per isomorphism class.
    pub up_to_iso: bool,
    /// Worker threads; 1 runs on the calling thread.
    pub threads: usize,
    /// Largest accepted `n`; at most [`ENUMERATION_LIMIT`].
    pub cap: usize,
}

impl Default for EnumerateOptions {
    fn default() -> Self {
        EnumerateOptions {
            up_to_iso: false,
            threads: 1,
            cap: ENUMERATION_CAP,
        }
    }
}

/// All square-free solutions on `n` points, sorted by `σ` table; with
/// `up_to_iso`, one canonical form per isomorphism class.
pub fn enumerate_square_free(n: usize, up_to_iso: bool) -> Result<Vec<Solution>> {
    enumerate_with(
        n,
        &EnumerateOptions {
            up_to_iso,
            ..EnumerateOptions::default()
        },
    )
}

pub fn enumerate_with(n: usize, opts: &EnumerateOptions) -> Result<Vec<Solution>> {
    let cap = opts.cap.min(ENUMERATION_LIMIT);
    if n > cap {
        return Err(Error::CapExceeded {
            what: format!("enumeration on {n} points"),
            cap,
        });
    }
    if n == 0 {
        return Err(Error::PreconditionUnmet("n must be positive".into()));
    }
    let search = Search::new(n);
    let tuples: Vec<Vec<usize>> = in_pool(opts.threads, || {
        if opts.threads <= 1 {
            search
                .roots()
                .iter()
                .flat_map(|&c| search.branch(c))
                .collect()
        } else {
            search
                .roots()
                .par_iter()
                .map(|&c| search.branch(c))
                .collect::<Vec<_>>()
                .into_iter()
                .flatten()
                .collect()
        }
    })?;
    let build = |choice: &Vec<usize>| -> Result<Solution> {
        let sigmas = choice
            .iter()
            .enumerate()
            .map(|(i, &c)| Perm::from_images_unchecked(search.candidates[i][c].clone()))
            .collect();
        let s = Solution::from_sigma(sigmas)
            .map_err(|e| Error::Internal(format!("enumerated tuple rejected: {e}")))?;
        if opts.up_to_iso {
            s.canonical_form_with_cap(ENUMERATION_LIMIT)
        } else {
            Ok(s)
        }
    };
    let built: Vec<Solution> = in_pool(opts.threads, || {
        if opts.threads <= 1 {
            tuples.iter().map(build).collect::<Result<Vec<_>>>()
        } else {
            tuples.par_iter().map(build).collect::<Result<Vec<_>>>()
        }
    })??;
    let mut keyed: BTreeMap<Vec<usize>, Solution> = BTreeMap::new();
    for s in built {
        keyed.entry(s.sigma_table()).or_insert(s);
    }
    Ok(keyed.into_values().collect())
}

fn in_pool<T: Send>(threads: usize, f: impl FnOnce() -> T + Send) -> Result<T> {
    if threads <= 1 {
        return Ok(f());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Error::Internal(format!("thread pool: {e}")))?;
    Ok(pool.install(f))
}

enum Forced {
    Free,
    To(usize),
    Impossible,
}

struct Search {
    n: usize,
    /// `candidates[i]`: image tables of the permutations fixing `i`.
    candidates: Vec<Vec<Vec<usize>>>,
    inverses: Vec<Vec<Vec<usize>>>,
}

fn permutations_fixing(n: usize, fixed: usize) -> Vec<Vec<usize>> {
    let others: Vec<usize> = (0..n).filter(|&x| x != fixed).collect();
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(n);
    let mut used = vec![false; others.len()];
    fn rec(
        n: usize,
        fixed: usize,
        others: &[usize],
        used: &mut [bool],
        current: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if current.len() == n {
            out.push(current.clone());
            return;
        }
        if current.len() == fixed {
            current.push(fixed);
            rec(n, fixed, others, used, current, out);
            current.pop();
            return;
        }
        for k in 0..others.len() {
            if !used[k] {
                used[k] = true;
                current.push(others[k]);
                rec(n, fixed, others, used, current, out);
                current.pop();
                used[k] = false;
            }
        }
    }
    rec(n, fixed, &others, &mut used, &mut current, &mut out);
    out
}

impl Search {
    fn new(n: usize) -> Search {
        let candidates: Vec<Vec<Vec<usize>>> = (0..n).map(|i| permutations_fixing(n, i)).collect();
        let inverses = candidates
            .iter()
            .map(|cs| {
                cs.iter()
                    .map(|p| {
                        let mut inv = vec![0; n];
                        for (a, &b) in p.iter().enumerate() {
                            inv[b] = a;
                        }
                        inv
                    })
                    .collect()
            })
            .collect();
        Search {
            n,
            candidates,
            inverses,
        }
    }

    fn roots(&self) -> Vec<usize> {
        (0..self.candidates[0].len()).collect()
    }

    /// All complete assignments extending `σ_0 = candidates[0][root]`.
    fn branch(&self, root: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut choice = vec![root];
        if self.consistent(&choice) {
            self.extend(&mut choice, &mut out);
        }
        out
    }

    fn extend(&self, choice: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let d = choice.len();
        if d == self.n {
            out.push(choice.clone());
            return;
        }
        let range = match self.forced(choice) {
            Forced::Free => 0..self.candidates[d].len(),
            Forced::To(c) => c..c + 1,
            Forced::Impossible => return,
        };
        for c in range {
            choice.push(c);
            if self.consistent(choice) {
                self.extend(choice, out);
            }
            choice.pop();
        }
    }

    /// The candidate for the next index `d` fixed by a constraint whose
    /// other three permutations are assigned: `σ_d = σ_k⁻¹ σ_i σ_j` when
    /// `l = d`, or `σ_d = σ_i⁻¹ σ_k σ_l` when `j = d`. Every other forcing
    /// constraint is left to [`Search::consistent`].
    fn forced(&self, choice: &[usize]) -> Forced {
        let d = choice.len();
        let sigma = |i: usize| &self.candidates[i][choice[i]];
        let inverse = |i: usize| &self.inverses[i][choice[i]];
        for i in 0..d {
            for j in 0..=d {
                let k = sigma(i)[j];
                if k >= d {
                    continue;
                }
                let l = inverse(k)[i];
                let target: Vec<usize> = if j < d && l == d {
                    (0..self.n)
                        .map(|x| inverse(k)[sigma(i)[sigma(j)[x]]])
                        .collect()
                } else if j == d && l < d {
                    (0..self.n)
                        .map(|x| inverse(i)[sigma(k)[sigma(l)[x]]])
                        .collect()
                } else {
                    continue;
                };
                return match self.candidates[d].binary_search(&target) {
                    Ok(c) => Forced::To(c),
                    Err(_) => Forced::Impossible,
                };
            }
        }
        Forced::Free
    }

    /// Checks every constraint whose four indices are assigned and which
    /// involves the newest index.
    fn consistent(&self, choice: &[usize]) -> bool {
        let d = choice.len() - 1;
        let sigma = |i: usize| &self.candidates[i][choice[i]];
        let inverse = |i: usize| &self.inverses[i][choice[i]];
        for i in 0..=d {
            for j in 0..=d {
                let k = sigma(i)[j];
                if k > d {
                    continue;
                }
                let l = inverse(k)[i];
                if l > d || i.max(j).max(k).max(l) != d {
                    continue;
                }
                let (si, sj, sk, sl) = (sigma(i), sigma(j), sigma(k), sigma(l));
                if (0..self.n).any(|x| si[sj[x]] != sk[sl[x]]) {
                    return false;
                }
            }
        }
        true
    }
}
