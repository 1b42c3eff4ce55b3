//! Isomorphism testing and canonical forms of solutions.
//!
//! Two solutions are isomorphic through `p` when `σ^b_{p(i)} = p σ^a_i p⁻¹`
//! for all `i` (the `γ` follow, being determined by the `σ`).
//!
//! The canonical form is the lexicographically smallest row-major `σ`
//! table over all *discovery labelings*. A discovery labeling grows a
//! labeled set by scanning pairs of labeled points `(k, m)` in block order
//! (by `max(k, m)`, then `k`, then `m`) and giving the next free label to
//! `σ_{q(k)}(q(m))` whenever it is unlabeled. When the labeled set is closed
//! the search branches over the next point, restricted to the smallest
//! point color and to one point per twin class (points whose transposition
//! is an automorphism). The set of discovery labelings is intrinsic to the
//! isomorphism class, so the minimum over it is a complete invariant.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::perm::Perm;
use crate::solution::Solution;

/// Largest `n` accepted by [`Solution::canonical_form`].
pub const CANONICAL_CAP: usize = 12;

const NONE: usize = usize::MAX;

/// Isomorphism-invariant color of a point.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct Color {
    orbit_size: usize,
    sigma_type: Vec<usize>,
    gamma_type: Vec<usize>,
    retract_class: usize,
}

fn colors(s: &Solution) -> Vec<Color> {
    let orbits = s.orbits();
    let orbit_sizes: Vec<usize> = orbits.classes().iter().map(Vec::len).collect();
    let mut class_size: HashMap<&Perm, usize> = HashMap::new();
    for p in s.sigmas() {
        *class_size.entry(p).or_default() += 1;
    }
    (0..s.n())
        .map(|x| Color {
            orbit_size: orbit_sizes[orbits.class_of(x)],
            sigma_type: s.sigma(x).cycle_type(),
            gamma_type: s.gamma(x).cycle_type(),
            retract_class: class_size[s.sigma(x)],
        })
        .collect()
}

impl Solution {
    /// A relabeling `p` with `σ^other_{p(i)} = p σ_i p⁻¹`, if one exists.
    pub fn is_isomorphic(&self, other: &Solution) -> Option<Perm> {
        let n = self.n();
        if n != other.n() || self.is_square_free() != other.is_square_free() {
            return None;
        }
        let ca = colors(self);
        let cb = colors(other);
        let mut sa = ca.clone();
        let mut sb = cb.clone();
        sa.sort();
        sb.sort();
        if sa != sb {
            return None;
        }
        let search = IsoSearch {
            a: self,
            b: other,
            ca,
            cb,
        };
        search
            .run(vec![NONE; n], vec![NONE; n])
            .map(Perm::from_images_unchecked)
    }

    /// Canonical representative of the isomorphism class; see the module
    /// docs for the ordering used.
    pub fn canonical_form(&self) -> Result<Solution> {
        self.canonical_form_with_cap(CANONICAL_CAP)
    }

    pub fn canonical_form_with_cap(&self, cap: usize) -> Result<Solution> {
        if self.n() > cap {
            return Err(Error::CapExceeded {
                what: format!("canonicalization of {} points", self.n()),
                cap,
            });
        }
        let p = canonical_labeling(self);
        Ok(self.relabel(&p))
    }
}

struct IsoSearch<'a> {
    a: &'a Solution,
    b: &'a Solution,
    ca: Vec<Color>,
    cb: Vec<Color>,
}

impl IsoSearch<'_> {
    /// Assigns `map[i] = y` and propagates the forced consequences of
    /// `map[σ_i(j)] = σ'_{map i}(map j)`. Returns false on a contradiction.
    fn assign(&self, map: &mut [usize], inv: &mut [usize], i: usize, y: usize) -> bool {
        let (a, b) = (self.a, self.b);
        let mut pending = vec![(i, y)];
        let mut assigned: Vec<usize> = (0..a.n()).filter(|&x| map[x] != NONE).collect();
        while let Some((i, y)) = pending.pop() {
            if map[i] != NONE || inv[y] != NONE {
                if map[i] != y {
                    return false;
                }
                continue;
            }
            if self.ca[i] != self.cb[y] {
                return false;
            }
            map[i] = y;
            inv[y] = i;
            assigned.push(i);
            for &j in &assigned {
                let yj = map[j];
                for (src, dst) in [
                    (a.sigma(i).apply(j), b.sigma(y).apply(yj)),
                    (a.sigma(j).apply(i), b.sigma(yj).apply(y)),
                ] {
                    if map[src] == NONE && inv[dst] == NONE {
                        pending.push((src, dst));
                    } else if map[src] != dst {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn run(&self, map: Vec<usize>, inv: Vec<usize>) -> Option<Vec<usize>> {
        let Some(i) = map.iter().position(|&x| x == NONE) else {
            let p = Perm::from_images_unchecked(map.clone());
            return (0..self.a.n())
                .all(|i| &self.a.sigma(i).conjugate_by(&p) == self.b.sigma(map[i]))
                .then_some(map);
        };
        for y in 0..self.b.n() {
            if inv[y] != NONE || self.ca[i] != self.cb[y] {
                continue;
            }
            let mut m = map.clone();
            let mut v = inv.clone();
            if self.assign(&mut m, &mut v, i, y) {
                if let Some(found) = self.run(m, v) {
                    return Some(found);
                }
            }
        }
        None
    }
}

/// Twin class representative: the least point whose transposition with
/// `x` is an automorphism.
fn twin_classes(s: &Solution) -> Vec<usize> {
    let n = s.n();
    let mut rep: Vec<usize> = (0..n).collect();
    for x in 0..n {
        if rep[x] != x {
            continue;
        }
        for (y, r) in rep.iter_mut().enumerate().skip(x + 1) {
            if *r != y {
                continue;
            }
            let mut t: Vec<usize> = (0..n).collect();
            t.swap(x, y);
            let tau = Perm::from_images_unchecked(t);
            if (0..n).all(|i| s.sigma(tau.apply(i)) == &s.sigma(i).conjugate_by(&tau)) {
                *r = x;
            }
        }
    }
    rep
}

struct Labeling<'a> {
    s: &'a Solution,
    colors: Vec<Color>,
    twins: Vec<usize>,
    best: Option<(Vec<usize>, Vec<usize>)>,
}

#[derive(Clone)]
struct State {
    order: Vec<usize>,
    label: Vec<usize>,
    block: usize,
    pos: usize,
}

impl State {
    fn push(&mut self, x: usize) {
        self.label[x] = self.order.len();
        self.order.push(x);
    }

    /// Extends the labeling until the labeled set is closed.
    fn close(&mut self, s: &Solution) {
        while self.block < self.order.len() {
            let b = self.block;
            let (k, m) = if self.pos < b {
                (self.pos, b)
            } else {
                (b, self.pos - b)
            };
            let x = s.sigma(self.order[k]).apply(self.order[m]);
            if self.label[x] == NONE {
                self.push(x);
            }
            self.pos += 1;
            if self.pos == 2 * b + 1 {
                self.block += 1;
                self.pos = 0;
            }
        }
    }
}

impl Labeling<'_> {
    fn run(&mut self, mut st: State) {
        st.close(self.s);
        let n = self.s.n();
        if st.order.len() == n {
            let table: Vec<usize> = st
                .order
                .iter()
                .flat_map(|&qk| st.order.iter().map(move |&qm| (qk, qm)))
                .map(|(qk, qm)| st.label[self.s.sigma(qk).apply(qm)])
                .collect();
            if self.best.as_ref().is_none_or(|(t, _)| table < *t) {
                self.best = Some((table, st.label));
            }
            return;
        }
        let free = (0..n).filter(|&x| st.label[x] == NONE);
        let min_color = free.clone().map(|x| &self.colors[x]).min().cloned();
        let mut tried: Vec<usize> = Vec::new();
        for x in free {
            if Some(&self.colors[x]) != min_color.as_ref() || tried.contains(&self.twins[x]) {
                continue;
            }
            tried.push(self.twins[x]);
            let mut next = st.clone();
            next.push(x);
            self.run(next);
        }
    }
}

fn canonical_labeling(s: &Solution) -> Perm {
    let n = s.n();
    let mut search = Labeling {
        s,
        colors: colors(s),
        twins: twin_classes(s),
        best: None,
    };
    search.run(State {
        order: Vec::with_capacity(n),
        label: vec![NONE; n],
        block: 0,
        pos: 0,
    });
    let (_, label) = search.best.expect("at least one labeling");
    Perm::from_images_unchecked(label)
}
