//! Test-side reference implementations that share no code with the
//! library: plain `Vec<usize>` permutations, full axiom checks and
//! isomorphism by trying every relabeling.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use ybe::{Perm, Solution};

/// 0-based `σ` image tables, one row per point.
pub type Sigmas = Vec<Vec<usize>>;

pub fn all_perms(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in all_perms(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out.sort();
    out
}

fn invert(p: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; p.len()];
    for (a, &b) in p.iter().enumerate() {
        inv[b] = a;
    }
    inv
}

/// `r(i,j) = (σ_i(j), σ_k⁻¹(i))` with `k = σ_i(j)`, then every axiom on
/// the resulting table.
pub fn is_solution(s: &Sigmas) -> bool {
    let n = s.len();
    let inv: Vec<Vec<usize>> = s.iter().map(|p| invert(p)).collect();
    let r = |i: usize, j: usize| {
        let k = s[i][j];
        (k, inv[k][i])
    };
    for i in 0..n {
        for j in 0..n {
            let (k, l) = r(i, j);
            if r(k, l) != (i, j) {
                return false;
            }
        }
    }
    for j in 0..n {
        let mut seen = vec![false; n];
        for i in 0..n {
            seen[r(i, j).1] = true;
        }
        if seen.contains(&false) {
            return false;
        }
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let (a1, b1) = r(a, b);
                let (b2, c2) = r(b1, c);
                let (a3, b3) = r(a1, b2);
                let (y1, z1) = r(b, c);
                let (x2, y2) = r(a, y1);
                let (y3, z3) = r(y2, z1);
                if (a3, b3, c2) != (x2, y3, z3) {
                    return false;
                }
            }
        }
    }
    true
}

/// Every square-free solution on `n` points, from the full product of
/// point-fixing permutations.
pub fn brute_force_square_free(n: usize) -> Vec<Sigmas> {
    let perms = all_perms(n);
    let fixing: Vec<Vec<&Vec<usize>>> = (0..n)
        .map(|i| perms.iter().filter(|p| p[i] == i).collect())
        .collect();
    let mut out = Vec::new();
    let mut idx = vec![0usize; n];
    loop {
        let s: Sigmas = (0..n).map(|i| fixing[i][idx[i]].clone()).collect();
        if is_solution(&s) {
            out.push(s);
        }
        let mut k = 0;
        loop {
            if k == n {
                out.sort();
                return out;
            }
            idx[k] += 1;
            if idx[k] < fixing[k].len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

/// `σ'_{p(i)} = p σ_i p⁻¹`.
pub fn relabel(s: &Sigmas, p: &[usize]) -> Sigmas {
    let n = s.len();
    let pinv = invert(p);
    let mut out = vec![vec![0; n]; n];
    for i in 0..n {
        for x in 0..n {
            out[p[i]][x] = p[s[i][pinv[x]]];
        }
    }
    out
}

/// Smallest relabeled table over all `n!` relabelings.
pub fn lex_min_form(s: &Sigmas) -> Sigmas {
    all_perms(s.len())
        .iter()
        .map(|p| relabel(s, p))
        .min()
        .expect("at least one relabeling")
}

/// Isomorphism classes keyed by their lex-minimal form.
pub fn iso_classes(all: &[Sigmas]) -> BTreeMap<Sigmas, Vec<Sigmas>> {
    let mut classes: BTreeMap<Sigmas, Vec<Sigmas>> = BTreeMap::new();
    for s in all {
        classes.entry(lex_min_form(s)).or_default().push(s.clone());
    }
    classes
}

pub fn sigmas_of(s: &Solution) -> Sigmas {
    s.sigmas().iter().map(|p| p.images().to_vec()).collect()
}

pub fn solution_of(s: &Sigmas) -> Solution {
    Solution::from_sigma(
        s.iter()
            .map(|p| Perm::from_images(p.clone()).unwrap())
            .collect(),
    )
    .unwrap()
}

/// Compares the enumerator with the oracle on `n` points.
pub fn compare_with_oracle(n: usize) -> Result<String, String> {
    let oracle = brute_force_square_free(n);
    let labeled: Vec<Sigmas> = ybe::enumerate::enumerate_square_free(n, false)
        .map_err(|e| e.to_string())?
        .iter()
        .map(sigmas_of)
        .collect();
    if labeled != oracle {
        return Err(format!(
            "n = {n}: enumerator found {} labeled solutions, oracle {}",
            labeled.len(),
            oracle.len()
        ));
    }
    let classes = iso_classes(&oracle);
    let forms: BTreeSet<Sigmas> = ybe::enumerate::enumerate_square_free(n, true)
        .map_err(|e| e.to_string())?
        .iter()
        .map(sigmas_of)
        .collect();
    let mut oracle_forms = BTreeSet::new();
    for members in classes.values() {
        let mut images = BTreeSet::new();
        for m in members {
            let c = solution_of(m).canonical_form().map_err(|e| e.to_string())?;
            images.insert(sigmas_of(&c));
        }
        if images.len() != 1 {
            return Err(format!(
                "n = {n}: one class has {} canonical forms",
                images.len()
            ));
        }
        oracle_forms.extend(images);
    }
    if oracle_forms.len() != classes.len() {
        return Err(format!("n = {n}: distinct classes share a canonical form"));
    }
    if oracle_forms != forms {
        return Err(format!("n = {n}: canonical-form sets differ"));
    }
    Ok(format!(
        "n = {n}: {} labeled, {} classes",
        oracle.len(),
        classes.len()
    ))
}
