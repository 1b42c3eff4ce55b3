//! Permutations of `{0..n}` and explicitly closed permutation groups.
//!
//! Points are 0-based in the Rust API. Cycle notation, `Display` and the
//! serde representation are 1-based, so `(9,10)(11,12)` swaps the points
//! with indices 8 and 9, and 10 and 11.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partition::Partition;

/// Closure cap used when none is given explicitly.
pub const DEFAULT_ELEMENT_CAP: usize = 1_000_000;

/// Environment variable overriding [`DEFAULT_ELEMENT_CAP`].
pub const ELEMENT_CAP_ENV: &str = "YBE_ELEMENT_CAP";

/// The closure cap in effect: `YBE_ELEMENT_CAP` if set and valid, else the default.
pub fn default_element_cap() -> usize {
    std::env::var(ELEMENT_CAP_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&c| c > 0)
        .unwrap_or(DEFAULT_ELEMENT_CAP)
}

/// A bijection of `{0..n}` stored as its image table.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn identity(degree: usize) -> Perm {
        Perm {
            images: (0..degree).collect(),
        }
    }

    /// Builds a permutation from 0-based images, checking bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Perm> {
        let n = images.len();
        if n == 0 {
            return Err(Error::NotAPermutation {
                degree: 0,
                detail: "empty image table".into(),
            });
        }
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n {
                return Err(Error::NotAPermutation {
                    degree: n,
                    detail: format!("image {} out of range", x + 1),
                });
            }
            if std::mem::replace(&mut seen[x], true) {
                return Err(Error::NotAPermutation {
                    degree: n,
                    detail: format!("image {} repeated", x + 1),
                });
            }
        }
        Ok(Perm { images })
    }

    /// Builds a permutation from 1-based images.
    pub fn from_one_based(images: &[usize]) -> Result<Perm> {
        let n = images.len();
        let shifted = images
            .iter()
            .map(|&x| {
                x.checked_sub(1).ok_or_else(|| Error::NotAPermutation {
                    degree: n,
                    detail: "image 0 in a 1-based table".into(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Perm::from_images(shifted)
    }

    pub(crate) fn from_images_unchecked(images: Vec<usize>) -> Perm {
        debug_assert!(Perm::from_images(images.clone()).is_ok());
        Perm { images }
    }

    /// Builds a permutation from 0-based disjoint cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Perm> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (pos, &x) in cycle.iter().enumerate() {
                if x >= degree {
                    return Err(Error::NotAPermutation {
                        degree,
                        detail: format!("point {} out of range", x + 1),
                    });
                }
                if std::mem::replace(&mut touched[x], true) {
                    return Err(Error::NotAPermutation {
                        degree,
                        detail: format!("point {} appears in two cycles", x + 1),
                    });
                }
                images[x] = cycle[(pos + 1) % cycle.len()];
            }
        }
        Ok(Perm { images })
    }

    /// Parses 1-based cycle notation such as `(9,10)(11,12)` or `(1 3 2 4)`.
    /// `()` and the empty string denote the identity.
    pub fn parse_cycles(degree: usize, text: &str) -> Result<Perm> {
        let mut cycles = Vec::new();
        let mut rest = text.trim();
        while !rest.is_empty() {
            let body = rest
                .strip_prefix('(')
                .ok_or_else(|| Error::Parse(format!("expected '(' in {text:?}")))?;
            let close = body
                .find(')')
                .ok_or_else(|| Error::Parse(format!("unclosed cycle in {text:?}")))?;
            let cycle = body[..close]
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.parse::<usize>()
                        .ok()
                        .filter(|&v| v >= 1)
                        .map(|v| v - 1)
                        .ok_or_else(|| Error::Parse(format!("bad point {t:?} in {text:?}")))
                })
                .collect::<Result<Vec<_>>>()?;
            if !cycle.is_empty() {
                cycles.push(cycle);
            }
            rest = body[close + 1..].trim_start();
        }
        Perm::from_cycles(degree, &cycles)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn to_one_based(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `self ∘ other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &Perm) -> Result<Perm> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(Perm {
            images: other.images.iter().map(|&x| self.images[x]).collect(),
        })
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x] = i;
        }
        Perm { images: inv }
    }

    /// `p ∘ self ∘ p⁻¹`.
    pub fn conjugate_by(&self, p: &Perm) -> Perm {
        let mut images = vec![0; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            images[p.images[i]] = p.images[x];
        }
        Perm { images }
    }

    /// Disjoint cycles of length ≥ 2, each starting at its minimal point,
    /// ordered by minimal point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.images[start] == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.images[start];
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            out.push(cycle);
        }
        out
    }

    /// Sorted lengths of the non-trivial cycles.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut t: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        t.sort_unstable();
        t
    }

    /// At most one non-trivial cycle; the identity counts as cyclic.
    pub fn is_cyclic(&self) -> bool {
        self.cycles().len() <= 1
    }

    pub fn is_identity_on(&self, points: &[usize]) -> bool {
        points.iter().all(|&x| self.images[x] == x)
    }

    pub fn agrees_on(&self, other: &Perm, points: &[usize]) -> bool {
        points.iter().all(|&x| self.images[x] == other.images[x])
    }

    pub fn maps_into(&self, points: &[usize], member: &[bool]) -> Option<usize> {
        points.iter().copied().find(|&x| !member[self.images[x]])
    }
}

impl Mul<&Perm> for &Perm {
    type Output = Perm;

    /// Composition `self ∘ rhs`. Panics on degree mismatch; use
    /// [`Perm::compose`] for a checked variant.
    fn mul(self, rhs: &Perm) -> Perm {
        assert_eq!(self.degree(), rhs.degree(), "degree mismatch");
        Perm {
            images: rhs.images.iter().map(|&x| self.images[x]).collect(),
        }
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            f.write_str("(")?;
            for (k, x) in c.iter().enumerate() {
                if k > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{}", x + 1)?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm[{}]{}", self.degree(), self)
    }
}

impl Serialize for Perm {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_one_based().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Perm {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(d)?;
        Perm::from_one_based(&v).map_err(serde::de::Error::custom)
    }
}

/// Parses a 1-based image list like `[2,1,3]` or a cycle string with an
/// explicit degree prefix `3:(1,2)`.
impl FromStr for Perm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Perm> {
        let s = s.trim();
        if s.starts_with('[') {
            let v: Vec<usize> = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
            return Perm::from_one_based(&v);
        }
        let (deg, cycles) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("expected 'degree:(cycles)', got {s:?}")))?;
        let deg = deg
            .trim()
            .parse::<usize>()
            .map_err(|e| Error::Parse(e.to_string()))?;
        Perm::parse_cycles(deg, cycles)
    }
}

/// A finitely generated permutation group, optionally with its full element
/// list materialized by [`PermGroup::closure`].
#[derive(Debug, Clone)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Perm>,
    elements: Option<Vec<Perm>>,
    element_cap: usize,
}

impl PermGroup {
    /// Generators must be non-empty and share one degree.
    pub fn new(generators: Vec<Perm>) -> Result<PermGroup> {
        let first = generators.first().ok_or_else(|| {
            Error::PreconditionUnmet("a group needs at least one generator".into())
        })?;
        let degree = first.degree();
        if let Some(bad) = generators.iter().find(|g| g.degree() != degree) {
            return Err(Error::DegreeMismatch {
                left: degree,
                right: bad.degree(),
            });
        }
        Ok(PermGroup {
            degree,
            generators,
            elements: None,
            element_cap: default_element_cap(),
        })
    }

    pub fn trivial(degree: usize) -> PermGroup {
        PermGroup {
            degree,
            generators: vec![Perm::identity(degree)],
            elements: None,
            element_cap: default_element_cap(),
        }
    }

    pub fn with_cap(mut self, cap: usize) -> PermGroup {
        self.element_cap = cap.max(1);
        self
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn element_cap(&self) -> usize {
        self.element_cap
    }

    /// Sorted element list, present after [`PermGroup::closure`].
    pub fn elements(&self) -> Option<&[Perm]> {
        self.elements.as_deref()
    }

    /// Breadth-first closure of the generators under composition. In a
    /// finite group this also yields inverses.
    pub fn closure(&self) -> Result<PermGroup> {
        if self.elements.is_some() {
            return Ok(self.clone());
        }
        let id = Perm::identity(self.degree);
        let mut seen: HashSet<Perm> = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(id.clone());
        queue.push_back(id);
        while let Some(g) = queue.pop_front() {
            for s in &self.generators {
                let h = s * &g;
                if !seen.contains(&h) {
                    if seen.len() >= self.element_cap {
                        return Err(Error::CapExceeded {
                            what: "group order".into(),
                            cap: self.element_cap,
                        });
                    }
                    seen.insert(h.clone());
                    queue.push_back(h);
                }
            }
        }
        let mut elements: Vec<Perm> = seen.into_iter().collect();
        elements.sort();
        Ok(PermGroup {
            elements: Some(elements),
            ..self.clone()
        })
    }

    pub fn order(&self) -> Result<usize> {
        match &self.elements {
            Some(e) => Ok(e.len()),
            None => Ok(self.closure()?.elements.map_or(0, |e| e.len())),
        }
    }

    pub fn contains(&self, p: &Perm) -> Result<bool> {
        let closed = self.closure()?;
        Ok(closed
            .elements
            .as_ref()
            .is_some_and(|e| e.binary_search(p).is_ok()))
    }

    /// Orbits of the natural action, classes sorted by minimal point.
    pub fn orbits(&self) -> Partition {
        let n = self.degree;
        let mut label = vec![usize::MAX; n];
        let mut next = 0;
        for start in 0..n {
            if label[start] != usize::MAX {
                continue;
            }
            label[start] = next;
            let mut stack = vec![start];
            while let Some(x) = stack.pop() {
                for g in &self.generators {
                    let y = g.apply(x);
                    if label[y] == usize::MAX {
                        label[y] = next;
                        stack.push(y);
                    }
                }
            }
            next += 1;
        }
        Partition::from_labels(&label)
    }

    /// Generators commute pairwise.
    pub fn is_abelian(&self) -> bool {
        let g = &self.generators;
        (0..g.len()).all(|i| (i + 1..g.len()).all(|j| &g[i] * &g[j] == &g[j] * &g[i]))
    }

    /// Whether `h a h⁻¹ = b` for some element `h` of the group.
    pub fn are_conjugate(&self, a: &Perm, b: &Perm) -> Result<bool> {
        if a == b {
            return Ok(true);
        }
        if a.cycle_type() != b.cycle_type() {
            return Ok(false);
        }
        let closed = self.closure()?;
        let elements = closed.elements.as_deref().unwrap_or_default();
        Ok(elements.iter().any(|h| &a.conjugate_by(h) == b))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(n: usize, s: &str) -> Perm {
        Perm::parse_cycles(n, s).unwrap()
    }

    #[test]
    fn compose_examples() {
        let a = cyc(4, "(1,2)");
        let b = cyc(4, "(3,4)");
        assert_eq!(a.compose(&b).unwrap(), cyc(4, "(1,2)(3,4)"));
        let c = cyc(3, "(1,2,3)");
        assert_eq!(c.compose(&c).unwrap(), cyc(3, "(1,3,2)"));
        assert_eq!(c.compose(&c.inverse()).unwrap(), Perm::identity(3));
        assert!(matches!(
            a.compose(&Perm::identity(3)),
            Err(Error::DegreeMismatch { left: 4, right: 3 })
        ));
    }

    #[test]
    fn compose_applies_right_factor_first() {
        let a = cyc(3, "(1,2)");
        let b = cyc(3, "(2,3)");
        // b sends 1 -> 1, then a sends 1 -> 2
        assert_eq!(a.compose(&b).unwrap().apply(0), 1);
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(Perm::identity(5).inverse(), Perm::identity(5));
        assert_eq!(cyc(3, "(1,2,3)").inverse(), cyc(3, "(1,3,2)"));
        let inv = cyc(4, "(1,2)(3,4)");
        assert_eq!(inv.inverse(), inv);
    }

    #[test]
    fn cycle_decomposition_and_display() {
        assert!(Perm::identity(4).cycles().is_empty());
        let p = cyc(8, "(5,7,6,8)(1,3,2,4)");
        assert_eq!(p.cycles(), vec![vec![0, 2, 1, 3], vec![4, 6, 5, 7]]);
        assert_eq!(p.to_string(), "(1,3,2,4)(5,7,6,8)");
        assert_eq!(Perm::identity(2).to_string(), "()");
        assert_eq!(p.cycle_type(), vec![4, 4]);
    }

    #[test]
    fn cyclic_examples() {
        assert!(cyc(5, "(1,2,3)").is_cyclic());
        assert!(!cyc(4, "(1,2)(3,4)").is_cyclic());
        assert!(Perm::identity(3).is_cyclic());
    }

    #[test]
    fn bad_inputs_rejected() {
        assert!(Perm::from_images(vec![0, 0]).is_err());
        assert!(Perm::from_images(vec![0, 2]).is_err());
        assert!(Perm::from_one_based(&[0, 1]).is_err());
        assert!(Perm::parse_cycles(3, "(1,2)(2,3)").is_err());
        assert!(Perm::parse_cycles(3, "(1,4)").is_err());
        assert!(Perm::parse_cycles(3, "(1,2").is_err());
        assert!(Perm::parse_cycles(3, "1,2").is_err());
    }

    #[test]
    fn from_str_forms() {
        assert_eq!("[2,1,3]".parse::<Perm>().unwrap(), cyc(3, "(1,2)"));
        assert_eq!("3:(1 2)".parse::<Perm>().unwrap(), cyc(3, "(1,2)"));
        assert_eq!("3:()".parse::<Perm>().unwrap(), Perm::identity(3));
    }

    #[test]
    fn closure_orders() {
        assert_eq!(PermGroup::trivial(3).order().unwrap(), 1);
        let klein = PermGroup::new(vec![cyc(4, "(1,2)"), cyc(4, "(3,4)")]).unwrap();
        assert_eq!(klein.order().unwrap(), 4);
        let s3 = PermGroup::new(vec![cyc(3, "(1,2)"), cyc(3, "(1,2,3)")]).unwrap();
        assert_eq!(s3.order().unwrap(), 6);
        let capped = s3.clone().with_cap(5);
        assert!(matches!(capped.closure(), Err(Error::CapExceeded { .. })));
        assert!(s3.clone().with_cap(6).closure().is_ok());
    }

    #[test]
    fn orbit_examples() {
        let g = PermGroup::trivial(3);
        assert_eq!(g.orbits().classes(), vec![vec![0], vec![1], vec![2]]);
        let g = PermGroup::new(vec![cyc(4, "(3,4)"), cyc(4, "(1,2)")]).unwrap();
        assert_eq!(g.orbits().classes(), vec![vec![0, 1], vec![2, 3]]);
    }

    #[test]
    fn abelian_examples() {
        let g = PermGroup::new(vec![cyc(4, "(1,2)"), cyc(4, "(3,4)")]).unwrap();
        assert!(g.is_abelian());
        let g = PermGroup::new(vec![cyc(3, "(1,2)"), cyc(3, "(1,3)")]).unwrap();
        assert!(!g.is_abelian());
    }

    #[test]
    fn conjugacy() {
        let klein = PermGroup::new(vec![cyc(4, "(1,2)"), cyc(4, "(3,4)")]).unwrap();
        let a = cyc(4, "(1,2)");
        assert!(klein.are_conjugate(&a, &a).unwrap());
        assert!(!klein.are_conjugate(&a, &cyc(4, "(3,4)")).unwrap());
        let s3 = PermGroup::new(vec![cyc(3, "(1,2)"), cyc(3, "(1,2,3)")]).unwrap();
        assert!(s3
            .are_conjugate(&cyc(3, "(1,2)"), &cyc(3, "(2,3)"))
            .unwrap());
        assert!(!s3
            .are_conjugate(&cyc(3, "(1,2)"), &cyc(3, "(1,2,3)"))
            .unwrap());
    }

    #[test]
    fn conjugate_by_relabels() {
        let a = cyc(4, "(1,2)");
        let p = cyc(4, "(1,3)(2,4)");
        assert_eq!(a.conjugate_by(&p), cyc(4, "(3,4)"));
        assert_eq!(a.conjugate_by(&p), &(&p * &a) * &p.inverse());
    }

    #[test]
    fn serde_is_one_based() {
        let p = cyc(3, "(1,2)");
        assert_eq!(serde_json::to_string(&p).unwrap(), "[2,1,3]");
        let q: Perm = serde_json::from_str("[2,1,3]").unwrap();
        assert_eq!(p, q);
        assert!(serde_json::from_str::<Perm>("[1,1]").is_err());
    }
}
