//! The structure group `G(X, r)` realized inside `Fa_n ⋊ G_r`.
//!
//! Elements are pairs `(a, σ_a)` with `a` an integer exponent vector over
//! the free abelian basis `u_1..u_n` and `σ_a ∈ G_r`. The generator `x_i`
//! is `(u_i, σ_i)`, and the product is
//!
//! ```text
//! (a, p) · (b, q) = (a + p·b, p ∘ q),   (p·b)[p(j)] = b[j]
//! ```
//!
//! so that `p·u_j = u_{p(j)}`. For example with `p = (1 2 3)` and
//! `b = u_1`, `p·b = u_2`: the coordinate at position 1 moves to position
//! `p(1) = 2`, not to `p⁻¹(1) = 3`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::Perm;
use crate::solution::{Pair, Solution, Verdict};

/// An element `(a, σ_a)` of `Fa_n ⋊ G_r`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct StructureElem {
    pub vec: Vec<i64>,
    pub perm: Perm,
}

impl StructureElem {
    pub fn identity(n: usize) -> StructureElem {
        StructureElem {
            vec: vec![0; n],
            perm: Perm::identity(n),
        }
    }

    pub fn n(&self) -> usize {
        self.vec.len()
    }

    pub fn is_identity(&self) -> bool {
        self.vec.iter().all(|&x| x == 0) && self.perm.is_identity()
    }

    /// `(a + p·b, p ∘ q)`, failing on overflow instead of wrapping.
    pub fn mul(&self, other: &StructureElem) -> Result<StructureElem> {
        if self.n() != other.n() {
            return Err(Error::DegreeMismatch {
                left: self.n(),
                right: other.n(),
            });
        }
        let mut vec = self.vec.clone();
        for (j, &b) in other.vec.iter().enumerate() {
            let slot = &mut vec[self.perm.apply(j)];
            *slot = slot.checked_add(b).ok_or(Error::Overflow)?;
        }
        Ok(StructureElem {
            vec,
            perm: &self.perm * &other.perm,
        })
    }

    /// `(−p⁻¹·a, p⁻¹)`.
    pub fn inv(&self) -> Result<StructureElem> {
        let p_inv = self.perm.inverse();
        let mut vec = vec![0i64; self.n()];
        for (j, &a) in self.vec.iter().enumerate() {
            vec[p_inv.apply(j)] = a.checked_neg().ok_or(Error::Overflow)?;
        }
        Ok(StructureElem { vec, perm: p_inv })
    }
}

/// The generator `x_i = (u_i, σ_i)`.
pub fn gen(s: &Solution, i: usize) -> Result<StructureElem> {
    if i >= s.n() {
        return Err(Error::IndexOutOfRange { index: i, n: s.n() });
    }
    let mut vec = vec![0; s.n()];
    vec[i] = 1;
    Ok(StructureElem {
        vec,
        perm: s.sigma(i).clone(),
    })
}

/// One letter `x_i` or `x_i^{-1}` (0-based generator).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter {
    pub generator: usize,
    pub inverse: bool,
}

/// A word in the generators, read left to right.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Word {
    pub letters: Vec<Letter>,
}

impl Word {
    pub fn new(letters: Vec<Letter>) -> Word {
        Word { letters }
    }

    /// From 1-based signed indices: `[1, -3]` is `x1 x3^-1`.
    pub fn from_signed(indices: &[i64]) -> Result<Word> {
        indices
            .iter()
            .map(|&k| {
                if k == 0 {
                    Err(Error::Parse("generator index 0".into()))
                } else {
                    Ok(Letter {
                        generator: k.unsigned_abs() as usize - 1,
                        inverse: k < 0,
                    })
                }
            })
            .collect::<Result<Vec<_>>>()
            .map(Word::new)
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word { letters }
    }
}

/// Parses `x1 x3 x2^-1`; `xK^e` with integer `e` repeats the letter, and
/// `1` or the empty string is the empty word.
impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Word> {
        let mut letters = Vec::new();
        for token in s
            .split(|c: char| c.is_whitespace() || c == '*')
            .filter(|t| !t.is_empty())
        {
            if token == "1" {
                continue;
            }
            let body = token
                .strip_prefix('x')
                .ok_or_else(|| Error::Parse(format!("expected xK, got {token:?}")))?;
            let (index, exp) = match body.split_once('^') {
                Some((i, e)) => (i, e),
                None => (body, "1"),
            };
            let index: usize = index
                .parse()
                .ok()
                .filter(|&i| i >= 1)
                .ok_or_else(|| Error::Parse(format!("bad generator in {token:?}")))?;
            let exp: i64 = exp
                .parse()
                .map_err(|_| Error::Parse(format!("bad exponent in {token:?}")))?;
            for _ in 0..exp.unsigned_abs() {
                letters.push(Letter {
                    generator: index - 1,
                    inverse: exp < 0,
                });
            }
        }
        Ok(Word { letters })
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        for (k, l) in self.letters.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "x{}", l.generator + 1)?;
            if l.inverse {
                f.write_str("^-1")?;
            }
        }
        Ok(())
    }
}

/// Left-to-right product of the letters; the empty word is the identity.
pub fn eval_word(s: &Solution, w: &Word) -> Result<StructureElem> {
    let mut acc = StructureElem::identity(s.n());
    for l in &w.letters {
        let g = gen(s, l.generator)?;
        let g = if l.inverse { g.inv()? } else { g };
        acc = acc.mul(&g)?;
    }
    Ok(acc)
}

/// `x_i x_j = x_k x_l` for every `r(i,j) = (k,l)`; witness `(i, j)`.
pub fn check_defining_relations(s: &Solution) -> Result<Verdict<Pair>> {
    let n = s.n();
    let gens = (0..n).map(|i| gen(s, i)).collect::<Result<Vec<_>>>()?;
    for i in 0..n {
        for j in 0..n {
            let (k, l) = s.r(i, j);
            if gens[i].mul(&gens[j])? != gens[k].mul(&gens[l])? {
                return Ok(Err(Pair(i, j)));
            }
        }
    }
    Ok(Ok(()))
}

/// The image of a word under the projection onto `G_r`, computed directly
/// from the `σ` without exponent vectors.
pub fn project_word(s: &Solution, w: &Word) -> Result<Perm> {
    let mut acc = Perm::identity(s.n());
    for l in &w.letters {
        if l.generator >= s.n() {
            return Err(Error::IndexOutOfRange {
                index: l.generator,
                n: s.n(),
            });
        }
        let p = s.sigma(l.generator);
        acc = if l.inverse {
            &acc * &p.inverse()
        } else {
            &acc * p
        };
    }
    Ok(acc)
}
