//! Braid words on `n` strands, the permutation quotient, distinguished
//! elements and the two word-problem oracles.

mod garside;
mod pure;

pub use garside::{garside_normal_form, GarsideForm};
pub use pure::{
    linking_numbers, pure_generator, rewrite_pure, transversal_word, PureLetter, PureWord,
};

use std::fmt;

use crate::artin::artin_auto;
use crate::error::{Error, Result};
use crate::freegroup::{parse_word, write_word};

/// A word in `s_1, ..., s_{n-1}`.
///
/// Letters are signed indices: `i` is `s_i` and `-i` is `s_i⁻¹`. Adjacent
/// inverse pairs are cancelled on construction; no other braid relation is
/// applied.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn identity(strands: usize) -> Self {
        Self {
            strands,
            letters: Vec::new(),
        }
    }

    pub fn new(strands: usize, letters: &[i32]) -> Result<Self> {
        let mut w = Self::identity(strands);
        for &l in letters {
            let index = l.unsigned_abs() as usize;
            if l == 0 || index >= strands {
                return Err(Error::BraidIndexOutOfRange { index, strands });
            }
            w.push(l);
        }
        Ok(w)
    }

    /// `s_index` (or its inverse for `inverse = true`).
    pub fn generator(strands: usize, index: usize, inverse: bool) -> Result<Self> {
        let l = index as i32;
        Self::new(strands, &[if inverse { -l } else { l }])
    }

    fn push(&mut self, l: i32) {
        if self.letters.last() == Some(&-l) {
            self.letters.pop();
        } else {
            self.letters.push(l);
        }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch {
                left: self.strands,
                right: other.strands,
            });
        }
        Ok(())
    }

    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for &l in &other.letters {
            out.push(l);
        }
        Ok(out)
    }

    pub fn inverse(&self) -> Self {
        Self {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|l| -l).collect(),
        }
    }

    pub fn pow(&self, k: i64) -> Self {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut out = Self::identity(self.strands);
        for _ in 0..k.unsigned_abs() {
            for &l in &base.letters {
                out.push(l);
            }
        }
        out
    }

    /// Word-problem oracle through Artin's representation, which is faithful:
    /// two braids are equal iff their automorphisms of `F_n` agree on
    /// every generator.
    pub fn equal(&self, other: &Self) -> Result<bool> {
        self.check(other)?;
        Ok(artin_auto(self) == artin_auto(other))
    }

    /// Whether `self` and `other` commute in `B_n`.
    pub fn commutes_with(&self, other: &Self) -> Result<bool> {
        self.multiply(other)?.equal(&other.multiply(self)?)
    }

    /// Stable embedding `B_m → B_n` on the first `m` strands, `s_i ↦ s_i`.
    pub fn embed(&self, strands: usize) -> Result<Self> {
        if strands < self.strands {
            return Err(Error::EmbedDown {
                from: self.strands,
                to: strands,
            });
        }
        Ok(Self {
            strands,
            letters: self.letters.clone(),
        })
    }

    pub fn permutation(&self) -> Permutation {
        permutation_of(self)
    }

    pub fn is_pure(&self) -> bool {
        is_pure(self)
    }

    /// Parses `s1*s2^-1*s1^2`; `e` or `1` is the identity.
    pub fn parse(strands: usize, s: &str) -> Result<Self> {
        let raw = parse_word(s, 's')?;
        let mut letters = Vec::new();
        for (i, e) in raw {
            if i == 0 || i >= strands {
                return Err(Error::BraidIndexOutOfRange { index: i, strands });
            }
            let l = if e < 0 { -(i as i32) } else { i as i32 };
            letters.extend(std::iter::repeat_n(l, e.unsigned_abs() as usize));
        }
        Self::new(strands, &letters)
    }

    /// Run-length view of the letters as `(index, exponent)` pairs.
    pub fn syllables(&self) -> Vec<(usize, i64)> {
        let mut out: Vec<(usize, i64)> = Vec::new();
        for &l in &self.letters {
            let (i, e) = (l.unsigned_abs() as usize, l.signum() as i64);
            match out.last_mut() {
                Some((j, f)) if *j == i && f.signum() == e => *f += e,
                _ => out.push((i, e)),
            }
        }
        out
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_word(
            f,
            self.syllables()
                .into_iter()
                .map(|(i, e)| (format!("s{i}"), e)),
        )
    }
}

impl fmt::Debug for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BraidWord[B{}]({self})", self.strands)
    }
}

/// A permutation of `{1, ..., n}`, stored 0-based: `image[k]` is the image of `k`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self {
            image: (0..n).collect(),
        }
    }

    /// Builds from a 0-based image array; `None` unless it is a bijection.
    pub fn from_images(image: Vec<usize>) -> Option<Self> {
        let mut seen = vec![false; image.len()];
        for &i in &image {
            if i >= image.len() || std::mem::replace(&mut seen[i], true) {
                return None;
            }
        }
        Some(Self { image })
    }

    /// The transposition `(i, i+1)`, 1-based `i`.
    pub fn transposition(n: usize, i: usize) -> Self {
        let mut p = Self::identity(n);
        p.image.swap(i - 1, i);
        p
    }

    /// The longest permutation `k ↦ n+1-k`, image of `Δ`.
    pub fn longest(n: usize) -> Self {
        Self {
            image: (0..n).rev().collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.image.len()
    }

    /// 1-based image of a 1-based point.
    pub fn apply(&self, k: usize) -> usize {
        self.image[k - 1] + 1
    }

    pub(crate) fn images(&self) -> &[usize] {
        &self.image
    }

    /// Function composition: `(self ∘ other)(k) = self(other(k))`.
    pub fn compose(&self, other: &Self) -> Self {
        Self {
            image: other.image.iter().map(|&k| self.image[k]).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut image = vec![0; self.image.len()];
        for (k, &v) in self.image.iter().enumerate() {
            image[v] = k;
        }
        Self { image }
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(k, &v)| k == v)
    }

    /// Number of inversions, the length of the positive permutation braid.
    pub fn length(&self) -> usize {
        let n = self.image.len();
        (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .filter(|&(a, b)| self.image[a] > self.image[b])
            .count()
    }
}

/// Image in `S_n`, `s_i ↦ (i i+1)`, with `perm(ab) = perm(a) ∘ perm(b)`.
pub fn permutation_of(b: &BraidWord) -> Permutation {
    let mut image: Vec<usize> = (0..b.strands).collect();
    // right-composing with τ_i swaps positions i and i+1
    for &l in &b.letters {
        let i = l.unsigned_abs() as usize - 1;
        image.swap(i, i + 1);
    }
    Permutation { image }
}

pub fn is_pure(b: &BraidWord) -> bool {
    permutation_of(b).is_identity()
}

/// `Δ = s1 (s2 s1) ... (s_{n-1} ... s1)`.
pub fn delta(n: usize) -> Result<BraidWord> {
    if n < 1 {
        return Err(Error::TooFewStrands { min: 1, got: n });
    }
    let letters: Vec<i32> = (1..n as i32).flat_map(|k| (1..=k).rev()).collect();
    BraidWord::new(n, &letters)
}

/// The central element `z = Δ²`.
pub fn center_z(n: usize) -> Result<BraidWord> {
    Ok(delta(n)?.pow(2))
}

/// `(s1 ... s_{n-1})^n`.
pub fn center_z_cyclic(n: usize) -> Result<BraidWord> {
    let letters: Vec<i32> = (1..n as i32).collect();
    Ok(BraidWord::new(n, &letters)?.pow(n as i64))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(n: usize, s: &str) -> BraidWord {
        BraidWord::parse(n, s).unwrap()
    }

    #[test]
    fn permutation_examples() {
        assert_eq!(b(3, "s1").permutation(), Permutation::transposition(3, 1));
        assert!(b(3, "s1^2").permutation().is_identity());
        let p = b(3, "s1*s2").permutation();
        assert_eq!((p.apply(1), p.apply(2), p.apply(3)), (2, 3, 1));
    }

    #[test]
    fn purity_examples() {
        assert!(b(3, "s1^2").is_pure());
        assert!(!b(3, "s1").is_pure());
        assert!(center_z(3).unwrap().is_pure());
    }

    #[test]
    fn delta_and_center_words() {
        assert_eq!(delta(3).unwrap(), b(3, "s1*s2*s1"));
        assert_eq!(delta(4).unwrap(), b(4, "s1*s2*s1*s3*s2*s1"));
        assert_eq!(center_z(4).unwrap().len(), 12);
        assert!(center_z(3)
            .unwrap()
            .equal(&center_z_cyclic(3).unwrap())
            .unwrap());
    }

    #[test]
    fn equality_oracle_examples() {
        assert!(b(3, "s1*s2*s1").equal(&b(3, "s2*s1*s2")).unwrap());
        assert!(b(4, "s1*s3").equal(&b(4, "s3*s1")).unwrap());
        assert!(!b(3, "s1").equal(&b(3, "s2")).unwrap());
        assert!(b(3, "s1").equal(&b(4, "s1")).is_err());
    }

    #[test]
    fn construction_reduces_freely() {
        assert!(b(3, "s1*s1^-1").is_empty());
        assert_eq!(b(3, "s1*s2*s2^-1*s1").to_string(), "s1^2");
        assert!(BraidWord::new(3, &[3]).is_err());
        assert!(BraidWord::new(3, &[0]).is_err());
        assert!(BraidWord::parse(3, "s3").is_err());
    }

    #[test]
    fn text_round_trip() {
        for s in ["s1*s2^-1*s1^2", "e", "s3^-2*s1"] {
            assert_eq!(b(4, s).to_string(), s);
        }
    }

    #[test]
    fn embedding() {
        let s1 = b(2, "s1");
        assert_eq!(s1.embed(3).unwrap(), b(3, "s1"));
        assert!(BraidWord::identity(2).embed(5).unwrap().is_empty());
        assert!(b(3, "s2").embed(2).is_err());
        let z3 = center_z(3).unwrap().embed(4).unwrap();
        assert!(!z3.equal(&center_z(4).unwrap()).unwrap());
    }

    #[test]
    fn permutation_helpers() {
        assert!(Permutation::from_images(vec![0, 0]).is_none());
        assert_eq!(Permutation::longest(4).length(), 6);
        let p = Permutation::from_images(vec![2, 0, 1]).unwrap();
        assert!(p.compose(&p.inverse()).is_identity());
    }
}
