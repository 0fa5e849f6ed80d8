//! Reduced words in the free group `F_n = <x1, ..., xn>` and its characters.

use std::collections::HashSet;
use std::fmt;
use std::hash::Hash;

use crate::error::{Error, Result};
use crate::phase::Angle;

/// A freely reduced word in `F_n`, stored run-length encoded as
/// `(generator index, nonzero exponent)` pairs with distinct adjacent indices.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FreeWord {
    rank: usize,
    letters: Vec<(usize, i64)>,
}

impl FreeWord {
    pub fn identity(rank: usize) -> Self {
        Self {
            rank,
            letters: Vec::new(),
        }
    }

    /// The generator `x_index`.
    pub fn generator(rank: usize, index: usize) -> Result<Self> {
        Self::reduce(rank, &[(index, 1)])
    }

    /// Reduces a raw list of `(index, exponent)` pairs with a single stack pass.
    pub fn reduce(rank: usize, raw: &[(usize, i64)]) -> Result<Self> {
        if let Some(&(index, _)) = raw.iter().find(|(i, _)| *i == 0 || *i > rank) {
            return Err(Error::IndexOutOfRange { index, rank });
        }
        let mut w = Self::identity(rank);
        for &(i, e) in raw {
            w.push(i, e);
        }
        Ok(w)
    }

    fn push(&mut self, index: usize, exp: i64) {
        if exp == 0 {
            return;
        }
        match self.letters.last_mut() {
            Some((last, e)) if *last == index => {
                *e += exp;
                if *e == 0 {
                    self.letters.pop();
                }
            }
            _ => self.letters.push((index, exp)),
        }
    }

    /// `x1 x2 ... xn`, fixed by every braid automorphism.
    pub fn boundary_word(rank: usize) -> Self {
        Self {
            rank,
            letters: (1..=rank).map(|i| (i, 1)).collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn letters(&self) -> &[(usize, i64)] {
        &self.letters
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    /// Word length `sum |exponent|`.
    pub fn len(&self) -> usize {
        self.letters
            .iter()
            .map(|(_, e)| e.unsigned_abs() as usize)
            .sum()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    fn check_rank(&self, other: &Self) -> Result<()> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch {
                left: self.rank,
                right: other.rank,
            });
        }
        Ok(())
    }

    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check_rank(other)?;
        let mut out = self.clone();
        out.append(other);
        Ok(out)
    }

    /// In-place product with a word of the same rank; the caller checks ranks.
    pub(crate) fn append(&mut self, other: &Self) {
        for &(i, e) in &other.letters {
            self.push(i, e);
        }
    }

    pub fn invert(&self) -> Self {
        Self {
            rank: self.rank,
            letters: self.letters.iter().rev().map(|&(i, e)| (i, -e)).collect(),
        }
    }

    /// `by⁻¹ · self · by`.
    pub fn conjugate(&self, by: &Self) -> Result<Self> {
        self.check_rank(by)?;
        let mut out = by.invert();
        out.append(self);
        out.append(by);
        Ok(out)
    }

    pub fn pow(&self, k: i64) -> Self {
        let base = if k < 0 { self.invert() } else { self.clone() };
        let mut out = Self::identity(self.rank);
        for _ in 0..k.unsigned_abs() {
            out.append(&base);
        }
        out
    }

    /// Exponent sum per generator.
    pub fn abelianize(&self) -> Vec<i64> {
        let mut v = vec![0; self.rank];
        for &(i, e) in &self.letters {
            v[i - 1] += e;
        }
        v
    }

    /// The same word viewed in `F_rank` for a larger rank.
    pub fn promote(&self, rank: usize) -> Result<Self> {
        if rank < self.rank {
            return Err(Error::RankMismatch {
                left: self.rank,
                right: rank,
            });
        }
        Ok(Self {
            rank,
            letters: self.letters.clone(),
        })
    }

    /// Substitutes `images[i-1]` for each `x_i` and reduces.
    pub(crate) fn substitute(&self, images: &[FreeWord]) -> FreeWord {
        let rank = images.first().map_or(self.rank, |w| w.rank);
        let mut out = Self::identity(rank);
        for &(i, e) in &self.letters {
            let img = &images[i - 1];
            let piece = if e < 0 { img.invert() } else { img.clone() };
            for _ in 0..e.unsigned_abs() {
                out.append(&piece);
            }
        }
        out
    }

    /// Parses `x1*x2^-1*x1^2`; `e` or `1` is the identity.
    pub fn parse(rank: usize, s: &str) -> Result<Self> {
        let raw = parse_word(s, 'x')?;
        Self::reduce(rank, &raw)
    }
}

/// Splits `g3*g1^-2` style text into `(index, exponent)` pairs.
pub(crate) fn parse_word(s: &str, letter: char) -> Result<Vec<(usize, i64)>> {
    let s = s.trim();
    if s.is_empty() || s == "e" || s == "1" {
        return Ok(Vec::new());
    }
    s.split('*')
        .map(|tok| {
            let tok = tok.trim();
            let body = tok
                .strip_prefix(letter)
                .ok_or_else(|| Error::Parse(format!("expected {letter}<k>, got {tok:?}")))?;
            let (idx, exp) = match body.split_once('^') {
                Some((i, e)) => (i, e.trim()),
                None => (body, "1"),
            };
            let idx = idx
                .trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad generator index in {tok:?}")))?;
            let exp = exp
                .parse::<i64>()
                .map_err(|_| Error::Parse(format!("bad exponent in {tok:?}")))?;
            Ok((idx, exp))
        })
        .collect()
}

pub(crate) fn write_word(
    f: &mut fmt::Formatter<'_>,
    letters: impl Iterator<Item = (String, i64)>,
) -> fmt::Result {
    let mut empty = true;
    for (sym, e) in letters {
        if !empty {
            write!(f, "*")?;
        }
        empty = false;
        if e == 1 {
            write!(f, "{sym}")?;
        } else {
            write!(f, "{sym}^{e}")?;
        }
    }
    if empty {
        write!(f, "e")?;
    }
    Ok(())
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_word(f, self.letters.iter().map(|&(i, e)| (format!("x{i}"), e)))
    }
}

impl fmt::Debug for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FreeWord[F{}]({self})", self.rank)
    }
}

/// A homomorphism `F_n → T`, given by the images of the generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Character {
    values: Vec<Angle>,
}

impl Character {
    pub fn new(values: Vec<Angle>) -> Self {
        Self { values }
    }

    pub fn zero(rank: usize) -> Self {
        Self::new(vec![Angle::zero(); rank])
    }

    pub fn rank(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[Angle] {
        &self.values
    }

    pub fn eval(&self, u: &FreeWord) -> Result<Angle> {
        if u.rank() != self.rank() {
            return Err(Error::RankMismatch {
                left: self.rank(),
                right: u.rank(),
            });
        }
        Ok(u.letters()
            .iter()
            .map(|&(i, e)| self.values[i - 1].scale(e))
            .sum())
    }
}

/// Anything that `F_n` can conjugate: `x · g · x⁻¹`.
pub trait FreeConjugable {
    type Key: Eq + Hash;
    fn rank(&self) -> usize;
    fn conjugate_by_free(&self, x: &FreeWord) -> Self;
    /// A canonical key; equal keys iff equal group elements.
    fn canonical_key(&self) -> Self::Key;
}

impl FreeConjugable for FreeWord {
    type Key = FreeWord;
    fn rank(&self) -> usize {
        self.rank
    }
    fn conjugate_by_free(&self, x: &FreeWord) -> Self {
        let mut out = x.clone();
        out.append(self);
        out.append(&x.invert());
        out
    }
    fn canonical_key(&self) -> FreeWord {
        self.clone()
    }
}

/// Outcome of a bounded conjugacy-orbit enumeration.
#[derive(Clone, Debug)]
pub struct OrbitProbe<T> {
    /// Number of distinct conjugates found.
    pub size: usize,
    /// Whether every conjugate coincided with the element itself.
    pub singleton: bool,
    /// Up to eight distinct conjugates, in discovery order.
    pub samples: Vec<T>,
}

/// All reduced words of length at most `max_len`, in length-lexicographic order.
pub fn reduced_words_up_to(rank: usize, max_len: usize) -> Vec<FreeWord> {
    // letters ordered x1, x1^-1, x2, x2^-1, ...
    let alphabet: Vec<(usize, i64)> = (1..=rank).flat_map(|i| [(i, 1), (i, -1)]).collect();
    let mut out = vec![FreeWord::identity(rank)];
    let mut layer: Vec<Vec<(usize, i64)>> = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for &(i, e) in &alphabet {
                if matches!(w.last(), Some(&(j, f)) if j == i && f == -e) {
                    continue;
                }
                let mut v = w.clone();
                v.push((i, e));
                next.push(v);
            }
        }
        out.extend(
            next.iter()
                .map(|v| FreeWord::reduce(rank, v).expect("in range")),
        );
        layer = next;
    }
    out
}

/// Enumerates `{x g x⁻¹ : |x| ≤ bound}` with exact de-duplication.
///
/// This is a semi-decision probe: a singleton result says nothing about
/// conjugators longer than `bound`.
pub fn conjugate_orbit_probe<G: FreeConjugable + Clone>(g: &G, bound: usize) -> OrbitProbe<G> {
    let mut seen = HashSet::new();
    let mut samples = Vec::new();
    for x in reduced_words_up_to(g.rank(), bound) {
        let c = g.conjugate_by_free(&x);
        if seen.insert(c.canonical_key()) && samples.len() < 8 {
            samples.push(c);
        }
    }
    let size = seen.len();
    OrbitProbe {
        size,
        singleton: size == 1,
        samples,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(rank: usize, s: &str) -> FreeWord {
        FreeWord::parse(rank, s).unwrap()
    }

    #[test]
    fn reduce_examples() {
        assert!(FreeWord::reduce(2, &[(1, 1), (1, -1)])
            .unwrap()
            .is_identity());
        assert_eq!(
            FreeWord::reduce(2, &[(1, 1), (2, 1), (2, 1)]).unwrap(),
            w(2, "x1*x2^2")
        );
        let raw = [(2, -1), (1, 1), (2, 1), (2, -1), (1, -1), (2, 1)];
        assert!(FreeWord::reduce(2, &raw).unwrap().is_identity());
        assert_eq!(
            FreeWord::reduce(2, &[(3, 1)]),
            Err(Error::IndexOutOfRange { index: 3, rank: 2 })
        );
        assert!(FreeWord::reduce(2, &[(0, 1)]).is_err());
    }

    #[test]
    fn multiply_examples() {
        assert!(w(2, "x1").multiply(&w(2, "x1^-1")).unwrap().is_identity());
        assert_eq!(
            w(2, "x1*x2").multiply(&w(2, "x2^-1*x1")).unwrap(),
            w(2, "x1^2")
        );
        assert!(w(2, "x2^-1*x1*x2")
            .multiply(&w(2, "x2^-1*x1^-1*x2"))
            .unwrap()
            .is_identity());
        assert!(w(2, "x1").multiply(&w(3, "x1")).is_err());
    }

    #[test]
    fn invert_and_conjugate() {
        assert_eq!(w(2, "x1*x2^-1").invert(), w(2, "x2*x1^-1"));
        assert_eq!(
            w(2, "x1").conjugate(&w(2, "x2")).unwrap(),
            w(2, "x2^-1*x1*x2")
        );
        assert!(w(2, "e").conjugate(&w(2, "x1*x2^3")).unwrap().is_identity());
    }

    #[test]
    fn abelianize_examples() {
        assert_eq!(w(2, "x1*x2*x1^-1").abelianize(), vec![0, 1]);
        assert_eq!(w(2, "x1*x2").abelianize(), vec![1, 1]);
        assert_eq!(w(2, "x1*x2").pow(3).abelianize(), vec![3, 3]);
    }

    #[test]
    fn character_examples() {
        let f = Character::new(vec![Angle::rational(1, 4), Angle::zero()]);
        assert_eq!(f.eval(&w(2, "x1^2")).unwrap(), Angle::rational(1, 2));
        assert!(f.eval(&w(2, "e")).unwrap().is_zero());
        let g = Character::new(vec![Angle::rational(1, 3), Angle::rational(1, 6)]);
        assert_eq!(g.eval(&w(2, "x2^-1*x1*x2")).unwrap(), Angle::rational(1, 3));
        assert!(g.eval(&w(3, "x1")).is_err());
    }

    #[test]
    fn text_round_trip() {
        for s in ["x1*x2^-1*x1^2", "e", "x3^-4"] {
            assert_eq!(w(3, s).to_string(), s);
        }
        assert_eq!(w(2, "x1 * x1"), w(2, "x1^2"));
        assert!(FreeWord::parse(2, "y1").is_err());
        assert!(FreeWord::parse(2, "x1^a").is_err());
    }

    #[test]
    fn orbit_probe_examples() {
        let g = w(2, "x1");
        let probe = conjugate_orbit_probe(&g, 3);
        assert!(probe.size >= 3);
        assert!(!probe.singleton);
        let e = FreeWord::identity(2);
        let probe = conjugate_orbit_probe(&e, 3);
        assert_eq!(probe.size, 1);
        assert!(probe.singleton);
    }

    #[test]
    fn enumeration_counts() {
        // 1 + 4 + 12 + 36 reduced words of length <= 3 in F_2
        assert_eq!(reduced_words_up_to(2, 3).len(), 53);
        let words = reduced_words_up_to(2, 3);
        let distinct: HashSet<_> = words.iter().collect();
        assert_eq!(distinct.len(), words.len());
    }
}
