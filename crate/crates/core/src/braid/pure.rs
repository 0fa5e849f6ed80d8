//! Pure braid generators `a_{ij}` and Reidemeister–Schreier rewriting of
//! pure braids into the `a_{ij}` alphabet.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use super::garside::positive_word;
use super::{permutation_of, BraidWord, Permutation};
use crate::error::{Error, Result};
use crate::freegroup::write_word;

/// `a_{ij}^exp` with `1 ≤ i < j ≤ n`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct PureLetter {
    pub i: usize,
    pub j: usize,
    pub exp: i64,
}

impl PureLetter {
    fn new(i: usize, j: usize, exp: i64) -> Self {
        Self { i, j, exp }
    }

    fn inverse(self) -> Self {
        Self::new(self.i, self.j, -self.exp)
    }
}

/// A freely reduced word over `a_{ij}^{±1}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PureWord {
    strands: usize,
    letters: Vec<PureLetter>,
}

impl PureWord {
    pub fn identity(strands: usize) -> Self {
        Self {
            strands,
            letters: Vec::new(),
        }
    }

    pub fn new(strands: usize, raw: &[(usize, usize, i64)]) -> Result<Self> {
        let mut w = Self::identity(strands);
        for &(i, j, e) in raw {
            check_pair(i, j, strands)?;
            w.push(PureLetter::new(i, j, e));
        }
        Ok(w)
    }

    fn push(&mut self, l: PureLetter) {
        if l.exp == 0 {
            return;
        }
        match self.letters.last_mut() {
            Some(last) if (last.i, last.j) == (l.i, l.j) => {
                last.exp += l.exp;
                if last.exp == 0 {
                    self.letters.pop();
                }
            }
            _ => self.letters.push(l),
        }
    }

    fn extend(&mut self, other: &PureWord) {
        for &l in &other.letters {
            self.push(l);
        }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[PureLetter] {
        &self.letters
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> Self {
        Self {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    pub fn multiply(&self, other: &Self) -> Result<Self> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch {
                left: self.strands,
                right: other.strands,
            });
        }
        let mut out = self.clone();
        out.extend(other);
        Ok(out)
    }

    /// Replaces each `a_{ij}` by its braid word.
    pub fn expand(&self) -> BraidWord {
        let mut out = BraidWord::identity(self.strands);
        for l in &self.letters {
            let g = pure_generator(l.i, l.j, self.strands).expect("validated letters");
            out = out.multiply(&g.pow(l.exp)).expect("same strands");
        }
        out
    }

    /// Exponent sum of each `a_{ij}`; this is the abelianization of `P_n`.
    pub fn exponent_sums(&self) -> BTreeMap<(usize, usize), i64> {
        let mut sums = BTreeMap::new();
        for l in &self.letters {
            *sums.entry((l.i, l.j)).or_insert(0) += l.exp;
        }
        sums.retain(|_, v| *v != 0);
        sums
    }

    /// Parses `a(1,3)^-1*a(2,3)`; `e` or `1` is the identity.
    pub fn parse(strands: usize, s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "e" || s == "1" {
            return Ok(Self::identity(strands));
        }
        let mut raw = Vec::new();
        for tok in s.split('*') {
            let tok = tok.trim();
            let bad = || Error::Parse(format!("expected a(i,j)[^k], got {tok:?}"));
            let body = tok.strip_prefix("a(").ok_or_else(bad)?;
            let (pair, rest) = body.split_once(')').ok_or_else(bad)?;
            let (i, j) = pair.split_once(',').ok_or_else(bad)?;
            let i = i.trim().parse::<usize>().map_err(|_| bad())?;
            let j = j.trim().parse::<usize>().map_err(|_| bad())?;
            let exp = match rest.trim() {
                "" => 1,
                r => r
                    .strip_prefix('^')
                    .and_then(|e| e.trim().parse::<i64>().ok())
                    .ok_or_else(bad)?,
            };
            raw.push((i, j, exp));
        }
        Self::new(strands, &raw)
    }
}

impl fmt::Display for PureWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_word(
            f,
            self.letters
                .iter()
                .map(|l| (format!("a({},{})", l.i, l.j), l.exp)),
        )
    }
}

impl fmt::Debug for PureWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PureWord[P{}]({self})", self.strands)
    }
}

fn check_pair(i: usize, j: usize, n: usize) -> Result<()> {
    if i < 1 || i >= j || j > n {
        return Err(Error::InvalidPureGenerator { i, j, n });
    }
    Ok(())
}

/// `a_{ij} = s_{j-1} ⋯ s_{i+1} s_i² s_{i+1}⁻¹ ⋯ s_{j-1}⁻¹`.
pub fn pure_generator(i: usize, j: usize, n: usize) -> Result<BraidWord> {
    check_pair(i, j, n)?;
    let down: Vec<i32> = (i as i32 + 1..j as i32).rev().collect();
    let mut letters = down.clone();
    letters.extend([i as i32, i as i32]);
    letters.extend(down.iter().rev().map(|l| -l));
    BraidWord::new(n, &letters)
}

/// Shortest positive representative of the coset of `P_n` with image `p`,
/// lexicographically least among those.
pub fn transversal_word(p: &Permutation) -> BraidWord {
    BraidWord::new(p.size(), &positive_word(p)).expect("valid letters")
}

/// `s_k a_{pq} s_k⁻¹` in the `a`-alphabet.
fn conjugate_letter(k: usize, p: usize, q: usize) -> Vec<PureLetter> {
    let a = PureLetter::new;
    if k + 1 == p {
        vec![a(k, p, 1), a(k, q, 1), a(k, p, -1)]
    } else if k == p && q == p + 1 {
        vec![a(p, q, 1)]
    } else if k == p {
        vec![a(p + 1, q, 1)]
    } else if k + 1 == q {
        vec![a(k, q, 1), a(p, k, 1), a(k, q, -1)]
    } else if k == q {
        vec![a(p, q + 1, 1)]
    } else {
        vec![a(p, q, 1)]
    }
}

/// Conjugates every letter of `w` by the positive generator `s_k`.
fn conjugate_word(k: usize, w: &PureWord) -> PureWord {
    let mut out = PureWord::identity(w.strands);
    for l in &w.letters {
        let image = PureWord {
            strands: w.strands,
            letters: conjugate_letter(k, l.i, l.j),
        };
        let piece = if l.exp < 0 { image.inverse() } else { image };
        for _ in 0..l.exp.unsigned_abs() {
            out.extend(&piece);
        }
    }
    out
}

/// Schreier generator `T(σ) s_i T(σ τ_i)⁻¹` for the transversal `T`.
///
/// It is trivial unless `s_i` is a right descent of `σ`, in which case it is
/// `u s_i² u⁻¹` with `u = T(σ τ_i)`.
fn schreier_generator(
    sigma: &Permutation,
    i: usize,
    cache: &mut HashMap<(Permutation, usize), PureWord>,
) -> PureWord {
    let n = sigma.size();
    if sigma.images()[i - 1] < sigma.images()[i] {
        return PureWord::identity(n);
    }
    if let Some(w) = cache.get(&(sigma.clone(), i)) {
        return w.clone();
    }
    let u = transversal_word(&sigma.compose(&Permutation::transposition(n, i)));
    let mut w = PureWord {
        strands: n,
        letters: vec![PureLetter::new(i, i + 1, 1)],
    };
    for &k in u.letters().iter().rev() {
        w = conjugate_word(k as usize, &w);
    }
    cache.insert((sigma.clone(), i), w.clone());
    w
}

/// Rewrites a pure braid as a word in the `a_{ij}` along the transversal of
/// shortest positive coset representatives.
pub fn rewrite_pure(b: &BraidWord) -> Result<PureWord> {
    if !permutation_of(b).is_identity() {
        return Err(Error::NotPure);
    }
    let n = b.strands();
    let mut cache = HashMap::new();
    let mut coset = Permutation::identity(n);
    let mut out = PureWord::identity(n);
    for &l in b.letters() {
        let i = l.unsigned_abs() as usize;
        let next = coset.compose(&Permutation::transposition(n, i));
        if l > 0 {
            out.extend(&schreier_generator(&coset, i, &mut cache));
        } else {
            out.extend(&schreier_generator(&next, i, &mut cache).inverse());
        }
        coset = next;
    }
    Ok(out)
}

/// Pairwise linking numbers of a pure braid: half the signed crossing count
/// between each pair of strands. `None` if the braid is not pure.
pub fn linking_numbers(b: &BraidWord) -> Option<BTreeMap<(usize, usize), i64>> {
    let n = b.strands();
    let mut at: Vec<usize> = (1..=n).collect();
    let mut counts: BTreeMap<(usize, usize), i64> = BTreeMap::new();
    for &l in b.letters() {
        let i = l.unsigned_abs() as usize;
        let (p, q) = (at[i - 1], at[i]);
        *counts.entry((p.min(q), p.max(q))).or_insert(0) += l.signum() as i64;
        at.swap(i - 1, i);
    }
    if at.iter().enumerate().any(|(k, &s)| s != k + 1) {
        return None;
    }
    counts.retain(|_, v| *v != 0);
    Some(counts.into_iter().map(|(k, v)| (k, v / 2)).collect())
}
