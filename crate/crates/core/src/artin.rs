//! Artin's representation `B_n → Aut F_n`.
//!
//! `α(s_i)` sends `x_i ↦ x_{i+1}`, `x_{i+1} ↦ x_{i+1}⁻¹ x_i x_{i+1}` and fixes
//! the other generators. Composition is ordered so that `α_{ab} = α_a ∘ α_b`,
//! matching the semidirect product `(x, a)(y, b) = (x α_a(y), ab)`.
//!
//! Worked example on two strands: `α(s1)(x1) = x2` and
//! `α(s1)(x2) = x2⁻¹ x1 x2`, so
//! `α(s1 s1)(x1) = α(s1)(α(s1)(x1)) = α(s1)(x2) = x2⁻¹ x1 x2`
//! which is `(x1 x2)⁻¹ x1 (x1 x2)`, conjugation by the boundary word.

use std::fmt;

use crate::braid::{is_pure, BraidWord};
use crate::error::{Error, Result};
use crate::freegroup::FreeWord;

/// An endomorphism of `F_n` given by the images of `x_1, ..., x_n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FreeAutomorphism {
    images: Vec<FreeWord>,
}

impl FreeAutomorphism {
    pub fn identity(rank: usize) -> Self {
        Self {
            images: (1..=rank)
                .map(|i| FreeWord::generator(rank, i).expect("in range"))
                .collect(),
        }
    }

    pub fn from_images(images: Vec<FreeWord>) -> Result<Self> {
        let rank = images.len();
        if let Some(w) = images.iter().find(|w| w.rank() != rank) {
            return Err(Error::RankMismatch {
                left: rank,
                right: w.rank(),
            });
        }
        Ok(Self { images })
    }

    /// Inner automorphism `Ad g : y ↦ g y g⁻¹`.
    pub fn inner(g: &FreeWord) -> Self {
        let rank = g.rank();
        let inv = g.invert();
        Self {
            images: (1..=rank)
                .map(|i| {
                    let mut w = g.clone();
                    w.append(&FreeWord::generator(rank, i).expect("in range"));
                    w.append(&inv);
                    w
                })
                .collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[FreeWord] {
        &self.images
    }

    pub fn apply(&self, w: &FreeWord) -> Result<FreeWord> {
        if w.rank() != self.rank() {
            return Err(Error::RankMismatch {
                left: self.rank(),
                right: w.rank(),
            });
        }
        Ok(w.substitute(&self.images))
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.rank() != other.rank() {
            return Err(Error::RankMismatch {
                left: self.rank(),
                right: other.rank(),
            });
        }
        Ok(Self {
            images: other
                .images
                .iter()
                .map(|w| w.substitute(&self.images))
                .collect(),
        })
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.rank())
    }
}

impl fmt::Display for FreeAutomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, w) in self.images.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "x{} -> {w}", k + 1)?;
        }
        Ok(())
    }
}

impl fmt::Debug for FreeAutomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FreeAutomorphism({self})")
    }
}

/// Equality of automorphisms: generator images coincide as reduced words.
pub fn equal_auto(a: &FreeAutomorphism, b: &FreeAutomorphism) -> Result<bool> {
    if a.rank() != b.rank() {
        return Err(Error::RankMismatch {
            left: a.rank(),
            right: b.rank(),
        });
    }
    Ok(a == b)
}

/// Image of `x_j` under `α(s_i^sign)`, as raw letters.
fn generator_image(i: usize, inverse: bool, j: usize) -> Vec<(usize, i64)> {
    match (inverse, j) {
        (false, j) if j == i => vec![(i + 1, 1)],
        (false, j) if j == i + 1 => vec![(i + 1, -1), (i, 1), (i + 1, 1)],
        // inverse: x_i ↦ x_i x_{i+1} x_i⁻¹, x_{i+1} ↦ x_i
        (true, j) if j == i => vec![(i, 1), (i + 1, 1), (i, -1)],
        (true, j) if j == i + 1 => vec![(i, 1)],
        (_, j) => vec![(j, 1)],
    }
}

/// `α(s_i)` for `inverse = false`, `α(s_i)⁻¹` otherwise.
pub fn artin_generator(i: usize, n: usize, inverse: bool) -> Result<FreeAutomorphism> {
    if i == 0 || i >= n {
        return Err(Error::BraidIndexOutOfRange {
            index: i,
            strands: n,
        });
    }
    let images = (1..=n)
        .map(|j| FreeWord::reduce(n, &generator_image(i, inverse, j)))
        .collect::<Result<Vec<_>>>()?;
    Ok(FreeAutomorphism { images })
}

/// `α_b` for a braid word, built left to right: `α_{w l} = α_w ∘ α_l`.
pub fn artin_auto(b: &BraidWord) -> FreeAutomorphism {
    let n = b.strands();
    let mut images = FreeAutomorphism::identity(n).images;
    for &l in b.letters() {
        let i = l.unsigned_abs() as usize;
        let inverse = l < 0;
        // only x_i and x_{i+1} change
        let gi = FreeWord::reduce(n, &generator_image(i, inverse, i)).expect("in range");
        let gj = FreeWord::reduce(n, &generator_image(i, inverse, i + 1)).expect("in range");
        let new_i = gi.substitute(&images);
        let new_j = gj.substitute(&images);
        images[i - 1] = new_i;
        images[i] = new_j;
    }
    FreeAutomorphism { images }
}

/// Searches for `x` with `α_b = Ad x`, for a pure braid `b`.
///
/// If `α_b = Ad x` then the reduced image of `x_1` is `c x_1 c⁻¹` and
/// `x = c x_1^m` for some `m`; candidates are tried in order of increasing
/// length up to `max_len` (default `2·|b|`). `Ok(None)` means no witness
/// within the bound, not that none exists.
pub fn is_inner_for_pure(b: &BraidWord, max_len: Option<usize>) -> Result<Option<FreeWord>> {
    if !is_pure(b) {
        return Err(Error::NotPure);
    }
    let bound = max_len.unwrap_or(2 * b.len());
    let alpha = artin_auto(b);
    let n = b.strands();
    let image = &alpha.images()[0];
    let letters = image.letters();
    // image must be c x1 c⁻¹ with the middle syllable x1^1
    let half = letters.len() / 2;
    if letters.len().is_multiple_of(2) || letters[half] != (1, 1) {
        return Ok(None);
    }
    let c = FreeWord::reduce(n, &letters[..half])?;
    if FreeWord::reduce(n, &letters[half + 1..])? != c.invert() {
        return Ok(None);
    }
    let x1 = FreeWord::generator(n, 1)?;
    let mut candidates: Vec<FreeWord> = (-(bound as i64 + c.len() as i64)
        ..=bound as i64 + c.len() as i64)
        .map(|m| c.multiply(&x1.pow(m)).expect("same rank"))
        .filter(|x| x.len() <= bound)
        .collect();
    candidates.sort_by_key(|x| x.len());
    Ok(candidates
        .into_iter()
        .find(|x| FreeAutomorphism::inner(x) == alpha))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::{center_z, pure_generator};

    fn w(n: usize, s: &str) -> FreeWord {
        FreeWord::parse(n, s).unwrap()
    }

    fn b(n: usize, s: &str) -> BraidWord {
        BraidWord::parse(n, s).unwrap()
    }

    #[test]
    fn generator_cases() {
        let a = artin_generator(1, 3, false).unwrap();
        assert_eq!(a.images()[0], w(3, "x2"));
        assert_eq!(a.images()[1], w(3, "x2^-1*x1*x2"));
        assert_eq!(a.images()[2], w(3, "x3"));
        let inv = artin_generator(1, 3, true).unwrap();
        assert!(a.compose(&inv).unwrap().is_identity());
        assert!(inv.compose(&a).unwrap().is_identity());
        assert!(artin_generator(3, 3, false).is_err());
    }

    #[test]
    fn apply_examples() {
        let x = w(3, "x1*x3^2*x2");
        assert_eq!(FreeAutomorphism::identity(3).apply(&x).unwrap(), x);
        let s1 = artin_auto(&b(2, "s1"));
        assert_eq!(s1.apply(&w(2, "x1*x2")).unwrap(), w(2, "x1*x2"));
        assert_eq!(
            artin_auto(&b(2, "s1^-1")).apply(&w(2, "x2")).unwrap(),
            w(2, "x1")
        );
        assert!(s1.apply(&w(3, "x1")).is_err());
    }

    #[test]
    fn word_action_matches_generator_composition() {
        let word = b(3, "s1*s2^-1*s1");
        let mut expected = FreeAutomorphism::identity(3);
        for &l in word.letters() {
            let g = artin_generator(l.unsigned_abs() as usize, 3, l < 0).unwrap();
            expected = expected.compose(&g).unwrap();
        }
        assert_eq!(artin_auto(&word), expected);
    }

    #[test]
    fn compose_and_equal() {
        let phi = artin_auto(&b(3, "s1*s2"));
        assert_eq!(phi.compose(&FreeAutomorphism::identity(3)).unwrap(), phi);
        assert!(artin_auto(&b(3, "s1"))
            .compose(&artin_auto(&b(3, "s1^-1")))
            .unwrap()
            .is_identity());
        assert!(equal_auto(
            &artin_auto(&b(3, "s1*s2*s1")),
            &artin_auto(&b(3, "s2*s1*s2"))
        )
        .unwrap());
        assert!(artin_auto(&BraidWord::identity(4)).is_identity());
    }

    #[test]
    fn inner_witnesses() {
        let a12 = pure_generator(1, 2, 2).unwrap();
        let x = is_inner_for_pure(&a12, None).unwrap().unwrap();
        assert_eq!(x, w(2, "x2^-1*x1^-1"));
        for n in 2..=5 {
            let z = center_z(n).unwrap();
            let x = is_inner_for_pure(&z, None).unwrap().unwrap();
            assert_eq!(x, FreeWord::boundary_word(n).invert());
        }
        assert!(is_inner_for_pure(&BraidWord::identity(3), None)
            .unwrap()
            .unwrap()
            .is_identity());
        assert_eq!(is_inner_for_pure(&b(3, "s1"), None), Err(Error::NotPure));
    }
}
