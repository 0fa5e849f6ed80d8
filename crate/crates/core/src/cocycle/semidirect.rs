use std::fmt;

use crate::artin::artin_auto;
use crate::braid::{center_z, BraidWord};
use crate::error::{Error, Result};
use crate::freegroup::{FreeConjugable, FreeWord};

/// An element `y·a = (y, a)` of `F_n ⋊ B_n` with
/// `(x, a)(y, b) = (x α_a(y), ab)`.
///
/// Equality compares free parts as reduced words and braid parts through
/// Artin's representation.
#[derive(Clone)]
pub struct SemidirectElement {
    free: FreeWord,
    braid: BraidWord,
}

impl SemidirectElement {
    pub fn new(free: FreeWord, braid: BraidWord) -> Result<Self> {
        if free.rank() != braid.strands() {
            return Err(Error::RankMismatch {
                left: free.rank(),
                right: braid.strands(),
            });
        }
        Ok(Self { free, braid })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            free: FreeWord::identity(n),
            braid: BraidWord::identity(n),
        }
    }

    pub fn from_free(free: FreeWord) -> Self {
        let n = free.rank();
        Self {
            free,
            braid: BraidWord::identity(n),
        }
    }

    pub fn from_braid(braid: BraidWord) -> Self {
        let n = braid.strands();
        Self {
            free: FreeWord::identity(n),
            braid,
        }
    }

    /// `(x1 ⋯ xn)^k z^k`, the central element of `F_n ⋊ B_n` raised to `k`.
    pub fn central(n: usize, k: i64) -> Result<Self> {
        Self::new(FreeWord::boundary_word(n).pow(k), center_z(n)?.pow(k))
    }

    pub fn free_part(&self) -> &FreeWord {
        &self.free
    }

    pub fn braid_part(&self) -> &BraidWord {
        &self.braid
    }

    pub fn rank(&self) -> usize {
        self.free.rank()
    }

    pub fn multiply(&self, other: &Self) -> Result<Self> {
        if self.rank() != other.rank() {
            return Err(Error::RankMismatch {
                left: self.rank(),
                right: other.rank(),
            });
        }
        let moved = artin_auto(&self.braid).apply(&other.free)?;
        Ok(Self {
            free: self.free.multiply(&moved)?,
            braid: self.braid.multiply(&other.braid)?,
        })
    }

    /// `(x, a)⁻¹ = (α_{a⁻¹}(x⁻¹), a⁻¹)`.
    pub fn inverse(&self) -> Self {
        let inv = self.braid.inverse();
        let free = artin_auto(&inv)
            .apply(&self.free.invert())
            .expect("same rank");
        Self { free, braid: inv }
    }

    pub fn pow(&self, k: i64) -> Self {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut out = Self::identity(self.rank());
        for _ in 0..k.unsigned_abs() {
            out = out.multiply(&base).expect("same rank");
        }
        out
    }

    pub fn commutes_with(&self, other: &Self) -> Result<bool> {
        Ok(self.multiply(other)? == other.multiply(self)?)
    }
}

impl PartialEq for SemidirectElement {
    fn eq(&self, other: &Self) -> bool {
        self.free == other.free && self.braid.equal(&other.braid).unwrap_or(false)
    }
}

impl Eq for SemidirectElement {}

impl FreeConjugable for SemidirectElement {
    type Key = (FreeWord, Vec<FreeWord>);

    fn rank(&self) -> usize {
        self.free.rank()
    }

    /// `(x, e)(y, a)(x⁻¹, e) = (x y α_a(x⁻¹), a)`.
    fn conjugate_by_free(&self, x: &FreeWord) -> Self {
        let tail = artin_auto(&self.braid)
            .apply(&x.invert())
            .expect("same rank");
        let mut free = x.clone();
        free.append(&self.free);
        free.append(&tail);
        Self {
            free,
            braid: self.braid.clone(),
        }
    }

    fn canonical_key(&self) -> Self::Key {
        (self.free.clone(), artin_auto(&self.braid).images().to_vec())
    }
}

impl fmt::Display for SemidirectElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.free, self.braid)
    }
}

impl fmt::Debug for SemidirectElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SemidirectElement{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freegroup::conjugate_orbit_probe;

    fn el(n: usize, x: &str, b: &str) -> SemidirectElement {
        SemidirectElement::new(
            FreeWord::parse(n, x).unwrap(),
            BraidWord::parse(n, b).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn multiplication_rule() {
        let g = el(2, "x1", "s1");
        let h = el(2, "x1", "e");
        // (x1, s)(x1, e) = (x1 α_s(x1), s) = (x1 x2, s)
        assert_eq!(g.multiply(&h).unwrap(), el(2, "x1*x2", "s1"));
        assert_eq!(
            g.multiply(&g.inverse()).unwrap(),
            SemidirectElement::identity(2)
        );
        assert_eq!(
            g.inverse().multiply(&g).unwrap(),
            SemidirectElement::identity(2)
        );
    }

    #[test]
    fn center_commutes_with_generators() {
        for n in 2..=4 {
            let c = SemidirectElement::central(n, 1).unwrap();
            for i in 1..=n {
                let xi = SemidirectElement::from_free(FreeWord::generator(n, i).unwrap());
                assert!(c.commutes_with(&xi).unwrap());
            }
            for j in 1..n {
                let sj = SemidirectElement::from_braid(BraidWord::generator(n, j, false).unwrap());
                assert!(c.commutes_with(&sj).unwrap());
            }
        }
        let g = el(3, "x1", "e");
        let s = el(3, "e", "s1");
        assert!(!g.commutes_with(&s).unwrap());
    }

    #[test]
    fn central_orbit_is_a_point() {
        for k in [1, -1, 2] {
            let c = SemidirectElement::central(3, k).unwrap();
            let probe = conjugate_orbit_probe(&c, 2);
            assert_eq!(probe.size, 1);
        }
        let probe = conjugate_orbit_probe(&el(2, "e", "s1"), 2);
        assert!(probe.size > 1);
        assert_eq!(
            conjugate_orbit_probe(&SemidirectElement::identity(2), 3).size,
            1
        );
    }

    #[test]
    fn rank_mismatch() {
        assert!(SemidirectElement::new(FreeWord::identity(2), BraidWord::identity(3)).is_err());
    }
}
