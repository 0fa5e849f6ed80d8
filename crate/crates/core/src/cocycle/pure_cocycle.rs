use std::collections::BTreeMap;

use crate::braid::{linking_numbers, pure_generator, BraidWord, PureWord};
use crate::error::{Error, Result};
use crate::freegroup::{Character, FreeWord};
use crate::phase::Angle;

use super::BraidOneCocycle;

/// A 1-cocycle on `P_n`, given by `φ(a_{ij}, x_k)`.
///
/// `P_n` acts on `Hom(F_n, T)` trivially (every `α_a` is inner), so such
/// cocycles are exactly homomorphisms `P_n → Hom(F_n, T)` and every table is
/// valid.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PureOneCocycle {
    n: usize,
    // (i, j) -> [φ(a_ij, x_1), ..., φ(a_ij, x_n)]
    table: BTreeMap<(usize, usize), Vec<Angle>>,
}

impl PureOneCocycle {
    /// Requires one row of `n` angles for each pair `1 ≤ i < j ≤ n`.
    pub fn new(n: usize, table: BTreeMap<(usize, usize), Vec<Angle>>) -> Result<Self> {
        if n < 2 {
            return Err(Error::TooFewStrands { min: 2, got: n });
        }
        let expected = n * (n - 1) / 2;
        if table.len() != expected {
            return Err(Error::Shape(format!(
                "expected {expected} generator rows, got {}",
                table.len()
            )));
        }
        for (&(i, j), row) in &table {
            if i < 1 || i >= j || j > n {
                return Err(Error::InvalidPureGenerator { i, j, n });
            }
            if row.len() != n {
                return Err(Error::Shape(format!("row a({i},{j}) must have {n} values")));
            }
        }
        Ok(Self { n, table })
    }

    pub fn zero(n: usize) -> Result<Self> {
        let table = pairs(n).map(|p| (p, vec![Angle::zero(); n])).collect();
        Self::new(n, table)
    }

    pub fn strands(&self) -> usize {
        self.n
    }

    /// `φ(a_{ij}, x_k)`.
    pub fn entry(&self, i: usize, j: usize, k: usize) -> &Angle {
        &self.table[&(i, j)][k - 1]
    }

    pub fn with_entry(&self, i: usize, j: usize, k: usize, value: Angle) -> Self {
        let mut out = self.clone();
        out.table.get_mut(&(i, j)).expect("valid pair")[k - 1] = value;
        out
    }

    pub fn rows(&self) -> &BTreeMap<(usize, usize), Vec<Angle>> {
        &self.table
    }

    /// `ν_k^φ = Σ_{i<j} φ(a_{ij}, x_k)`.
    pub fn nu(&self, k: usize) -> Angle {
        self.table.values().map(|row| &row[k - 1]).sum()
    }

    /// `φ(a_{ij}, x_1 ⋯ x_n)`.
    pub fn boundary_value(&self, i: usize, j: usize) -> Angle {
        self.table[&(i, j)].iter().sum()
    }

    /// Character `φ(w, ·)` from exponent sums of `a_{ij}`.
    fn character_from_sums(&self, sums: &BTreeMap<(usize, usize), i64>) -> Character {
        let mut values = vec![Angle::zero(); self.n];
        for (pair, &e) in sums {
            for (v, t) in values.iter_mut().zip(&self.table[pair]) {
                *v += &t.scale(e);
            }
        }
        Character::new(values)
    }

    /// `φ(w, x)` for a word in the `a_{ij}`; additive over letters.
    pub fn extend_pure(&self, w: &PureWord, x: &FreeWord) -> Result<Angle> {
        if w.strands() != self.n {
            return Err(Error::StrandMismatch {
                left: self.n,
                right: w.strands(),
            });
        }
        let mut sums = BTreeMap::new();
        for l in w.letters() {
            *sums.entry((l.i, l.j)).or_insert(0) += l.exp;
        }
        self.character_from_sums(&sums).eval(x)
    }

    /// `φ(a, x)` for a pure braid word, through its linking numbers (the
    /// abelianization of `P_n`).
    pub fn extend_braid(&self, a: &BraidWord, x: &FreeWord) -> Result<Angle> {
        if a.strands() != self.n {
            return Err(Error::StrandMismatch {
                left: self.n,
                right: a.strands(),
            });
        }
        let sums = linking_numbers(a).ok_or(Error::NotPure)?;
        self.character_from_sums(&sums).eval(x)
    }
}

pub(crate) fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..=n).flat_map(move |i| (i + 1..=n).map(move |j| (i, j)))
}

/// The restriction of a braid cocycle to `P_n`: `(i,j,k) ↦ φ(a_{ij}, x_k)`.
pub fn restrict_to_pure(phi: &BraidOneCocycle) -> PureOneCocycle {
    let n = phi.strands();
    let table = pairs(n)
        .map(|(i, j)| {
            let a = pure_generator(i, j, n).expect("valid pair");
            ((i, j), phi.character_of(&a))
        })
        .collect();
    PureOneCocycle::new(n, table).expect("complete table")
}
