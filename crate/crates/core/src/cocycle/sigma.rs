//! 2-cocycles on semidirect products induced by 1-cocycles.

use std::collections::BTreeMap;

use rand::Rng;

use crate::braid::{linking_numbers, BraidWord};
use crate::error::{Error, Result};
use crate::freegroup::FreeWord;
use crate::phase::Angle;
use crate::random::random_pure_braid;

use super::{BraidOneCocycle, PureOneCocycle, SemidirectElement};

/// Either flavour of 1-cocycle with values in `Hom(F_n, T)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OneCocycle {
    Braid(BraidOneCocycle),
    Pure(PureOneCocycle),
}

impl OneCocycle {
    pub fn strands(&self) -> usize {
        match self {
            OneCocycle::Braid(phi) => phi.strands(),
            OneCocycle::Pure(phi) => phi.strands(),
        }
    }

    /// `φ(a, y)`; the pure flavour rejects non-pure `a`.
    pub fn eval(&self, a: &BraidWord, y: &FreeWord) -> Result<Angle> {
        match self {
            OneCocycle::Braid(phi) => phi.extend(a, y),
            OneCocycle::Pure(phi) => phi.extend_braid(a, y),
        }
    }
}

/// A normalized 2-cocycle on `F_n ⋊ K` for `K = B_n` or `P_n`.
pub trait TwoCocycle {
    fn eval(&self, g: &SemidirectElement, h: &SemidirectElement) -> Result<Angle>;
}

/// `σ^φ((x, a), (y, b)) = φ(a, y)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoCocycleSigmaPhi {
    pub cocycle: OneCocycle,
}

impl TwoCocycleSigmaPhi {
    pub fn new(cocycle: OneCocycle) -> Self {
        Self { cocycle }
    }
}

impl TwoCocycle for TwoCocycleSigmaPhi {
    fn eval(&self, g: &SemidirectElement, h: &SemidirectElement) -> Result<Angle> {
        let n = self.cocycle.strands();
        if g.rank() != n || h.rank() != n {
            return Err(Error::RankMismatch {
                left: n,
                right: if g.rank() != n { g.rank() } else { h.rank() },
            });
        }
        self.cocycle.eval(g.braid_part(), h.free_part())
    }
}

pub fn sigma_eval(
    sigma: &TwoCocycleSigmaPhi,
    g1: &SemidirectElement,
    g2: &SemidirectElement,
) -> Result<Angle> {
    sigma.eval(g1, g2)
}

/// A 2-cocycle `ω` on `P_n`, supplied from outside.
///
/// `None` means the value is not available; evaluators that need it report
/// [`Error::MissingOmega`].
pub trait PureTwoCocycle: Send + Sync {
    fn strands(&self) -> usize;
    fn eval(&self, a: &BraidWord, b: &BraidWord) -> Option<Angle>;
}

/// `ω(a, b) = Σ c_{pq,rs} · lk_{pq}(a) · lk_{rs}(b)`, a bilinear form on the
/// abelianization of `P_n`. Bilinear forms are always 2-cocycles.
type Pair = (usize, usize);

#[derive(Clone, Debug, Default)]
pub struct BilinearOmega {
    n: usize,
    coefficients: BTreeMap<(Pair, Pair), Angle>,
}

impl BilinearOmega {
    pub fn new(n: usize) -> Self {
        Self {
            n,
            coefficients: BTreeMap::new(),
        }
    }

    pub fn with(mut self, p: (usize, usize), q: (usize, usize), c: Angle) -> Self {
        self.coefficients.insert((p, q), c);
        self
    }
}

impl PureTwoCocycle for BilinearOmega {
    fn strands(&self) -> usize {
        self.n
    }

    fn eval(&self, a: &BraidWord, b: &BraidWord) -> Option<Angle> {
        let (la, lb) = (linking_numbers(a)?, linking_numbers(b)?);
        Some(
            self.coefficients
                .iter()
                .map(|((p, q), c)| {
                    let e = la.get(p).copied().unwrap_or(0) * lb.get(q).copied().unwrap_or(0);
                    c.scale(e)
                })
                .sum(),
        )
    }
}

/// `ω` known only on finitely many pairs; lookups compare braids with the
/// equality oracle. Normalization `ω(a, e) = ω(e, a) = 0` is built in.
#[derive(Clone, Debug, Default)]
pub struct OmegaTable {
    n: usize,
    entries: Vec<(BraidWord, BraidWord, Angle)>,
}

impl OmegaTable {
    pub fn new(n: usize) -> Self {
        Self {
            n,
            entries: Vec::new(),
        }
    }

    pub fn insert(&mut self, a: BraidWord, b: BraidWord, value: Angle) {
        self.entries.push((a, b, value));
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

impl PureTwoCocycle for OmegaTable {
    fn strands(&self) -> usize {
        self.n
    }

    fn eval(&self, a: &BraidWord, b: &BraidWord) -> Option<Angle> {
        let e = BraidWord::identity(self.n);
        if a.equal(&e).ok()? || b.equal(&e).ok()? {
            return Some(Angle::zero());
        }
        self.entries
            .iter()
            .find(|(u, v, _)| u.equal(a).unwrap_or(false) && v.equal(b).unwrap_or(false))
            .map(|(_, _, w)| w.clone())
    }
}

/// Checks normalization and `ω(a,b) + ω(ab,c) = ω(a,bc) + ω(b,c)` on random
/// pure braids. Returns a description of the first failure.
pub fn validate_two_cocycle<R: Rng>(
    omega: &dyn PureTwoCocycle,
    rng: &mut R,
    samples: usize,
) -> std::result::Result<(), String> {
    let n = omega.strands();
    let e = BraidWord::identity(n);
    let get = |a: &BraidWord, b: &BraidWord| {
        omega
            .eval(a, b)
            .ok_or_else(|| format!("omega({a}, {b}) unavailable"))
    };
    for _ in 0..samples {
        let a = random_pure_braid(rng, n, 8);
        let b = random_pure_braid(rng, n, 8);
        let c = random_pure_braid(rng, n, 8);
        if !get(&a, &e)?.is_zero() || !get(&e, &a)?.is_zero() {
            return Err(format!("omega not normalized at {a}"));
        }
        let ab = a.multiply(&b).expect("same strands");
        let bc = b.multiply(&c).expect("same strands");
        let lhs = get(&a, &b)? + get(&ab, &c)?;
        let rhs = get(&a, &bc)? + get(&b, &c)?;
        if lhs != rhs {
            return Err(format!("cocycle identity fails at ({a}, {b}, {c})"));
        }
    }
    Ok(())
}

/// `σ(xa, yb) = φ(a, y) + ω(a, b)` on `P_{n+1} ≅ F_n ⋊ P_n`.
pub struct MackeyTwoCocycle {
    pub phi: PureOneCocycle,
    pub omega: Box<dyn PureTwoCocycle>,
}

impl MackeyTwoCocycle {
    pub fn new(phi: PureOneCocycle, omega: Box<dyn PureTwoCocycle>) -> Result<Self> {
        if phi.strands() != omega.strands() {
            return Err(Error::StrandMismatch {
                left: phi.strands(),
                right: omega.strands(),
            });
        }
        Ok(Self { phi, omega })
    }
}

impl TwoCocycle for MackeyTwoCocycle {
    fn eval(&self, g: &SemidirectElement, h: &SemidirectElement) -> Result<Angle> {
        let (a, b) = (g.braid_part(), h.braid_part());
        let w = self
            .omega
            .eval(a, b)
            .ok_or_else(|| Error::MissingOmega(format!("{a}, {b}")))?;
        Ok(self.phi.extend_braid(a, h.free_part())? + w)
    }
}

/// Per-test discrepancies `σ(g, h) − σ(h, g)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegularityReport {
    pub discrepancies: Vec<Angle>,
    /// All discrepancies vanish.
    pub regular: bool,
}

/// σ-regularity of `g` with respect to the supplied commuting test elements.
pub fn sigma_regular(
    sigma: &dyn TwoCocycle,
    g: &SemidirectElement,
    tests: &[SemidirectElement],
) -> Result<RegularityReport> {
    let mut discrepancies = Vec::with_capacity(tests.len());
    for (index, h) in tests.iter().enumerate() {
        if !g.commutes_with(h)? {
            return Err(Error::NonCommuting { index });
        }
        discrepancies.push(sigma.eval(g, h)? - sigma.eval(h, g)?);
    }
    let regular = discrepancies.iter().all(Angle::is_zero);
    Ok(RegularityReport {
        discrepancies,
        regular,
    })
}
