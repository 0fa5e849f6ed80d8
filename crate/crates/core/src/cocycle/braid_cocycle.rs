use std::fmt;

use crate::artin::artin_generator;
use crate::braid::{BraidWord, Permutation};
use crate::error::{Error, Result};
use crate::freegroup::{Character, FreeWord};
use crate::phase::Angle;

/// A 1-cocycle `φ ∈ Z¹(B_n, Hom(F_n, T))`, stored by its values `φ(s_i, x_j)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BraidOneCocycle {
    n: usize,
    // table[i-1][j-1] = φ(s_i, x_j)
    table: Vec<Vec<Angle>>,
}

/// The two similarity invariants `μ1 = φ(s_i,x_i) + φ(s_i,x_{i+1})` and
/// `μ2 = φ(s_i, x_j)` off the band (absent for `n = 2`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MuParams {
    pub mu1: Angle,
    pub mu2: Option<Angle>,
}

/// Which defining constraint a violation breaks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RelationFamily {
    /// `φ(s_{i+1}, x_i) = φ(s_i, x_{i+2})`.
    CrossedNeighbours,
    /// `φ(s_i,x_i) + φ(s_i,x_{i+1}) = φ(s_{i+1},x_{i+1}) + φ(s_{i+1},x_{i+2})`.
    BandSum,
    /// `φ(s_i, x_j) = φ(s_{i+1}, x_j)` for `j ∉ {i, i+1, i+2}`.
    OffBandAcrossRows,
    /// `φ(s_i, x_k) = φ(s_i, x_l)` for `k, l ∉ {i, i+1}`, `n ≥ 4`.
    OffBandWithinRow,
    /// The extension disagrees on the two sides of a braid relation.
    BraidRelation,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub family: RelationFamily,
    /// Table cells `(i, j)` for `φ(s_i, x_j)` entering the relation.
    pub cells: Vec<(usize, usize)>,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    /// Violations of the four table relations, excluding the braid-relation
    /// cross-check.
    pub fn table_violations(&self) -> impl Iterator<Item = &Violation> {
        self.violations
            .iter()
            .filter(|v| v.family != RelationFamily::BraidRelation)
    }
}

impl BraidOneCocycle {
    /// `φ(s_i,x_i) = c_i`, `φ(s_i,x_{i+1}) = μ1 − c_i`, every other entry `μ2`.
    pub fn build(n: usize, mu1: &Angle, mu2: &Angle, diag: &[Angle]) -> Result<Self> {
        if n < 2 {
            return Err(Error::TooFewStrands { min: 2, got: n });
        }
        if diag.len() != n - 1 {
            return Err(Error::Shape(format!(
                "expected {} diagonal values, got {}",
                n - 1,
                diag.len()
            )));
        }
        let table = (1..n)
            .map(|i| {
                (1..=n)
                    .map(|j| {
                        if j == i {
                            diag[i - 1].clone()
                        } else if j == i + 1 {
                            mu1 - &diag[i - 1]
                        } else {
                            mu2.clone()
                        }
                    })
                    .collect()
            })
            .collect();
        Ok(Self { n, table })
    }

    pub fn zero(n: usize) -> Result<Self> {
        Self::build(
            n,
            &Angle::zero(),
            &Angle::zero(),
            &vec![Angle::zero(); n.saturating_sub(1)],
        )
    }

    /// Wraps an arbitrary `(n-1) × n` table; use [`Self::validate`] to test it.
    pub fn from_table(n: usize, table: Vec<Vec<Angle>>) -> Result<Self> {
        if n < 2 {
            return Err(Error::TooFewStrands { min: 2, got: n });
        }
        if table.len() != n - 1 || table.iter().any(|row| row.len() != n) {
            return Err(Error::Shape(format!("cocycle table must be {}x{n}", n - 1)));
        }
        Ok(Self { n, table })
    }

    /// The coboundary `h(a, x) = f(α_a(x)) − f(x)`.
    pub fn coboundary(f: &Character) -> Result<Self> {
        let n = f.rank();
        if n < 2 {
            return Err(Error::TooFewStrands { min: 2, got: n });
        }
        let mut table = Vec::with_capacity(n - 1);
        for i in 1..n {
            let alpha = artin_generator(i, n, false)?;
            let row = (1..=n)
                .map(|j| {
                    let x = FreeWord::generator(n, j)?;
                    Ok(&f.eval(&alpha.apply(&x)?)? - &f.eval(&x)?)
                })
                .collect::<Result<Vec<_>>>()?;
            table.push(row);
        }
        Ok(Self { n, table })
    }

    pub fn strands(&self) -> usize {
        self.n
    }

    /// `φ(s_i, x_j)`.
    pub fn entry(&self, i: usize, j: usize) -> &Angle {
        &self.table[i - 1][j - 1]
    }

    pub fn with_entry(&self, i: usize, j: usize, value: Angle) -> Self {
        let mut out = self.clone();
        out.table[i - 1][j - 1] = value;
        out
    }

    pub fn table(&self) -> &[Vec<Angle>] {
        &self.table
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a - b)
    }

    fn zip_with(&self, other: &Self, op: impl Fn(&Angle, &Angle) -> Angle) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::StrandMismatch {
                left: self.n,
                right: other.n,
            });
        }
        let table = self
            .table
            .iter()
            .zip(&other.table)
            .map(|(r, s)| r.iter().zip(s).map(|(a, b)| op(a, b)).collect())
            .collect();
        Ok(Self { n: self.n, table })
    }

    pub fn validate(&self) -> ValidationReport {
        let n = self.n;
        let mut violations = Vec::new();
        let mut check =
            |family, cells: Vec<(usize, usize)>, lhs: Angle, rhs: Angle, what: String| {
                if lhs != rhs {
                    violations.push(Violation {
                        family,
                        cells,
                        detail: format!("{what}: {lhs} != {rhs}"),
                    });
                }
            };
        for i in 1..n.saturating_sub(1) {
            check(
                RelationFamily::CrossedNeighbours,
                vec![(i + 1, i), (i, i + 2)],
                self.entry(i + 1, i).clone(),
                self.entry(i, i + 2).clone(),
                format!("phi(s{},x{i}) = phi(s{i},x{})", i + 1, i + 2),
            );
            check(
                RelationFamily::BandSum,
                vec![(i, i), (i, i + 1), (i + 1, i + 1), (i + 1, i + 2)],
                self.entry(i, i) + self.entry(i, i + 1),
                self.entry(i + 1, i + 1) + self.entry(i + 1, i + 2),
                format!("band sums of s{i} and s{}", i + 1),
            );
            for j in (1..=n).filter(|&j| j < i || j > i + 2) {
                check(
                    RelationFamily::OffBandAcrossRows,
                    vec![(i, j), (i + 1, j)],
                    self.entry(i, j).clone(),
                    self.entry(i + 1, j).clone(),
                    format!("phi(s{i},x{j}) = phi(s{},x{j})", i + 1),
                );
            }
            if n >= 4 {
                let off: Vec<usize> = (1..=n).filter(|&k| k != i && k != i + 1).collect();
                for (a, &k) in off.iter().enumerate() {
                    for &l in &off[a + 1..] {
                        check(
                            RelationFamily::OffBandWithinRow,
                            vec![(i, k), (i, l)],
                            self.entry(i, k).clone(),
                            self.entry(i, l).clone(),
                            format!("phi(s{i},x{k}) = phi(s{i},x{l})"),
                        );
                    }
                }
            }
        }
        for (u, v) in braid_relation_pairs(n) {
            let (cu, cv) = (self.character_of(&u), self.character_of(&v));
            for k in 1..=n {
                if cu[k - 1] != cv[k - 1] {
                    violations.push(Violation {
                        family: RelationFamily::BraidRelation,
                        cells: Vec::new(),
                        detail: format!("phi({u}, x{k}) != phi({v}, x{k})"),
                    });
                }
            }
        }
        ValidationReport { violations }
    }

    /// Values of the character `φ(a, ·)` on `x_1, ..., x_n`.
    ///
    /// Characters factor through the abelianization, where `α_w` acts by the
    /// permutation of `w`; so `φ(l·w, x_k) = φ(l, x_{π_w(k)}) + φ(w, x_k)` and
    /// `φ(s_i⁻¹, x_k) = −φ(s_i, x_{τ_i(k)})`.
    pub fn character_of(&self, a: &BraidWord) -> Vec<Angle> {
        let n = self.n;
        let mut values = vec![Angle::zero(); n];
        let mut perm = Permutation::identity(n);
        for &l in a.letters().iter().rev() {
            let i = l.unsigned_abs() as usize;
            let row = &self.table[i - 1];
            let t = Permutation::transposition(n, i);
            for (k, v) in values.iter_mut().enumerate() {
                let target = perm.apply(k + 1);
                if l > 0 {
                    *v += &row[target - 1];
                } else {
                    *v -= &row[t.apply(target) - 1];
                }
            }
            perm = t.compose(&perm);
        }
        values
    }

    /// `φ(a, x)` extended from the generator table by the cocycle identity.
    pub fn extend(&self, a: &BraidWord, x: &FreeWord) -> Result<Angle> {
        if a.strands() != self.n {
            return Err(Error::StrandMismatch {
                left: self.n,
                right: a.strands(),
            });
        }
        Character::new(self.character_of(a)).eval(x)
    }

    /// `μ^φ`, the sum of all `φ(s_j, x_k)`.
    pub fn mu_phi(&self) -> Angle {
        self.table.iter().flatten().sum()
    }

    pub fn mu_params(&self) -> MuParams {
        MuParams {
            mu1: self.entry(1, 1) + self.entry(1, 2),
            mu2: (self.n >= 3).then(|| self.entry(1, 3).clone()),
        }
    }
}

impl fmt::Debug for BraidOneCocycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BraidOneCocycle(n={}) [", self.n)?;
        for (i, row) in self.table.iter().enumerate() {
            let cells: Vec<String> = row.iter().map(|a| a.to_string()).collect();
            writeln!(f, "  s{}: {}", i + 1, cells.join(" | "))?;
        }
        write!(f, "]")
    }
}

/// Both sides of every defining relation of `B_n`.
pub fn braid_relation_pairs(n: usize) -> Vec<(BraidWord, BraidWord)> {
    let w = |l: &[i32]| BraidWord::new(n, l).expect("valid relation letters");
    let mut pairs = Vec::new();
    for i in 1..n.saturating_sub(1) as i32 {
        pairs.push((w(&[i, i + 1, i]), w(&[i + 1, i, i + 1])));
    }
    for i in 1..n as i32 {
        for j in i + 2..n as i32 {
            pairs.push((w(&[i, j]), w(&[j, i])));
        }
    }
    pairs
}

/// Decides similarity of two braid cocycles.
///
/// On success returns `f` with `(φ1 − φ2)(s_i, x) = f(α_{s_i}(x)) − f(x)`,
/// built from `f(x1) = 0`, `f(x_{i+1}) = f(x_i) + (φ1 − φ2)(s_i, x_i)` and
/// checked against every generator before it is returned.
pub fn similar_braid_cocycles(
    phi1: &BraidOneCocycle,
    phi2: &BraidOneCocycle,
) -> Result<Option<Character>> {
    let h = phi1.sub(phi2)?;
    let params = h.mu_params();
    if !params.mu1.is_zero() || params.mu2.is_some_and(|m| !m.is_zero()) {
        return Ok(None);
    }
    let n = h.n;
    let mut values = vec![Angle::zero()];
    for i in 1..n {
        let next = &values[i - 1] + h.entry(i, i);
        values.push(next);
    }
    let f = Character::new(values);
    if BraidOneCocycle::coboundary(&f)? != h {
        return Ok(None);
    }
    Ok(Some(f))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(s: &str) -> Angle {
        s.parse().unwrap()
    }

    fn x(n: usize, s: &str) -> FreeWord {
        FreeWord::parse(n, s).unwrap()
    }

    #[test]
    fn build_examples() {
        let phi = BraidOneCocycle::build(2, &a("th1"), &Angle::zero(), &[Angle::zero()]).unwrap();
        assert!(phi.entry(1, 1).is_zero());
        assert_eq!(*phi.entry(1, 2), a("th1"));
        let zero = BraidOneCocycle::build(
            3,
            &Angle::zero(),
            &Angle::zero(),
            &[Angle::zero(), Angle::zero()],
        )
        .unwrap();
        assert!(zero.table().iter().flatten().all(Angle::is_zero));
        let phi =
            BraidOneCocycle::build(4, &a("1/3"), &a("1/2"), &[a("th1"), a("0"), a("1/5")]).unwrap();
        let off: Vec<_> = (1..4)
            .flat_map(|i| {
                (1..=4)
                    .filter(move |&j| j != i && j != i + 1)
                    .map(move |j| (i, j))
            })
            .collect();
        assert_eq!(off.len(), 6);
        assert!(off.iter().all(|&(i, j)| *phi.entry(i, j) == a("1/2")));
        assert!(phi.validate().is_valid());
        assert!(BraidOneCocycle::build(3, &a("0"), &a("0"), &[a("0")]).is_err());
    }

    #[test]
    fn crossed_neighbour_violation() {
        let phi = BraidOneCocycle::build(3, &a("1/4"), &a("1/3"), &[a("0"), a("0")]).unwrap();
        let bad = phi.with_entry(2, 1, a("1/5"));
        let report = bad.validate();
        assert!(report
            .violations
            .iter()
            .any(|v| v.family == RelationFamily::CrossedNeighbours));
        assert!(report
            .violations
            .iter()
            .any(|v| v.family == RelationFamily::BraidRelation));
    }

    #[test]
    fn extend_examples() {
        let phi = BraidOneCocycle::build(2, &a("th1"), &Angle::zero(), &[a("1/8")]).unwrap();
        let s2 = BraidWord::parse(2, "s1^2").unwrap();
        assert_eq!(phi.extend(&s2, &x(2, "x1")).unwrap(), phi.mu_phi());
        assert!(phi
            .extend(&BraidWord::identity(2), &x(2, "x1*x2"))
            .unwrap()
            .is_zero());
        assert!(phi.extend(&BraidWord::identity(3), &x(3, "x1")).is_err());
    }

    #[test]
    fn inverse_letters_cancel() {
        let phi = BraidOneCocycle::build(3, &a("th1"), &a("1/7"), &[a("1/3"), a("th2")]).unwrap();
        let w = BraidWord::new(3, &[1, 2, -1]).unwrap();
        let winv = w.inverse();
        // φ(w⁻¹, x) = −φ(w, α_{w⁻¹}(x)) checked on the abelianized level
        let cw = phi.character_of(&w);
        let cwi = phi.character_of(&winv);
        let perm = winv.permutation();
        for k in 1..=3 {
            assert_eq!(cwi[k - 1], -&cw[perm.apply(k) - 1]);
        }
    }

    #[test]
    fn mu_examples() {
        assert!(BraidOneCocycle::zero(3).unwrap().mu_phi().is_zero());
        let phi =
            BraidOneCocycle::build(3, &a("1/4 + th1"), &a("1/8"), &[a("1/3"), a("th2")]).unwrap();
        assert_eq!(phi.mu_phi(), a("3/4 + 2*th1"));
        assert_eq!(
            phi.mu_params(),
            MuParams {
                mu1: a("1/4 + th1"),
                mu2: Some(a("1/8"))
            }
        );
    }

    #[test]
    fn similarity_examples() {
        let phi = BraidOneCocycle::build(3, &a("th1"), &a("1/8"), &[a("1/3"), a("th2")]).unwrap();
        let f = similar_braid_cocycles(&phi, &phi).unwrap().unwrap();
        assert!(f.values().iter().all(Angle::is_zero));

        let p1 = BraidOneCocycle::from_table(2, vec![vec![a("1/8"), a("1/8")]]).unwrap();
        let p2 = BraidOneCocycle::from_table(2, vec![vec![a("0"), a("1/4")]]).unwrap();
        let f = similar_braid_cocycles(&p1, &p2).unwrap().unwrap();
        assert_eq!(f.values(), &[a("0"), a("1/8")]);

        let q1 = BraidOneCocycle::build(3, &a("1/2"), &a("1/8"), &[a("0"), a("0")]).unwrap();
        let q2 = BraidOneCocycle::build(3, &a("1/2"), &a("1/4"), &[a("0"), a("0")]).unwrap();
        assert!(similar_braid_cocycles(&q1, &q2).unwrap().is_none());
    }

    #[test]
    fn relation_pairs_count() {
        assert_eq!(braid_relation_pairs(2).len(), 0);
        assert_eq!(braid_relation_pairs(4).len(), 2 + 1);
        assert_eq!(braid_relation_pairs(5).len(), 3 + 3);
    }
}
