//! Verdicts from the torsion behaviour of cocycle invariants.
//!
//! Each verdict names the statement it relies on and never claims more than
//! that statement gives. Two converses remain open and are reported as
//! [`VerdictKind::Indeterminate`]:
//!
//! - "In Theorem P, does (iv) ⟹ (i) for n ≥ 3?"
//! - the analogous converse for 2-cocycles on `P_{n+1}` of Mackey type.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::braid::{center_z, pure_generator};
use crate::error::{Error, Result};
use crate::freegroup::FreeWord;
use crate::phase::Angle;

use super::{restrict_to_pure, OneCocycle, PureOneCocycle, PureTwoCocycle};

/// Which crossed product or twisted group algebra a cocycle describes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    /// `C*_r(F_n) ⋊ B_n` deformed by a braid cocycle.
    Bn,
    /// `C*_r(F_n) ⋊ P_n` deformed by a pure cocycle.
    Pn,
    /// `(A_{n+1}, σ^φ)` with `A_{n+1} ≅ F_n ⋊ B_n`.
    An,
    /// `(P_{n+1}, σ)` with `σ(xa, yb) = φ(a, y) + ω(a, b)`.
    MackeyPn1,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum VerdictKind {
    /// Simple with unique trace, and the statement is an equivalence.
    SimpleAndUniqueTrace,
    /// Kleppner's condition fails, so the von Neumann algebra is not a factor.
    NotFactor,
    /// A one-directional sufficient condition holds.
    GuaranteedSimpleAndUniqueTrace,
    /// Kleppner's condition holds but the relative condition fails; the
    /// known statements decide nothing here.
    Indeterminate,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub verdict: VerdictKind,
    /// Citation of the statement the verdict relies on.
    pub by: String,
    pub kleppner: bool,
    pub relative_kleppner: bool,
    /// Every angle that entered the decision, keyed by name.
    pub quantities: BTreeMap<String, Angle>,
}

fn require_braid(cocycle: &OneCocycle, family: Family) -> Result<&super::BraidOneCocycle> {
    match cocycle {
        OneCocycle::Braid(phi) => Ok(phi),
        OneCocycle::Pure(_) => Err(Error::Shape(format!(
            "family {family:?} needs a braid cocycle (s-generator entries)"
        ))),
    }
}

fn as_pure(cocycle: &OneCocycle) -> PureOneCocycle {
    match cocycle {
        OneCocycle::Braid(phi) => restrict_to_pure(phi),
        OneCocycle::Pure(phi) => phi.clone(),
    }
}

fn braid_verdict(cocycle: &OneCocycle, family: Family, by: &str) -> Result<Verdict> {
    let phi = require_braid(cocycle, family)?;
    let n = phi.strands();
    let z = center_z(n)?;
    let mut quantities = BTreeMap::new();
    let mu = phi.mu_phi();
    let mut relative = false;
    for k in 1..=n {
        let v = phi.extend(&z, &FreeWord::generator(n, k)?)?;
        relative |= !v.is_torsion();
        quantities.insert(format!("phi(z,x{k})"), v);
    }
    quantities.insert("mu".to_string(), mu.clone());
    debug_assert_eq!(relative, !mu.is_torsion());
    let verdict = if mu.is_torsion() {
        VerdictKind::NotFactor
    } else {
        VerdictKind::SimpleAndUniqueTrace
    };
    Ok(Verdict {
        verdict,
        by: by.to_string(),
        kleppner: relative,
        relative_kleppner: relative,
        quantities,
    })
}

/// Shared decision for `P_n` and Mackey cocycles on `P_{n+1}`: relative
/// Kleppner from `ν_k`, Kleppner from `ν_k` and the per-pair terms.
fn pure_verdict(
    n: usize,
    nu: Vec<Angle>,
    terms: Vec<((usize, usize), Angle)>,
    term_name: &str,
    theorem: &str,
    lemma: &str,
) -> Verdict {
    let relative = nu.iter().any(|v| !v.is_torsion());
    let kleppner = relative || terms.iter().any(|(_, v)| !v.is_torsion());
    let mut quantities = BTreeMap::new();
    for (k, v) in nu.into_iter().enumerate() {
        quantities.insert(format!("nu{}", k + 1), v);
    }
    for ((i, j), v) in terms {
        quantities.insert(format!("{term_name}(a({i},{j}))"), v);
    }
    let (verdict, by) = match (n == 2, relative, kleppner) {
        (true, true, _) => (VerdictKind::SimpleAndUniqueTrace, theorem),
        (true, false, _) => (VerdictKind::NotFactor, theorem),
        (false, true, _) => (VerdictKind::GuaranteedSimpleAndUniqueTrace, theorem),
        (false, false, false) => (VerdictKind::NotFactor, lemma),
        (false, false, true) => (VerdictKind::Indeterminate, theorem),
    };
    Verdict {
        verdict,
        by: by.to_string(),
        kleppner,
        relative_kleppner: relative,
        quantities,
    }
}

/// Evaluates the hypotheses for `family` exactly and turns them into a
/// verdict.
///
/// `omega` is consulted only for [`Family::MackeyPn1`], where the values
/// `ω(a_{ij}, z)` and `ω(z, a_{ij})` are required. A braid cocycle passed for
/// a pure family is restricted to `P_n` first.
pub fn evaluate_conditions(
    family: Family,
    cocycle: &OneCocycle,
    omega: Option<&dyn PureTwoCocycle>,
) -> Result<Verdict> {
    match family {
        Family::Bn => braid_verdict(cocycle, family, "Theorem AB"),
        Family::An => braid_verdict(cocycle, family, "Proposition A_n"),
        Family::Pn => {
            let phi = as_pure(cocycle);
            let n = phi.strands();
            let nu = (1..=n).map(|k| phi.nu(k)).collect();
            let terms = super::pure_cocycle::pairs(n)
                .map(|(i, j)| ((i, j), phi.boundary_value(i, j)))
                .collect();
            Ok(pure_verdict(
                n,
                nu,
                terms,
                "phi_boundary",
                "Theorem P",
                "Lemma kleppner-P",
            ))
        }
        Family::MackeyPn1 => {
            let phi = as_pure(cocycle);
            let n = phi.strands();
            let omega = omega.ok_or_else(|| Error::MissingOmega("no omega supplied".into()))?;
            if omega.strands() != n {
                return Err(Error::StrandMismatch {
                    left: n,
                    right: omega.strands(),
                });
            }
            let z = center_z(n)?;
            let mut terms = Vec::new();
            for (i, j) in super::pure_cocycle::pairs(n) {
                let a = pure_generator(i, j, n)?;
                let az = omega
                    .eval(&a, &z)
                    .ok_or_else(|| Error::MissingOmega(format!("a({i},{j}), z")))?;
                let za = omega
                    .eval(&z, &a)
                    .ok_or_else(|| Error::MissingOmega(format!("z, a({i},{j})")))?;
                terms.push(((i, j), phi.boundary_value(i, j) + az - za));
            }
            let nu = (1..=n).map(|k| phi.nu(k)).collect();
            Ok(pure_verdict(
                n,
                nu,
                terms,
                "condition_iv",
                "Proposition P_{n+1}",
                "Proposition P_{n+1}",
            ))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::BraidWord;
    use crate::cocycle::{BilinearOmega, BraidOneCocycle, OmegaTable};

    fn a(s: &str) -> Angle {
        s.parse().unwrap()
    }

    fn braid2(x1: &str, x2: &str) -> OneCocycle {
        OneCocycle::Braid(BraidOneCocycle::from_table(2, vec![vec![a(x1), a(x2)]]).unwrap())
    }

    #[test]
    fn two_strand_braid_configurations() {
        let v = evaluate_conditions(Family::Bn, &braid2("th1", "0"), None).unwrap();
        assert_eq!(v.verdict, VerdictKind::SimpleAndUniqueTrace);
        assert_eq!(v.by, "Theorem AB");
        let v = evaluate_conditions(Family::Bn, &braid2("1/2", "0"), None).unwrap();
        assert_eq!(v.verdict, VerdictKind::NotFactor);
        assert!(!v.kleppner);
        let v = evaluate_conditions(Family::An, &braid2("th1", "-th1"), None).unwrap();
        assert_eq!(v.verdict, VerdictKind::NotFactor);
    }

    #[test]
    fn two_strand_pure_is_an_equivalence() {
        let phi = PureOneCocycle::zero(2)
            .unwrap()
            .with_entry(1, 2, 2, a("th2"));
        let v = evaluate_conditions(Family::Pn, &OneCocycle::Pure(phi), None).unwrap();
        assert_eq!(v.verdict, VerdictKind::SimpleAndUniqueTrace);
        assert_eq!(v.quantities["nu2"], a("th2"));
        let v = evaluate_conditions(
            Family::Pn,
            &OneCocycle::Pure(PureOneCocycle::zero(2).unwrap()),
            None,
        )
        .unwrap();
        assert_eq!(v.verdict, VerdictKind::NotFactor);
    }

    #[test]
    fn three_strand_pure_cases() {
        let cancel = PureOneCocycle::zero(3)
            .unwrap()
            .with_entry(1, 2, 1, a("th1"))
            .with_entry(1, 3, 1, a("-th1"));
        let v = evaluate_conditions(Family::Pn, &OneCocycle::Pure(cancel.clone()), None).unwrap();
        assert_eq!(v.verdict, VerdictKind::Indeterminate);
        assert!(v.kleppner && !v.relative_kleppner);

        let guaranteed = cancel.with_entry(2, 3, 2, a("th3"));
        let v = evaluate_conditions(Family::Pn, &OneCocycle::Pure(guaranteed), None).unwrap();
        assert_eq!(v.verdict, VerdictKind::GuaranteedSimpleAndUniqueTrace);

        let torsion = PureOneCocycle::zero(3)
            .unwrap()
            .with_entry(1, 2, 3, a("1/3"));
        let v = evaluate_conditions(Family::Pn, &OneCocycle::Pure(torsion), None).unwrap();
        assert_eq!(v.verdict, VerdictKind::NotFactor);
        assert_eq!(v.by, "Lemma kleppner-P");
    }

    #[test]
    fn braid_cocycle_restricts_for_pure_family() {
        let phi = BraidOneCocycle::build(3, &a("th1"), &a("0"), &[a("0"), a("0")]).unwrap();
        let v = evaluate_conditions(Family::Pn, &OneCocycle::Braid(phi), None).unwrap();
        assert_eq!(v.verdict, VerdictKind::GuaranteedSimpleAndUniqueTrace);
        let pure = OneCocycle::Pure(PureOneCocycle::zero(3).unwrap());
        assert!(evaluate_conditions(Family::Bn, &pure, None).is_err());
    }

    #[test]
    fn mackey_needs_omega() {
        let phi = OneCocycle::Pure(PureOneCocycle::zero(3).unwrap());
        assert!(matches!(
            evaluate_conditions(Family::MackeyPn1, &phi, None),
            Err(Error::MissingOmega(_))
        ));
        let table = OmegaTable::new(3);
        assert!(matches!(
            evaluate_conditions(Family::MackeyPn1, &phi, Some(&table)),
            Err(Error::MissingOmega(_))
        ));
    }

    #[test]
    fn mackey_omega_can_rescue_kleppner() {
        let phi = OneCocycle::Pure(PureOneCocycle::zero(3).unwrap());
        // lk_{12}(a12) = 1 and lk_{12}(z) = 1, so ω(a12,z) − ω(z,a12) = th1
        let omega = BilinearOmega::new(3).with((1, 2), (1, 3), a("th1"));
        let v = evaluate_conditions(Family::MackeyPn1, &phi, Some(&omega)).unwrap();
        assert_eq!(v.verdict, VerdictKind::Indeterminate);
        assert_eq!(v.quantities["condition_iv(a(1,2))"], a("th1"));
        assert_eq!(v.quantities["condition_iv(a(1,3))"], a("-th1"));

        let mut table = OmegaTable::new(2);
        let z = center_z(2).unwrap();
        table.insert(BraidWord::parse(2, "s1^2").unwrap(), z.clone(), a("1/2"));
        table.insert(z.clone(), BraidWord::parse(2, "s1^2").unwrap(), a("1/2"));
        let phi2 = PureOneCocycle::zero(2)
            .unwrap()
            .with_entry(1, 2, 1, a("th1"));
        let v =
            evaluate_conditions(Family::MackeyPn1, &OneCocycle::Pure(phi2), Some(&table)).unwrap();
        assert_eq!(v.verdict, VerdictKind::SimpleAndUniqueTrace);
    }

    #[test]
    fn verdict_serializes_with_citation() {
        let v = evaluate_conditions(Family::Bn, &braid2("th1", "0"), None).unwrap();
        let json = serde_json::to_string(&v).unwrap();
        assert!(json.starts_with(r#"{"verdict":"SimpleAndUniqueTrace","by":"Theorem AB""#));
    }
}
