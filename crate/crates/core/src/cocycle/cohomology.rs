//! Closed-form shapes of the cohomology groups that parametrize the cocycles.
//! Nothing is computed here beyond evaluating the known formulas.

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CohomologyGroup {
    /// `H¹(B_n, Hom(F_n, T))`.
    Bn,
    /// `H¹(P_n, Hom(F_n, T))`.
    Pn,
    /// `H²(A_n, T)`.
    An,
    /// `H²(P_n, T)`.
    PnH2,
}

/// `T^torus_exponent ⊕ Z_{f_1} ⊕ ...`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomologyDescription {
    pub group: CohomologyGroup,
    pub n: usize,
    pub torus_exponent: u64,
    pub finite_factors: Vec<u64>,
    /// Named circle parameters, when the classification names them.
    pub parameters: Vec<String>,
    pub text: String,
}

fn render(torus: u64, finite: &[u64]) -> String {
    let mut parts = Vec::new();
    match torus {
        0 => {}
        1 => parts.push("T".to_string()),
        e => parts.push(format!("T^{e}")),
    }
    parts.extend(finite.iter().map(|f| format!("Z{f}")));
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(" + ")
    }
}

pub fn cohomology_parameters(group: CohomologyGroup, n: usize) -> CohomologyDescription {
    let m = n as u64;
    let (torus, finite, parameters): (u64, Vec<u64>, Vec<String>) = match group {
        CohomologyGroup::Bn => match n {
            0 | 1 => (0, vec![], vec![]),
            2 => (1, vec![], vec!["mu1".into()]),
            _ => (2, vec![], vec!["mu1".into(), "mu2".into()]),
        },
        // one character of F_n per generator a_ij
        CohomologyGroup::Pn => (
            m * m * m.saturating_sub(1) / 2,
            vec![],
            vec!["phi(a_ij,x_k)".into()],
        ),
        CohomologyGroup::An => match n {
            0..=2 => (0, vec![], vec![]),
            3 => (1, vec![], vec!["mu".into()]),
            4 => (2, vec![], vec!["mu1".into(), "mu2".into()]),
            _ => (2, vec![2], vec!["mu1".into(), "mu2".into()]),
        },
        CohomologyGroup::PnH2 => {
            let e = if n < 3 {
                0
            } else {
                m * (m - 1) * (m - 2) * (3 * m - 1) / 24
            };
            (e, vec![], vec![])
        }
    };
    let text = render(torus, &finite);
    CohomologyDescription {
        group,
        n,
        torus_exponent: torus,
        finite_factors: finite,
        parameters,
        text,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn documented_values() {
        assert_eq!(
            cohomology_parameters(CohomologyGroup::PnH2, 4).torus_exponent,
            11
        );
        let b2 = cohomology_parameters(CohomologyGroup::Bn, 2);
        assert_eq!(
            (b2.torus_exponent, b2.parameters.as_slice()),
            (1, &["mu1".to_string()][..])
        );
        assert_eq!(
            cohomology_parameters(CohomologyGroup::Pn, 3).torus_exponent,
            9
        );
        assert_eq!(
            cohomology_parameters(CohomologyGroup::An, 6).text,
            "T^2 + Z2"
        );
        assert_eq!(cohomology_parameters(CohomologyGroup::An, 3).text, "T");
    }

    #[test]
    fn h2_formula_is_integral_and_matches_pair_counts() {
        // H²(P_{n+1}) = H²(P_n) × H¹(P_n, Hom(F_n,T)) summed from P_2
        let mut acc = 0;
        for n in 2..=12 {
            assert_eq!(
                cohomology_parameters(CohomologyGroup::PnH2, n).torus_exponent,
                acc
            );
            acc += cohomology_parameters(CohomologyGroup::Pn, n).torus_exponent;
        }
    }
}
