//! 1-cocycles `B_n × F_n → T` and `P_n × F_n → T`, the 2-cocycles they induce
//! on `F_n ⋊ B_n`, and the conditions read off from them.
//!
//! A 1-cocycle satisfies `φ(ab, x) = φ(a, α_b(x)) + φ(b, x)` and is a
//! character of `F_n` in its second argument.

mod braid_cocycle;
mod cohomology;
mod conditions;
mod json;
mod pure_cocycle;
mod semidirect;
mod sigma;

pub use braid_cocycle::{
    braid_relation_pairs, similar_braid_cocycles, BraidOneCocycle, MuParams, RelationFamily,
    ValidationReport, Violation,
};
pub use cohomology::{cohomology_parameters, CohomologyDescription, CohomologyGroup};
pub use conditions::{evaluate_conditions, Family, Verdict, VerdictKind};
pub use json::{parse_braid_label, CocycleFile, Flavor};
pub use pure_cocycle::{restrict_to_pure, PureOneCocycle};
pub use semidirect::SemidirectElement;
pub use sigma::{
    sigma_eval, sigma_regular, validate_two_cocycle, BilinearOmega, MackeyTwoCocycle, OmegaTable,
    OneCocycle, PureTwoCocycle, RegularityReport, TwoCocycle, TwoCocycleSigmaPhi,
};
