//! Monomial-ideal engine for the simplicial ideals `I(n,c)`.
//!
//! `I(n,c)` is the ideal of the union of all codimension-`c` coordinate faces
//! of projective `n`-space; it is generated by the squarefree monomials of
//! degree `n + 2 - c` in `x0, ..., xn`. The crate builds these ideals,
//! computes their ordinary and symbolic powers (the latter by two independent
//! routes), decides containments between them with closed-form criteria and
//! with brute-force oracles, computes resurgence exactly, and runs a bounded
//! verification harness over the known identities.
//!
//! ```
//! use simplab::{simplicial_ideal, symbolic_power, Limits, SimplicialSpec};
//!
//! let v = SimplicialSpec::new(2, 2).unwrap();
//! assert_eq!(simplicial_ideal(v).to_string(), "<x0*x1, x0*x2, x1*x2>");
//! let v2 = symbolic_power(v, 2, &Limits::default()).unwrap();
//! assert_eq!(v2.to_string(), "<x0*x1*x2, x0^2*x1^2, x0^2*x2^2, x1^2*x2^2>");
//! ```

pub mod cli;
pub mod config;
pub mod containment;
pub mod error;
pub mod ideal;
pub mod monomial;
pub mod simplicial;

pub use config::{Limits, OracleBounds, VerifyBounds};
pub use containment::{
    containment_oracle, containment_threshold, empirical_resurgence_sup, resurgence,
    resurgence_report, resurgence_witness, symbolic_containment_oracle, thm_a_params,
    thm_a_predicate, thm_b_predicate, ContainmentQuery, ContainmentVerdict, Rational,
    ResurgenceReport, SupMethod, ThmAParams, Witness,
};
pub use error::{Error, Result};
pub use ideal::MonomialIdeal;
pub use monomial::{Exponent, Monomial};
pub use simplicial::{
    face_primes, ordinary_member, ordinary_power_min_gens, simplicial_ideal, symbolic_member,
    symbolic_member_by_subsets, symbolic_power, symbolic_power_oracle, FacePrime, SimplicialSpec,
};
