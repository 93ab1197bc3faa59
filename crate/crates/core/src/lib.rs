//! Exact combinatorics of affine root systems at admissible levels:
//! finite root data and Weyl groups, the extended affine Weyl group and its
//! dot action, admissible numbers and weights, integral root systems, and
//! the sets `Pr_k⁺ ⊂ Pr_k` with a membership test for modules over the
//! simple affine vertex algebra.

pub mod admissibility;
pub mod affine;
pub mod cartan;
pub mod classification;
pub mod error;
pub mod lie_type;
pub mod rational;
pub mod roots;
pub mod weyl;

pub use admissibility::{
    integral_root_membership, is_admissible_number, is_admissible_weight, isomorphic_integral_systems,
    simple_integral_roots, Admissibility, AdmissibilityFailure, AdmissibleNumberCertificate, IntegralRootSystem,
    Level, LevelCase, Residue,
};
pub use affine::{affine_simple_roots, diagram_automorphisms, rho_hat, AffineWeight, ExtendedWeylElement, RealRoot};
pub use classification::{
    duflo_joseph_move, kostant_w_i, reduction_data, AdmissibleLevelContext, BatteryReport, DufloJoseph,
    ModuleFailure, ModuleVerdict, PrWeight, ReductionDatum,
};
pub use error::{Error, Result};
pub use lie_type::{Family, LieType};
pub use rational::{parse_rational, Vector, Q};
pub use roots::{BoundRoot, FiniteRootSystem};
pub use weyl::{FiniteWeylElement, DEFAULT_WEYL_CAP};
