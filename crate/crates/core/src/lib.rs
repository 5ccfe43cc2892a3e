//! Exact calculus of Hirzebruch characteristic classes for global complete
//! intersections in products of projective spaces.
//!
//! The crate computes, in exact rational arithmetic throughout:
//!
//! * smooth and virtual Hirzebruch classes `T_y*` (both the cohomological
//!   `Q_y` route and the `Lambda_y`/Todd route, which must agree
//!   coefficientwise),
//! * the classical Chern / Todd / L specializations at `y = -1, 0, 1`,
//! * Steenbrink spectra of weighted-homogeneous isolated singularities and
//!   the point-supported Milnor-class correction they determine,
//! * genus-level motivic nearby and vanishing fibers on SNC resolution data,
//!   with the logarithmic-forms and inclusion-exclusion routes as
//!   cross-checks,
//! * independent oracles (sheaf Euler characteristics by binomial
//!   recursions, scissor-relation genus calculus) used to verify all of the
//!   above.
//!
//! All values are immutable and all operations are pure functions, so
//! everything is safe to share across threads.

pub mod classes;
pub mod error;
pub mod genus;
pub mod geometry;
pub mod graded;
pub mod nearby;
pub mod norm;
pub mod oracles;
pub mod rat;
pub mod series;
pub mod singularity;
pub mod verify;
pub mod ypoly;

pub use classes::{
    genus_specializations, hirzebruch_class_smooth, normalize_1py, specialize,
    virtual_class_via_dr, virtual_class_via_ty, HomologyClass,
};
pub use error::{Error, Result};
pub use genus::{
    chern_character, lambda_y_character, multiplicative_class, standard_series,
    verify_series_relation, SeriesKind,
};
pub use geometry::{
    degree, fundamental_class, projective_ring, tangent_kclass, virtual_tangent, BundleDesc,
    CompleteIntersection, KClass, RingDesc,
};
pub use graded::GradedClass;
pub use nearby::{
    incl_excl_open, log_dr_trivial, motivic_nearby_degree0, strat_additivity, LogPair,
    SncResolution, SncStratum, StratumGenus,
};
pub use norm::NormCoeff;
pub use oracles::{chi_y_smooth_oracle, scissor_chi_y, sheaf_euler_omega, ScissorExpr};
pub use rat::Rat;
pub use series::PowerSeries;
pub use singularity::{
    chi_y_milnor_fiber, hm_recursion_degree0, milnor_class_isolated, milnor_number, spectrum_wh,
    verify_cor2_degree0, IsolatedSingularPoint, SingularityData, SpectrumData, Weights,
};
pub use ypoly::YPoly;
