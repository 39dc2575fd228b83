//! Numerical invariants of local rings and of their fiber products over the
//! residue field, with classification predicates built on them.

mod calculus;
mod classify;
mod profile;

pub use calculus::{
    fiber_bass_series, fiber_dim_depth, fiber_edim, fiber_multiplicity, fiber_poincare_k, fiber_present, fiber_profile,
    fiber_type, FiberSpec,
};
pub use classify::{
    classify_fcmt_cm, classify_fcmt_depth_le1, classify_gorenstein_fiber, monomial_staircases, nil_multiplicity_check,
    proposition_proof_invariant, small_mult_semidualizing_flag, Classification, NilCheck, SmallLengthRecord,
};
pub use profile::{
    certified_regular_form, monomial_finite_cm_type, recognize_plane_curve, DeclaredFlags, PlaneCurveForm, Provenance,
    RingProfile, SeriesBudget,
};
