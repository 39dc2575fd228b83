//! Inputs shared by the benchmarks.

use std::sync::Arc;

use fiberlab::artin::{quotient_algebra, ArtinAlgebra};
use fiberlab::catalog::gorenstein_core_ideal;
use fiberlab::groebner::IdealSpec;
use fiberlab::{FieldSpec, PolyRing, Rat};

/// The ten quadrics of the length 12 Gorenstein core with `alpha = 2`.
pub fn core_ideal() -> IdealSpec {
    gorenstein_core_ideal(&Rat::from_i64(2), &["X1", "X2", "X3", "X4", "X5"]).expect("core ideal builds")
}

/// `k[vars]/(gens)` as a finite dimensional algebra.
pub fn algebra(vars: &[&str], gens: &[&str]) -> Arc<ArtinAlgebra> {
    let ring = PolyRing::new(vars, FieldSpec::Rationals).expect("ring");
    let ideal = IdealSpec::parse(&ring, gens).expect("ideal parses");
    Arc::new(quotient_algebra(&ideal, &FieldSpec::Rationals).expect("cofinite"))
}
