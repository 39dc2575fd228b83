//! Finite-dimensional local algebras as structure tables, and their modules.

mod algebra;
pub mod grading;
mod iso;
mod module;

pub use algebra::{quotient_algebra, ArtinAlgebra, LocalInvariants};
pub use iso::{fingerprint, hom_space, is_isomorphic, is_isomorphic_with, IsoConfig};
pub use module::{same_algebra, ModRep};

use std::sync::Arc;

use crate::error::Result;

/// `Hom_k(A, k)` with the contragredient action.
pub fn dualizing_module(algebra: &Arc<ArtinAlgebra>) -> ModRep {
    ModRep::dualizing_module(algebra)
}

pub fn tensor_algebra(a: &ArtinAlgebra, b: &ArtinAlgebra) -> Result<ArtinAlgebra> {
    a.tensor(b)
}

pub fn tensor_module(m: &ModRep, n: &ModRep) -> Result<ModRep> {
    m.tensor(n)
}

pub fn base_change_fraction_field(a: &ArtinAlgebra, tag: &str) -> ArtinAlgebra {
    a.base_change_fraction_field(tag)
}
