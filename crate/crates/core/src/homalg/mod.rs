//! Minimal free resolutions, Ext, Bass numbers and truncated series over
//! artinian local algebras.

mod ext;
mod resolution;
mod series;

pub use ext::{
    bass_numbers, bass_series, betti_numbers, betti_numbers_bounded, ext_dims, ext_dims_from, ext_dims_with,
    is_semidualizing, poincare_series, ExtRoute, SemidualizingReport,
};
pub use resolution::{minimal_resolution, Resolution, Stage, DEFAULT_CEILING};
pub use series::{series_arith, SeriesOp, SeriesTrunc};
