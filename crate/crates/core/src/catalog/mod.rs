//! Named rings with published invariants and harnesses that recompute them.

mod corpus;
mod examples;
mod report;
mod verify;

pub use corpus::{corpus_pairs, reject_trivial_factor, verify_corpus_formulas, CorpusOutcome, CorpusPair};
pub use examples::{build, gorenstein_core_ideal, square_power_ideal, Built, ExampleId, Expected, MAX_POWER};
pub use report::{Check, CheckKind, CheckStatus, Report};
pub use verify::{
    semidualizing_family, verify_semidualizing_family, verify_square_power_example, verify_type_two_example,
    VerifyConfig,
};
