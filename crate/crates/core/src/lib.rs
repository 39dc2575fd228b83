pub mod artin;
pub mod catalog;
pub mod error;
pub mod fiber;
pub mod field;
pub mod groebner;
pub mod homalg;
pub mod linalg;
pub mod parse;
pub mod poly;
pub mod rat;

pub use error::{Error, Result};
pub use field::FieldSpec;
pub use poly::{poly_arith, ArithOp, Monomial, MonomialOrder, Poly, PolyRing};
pub use rat::Rat;
