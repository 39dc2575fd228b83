//! Gröbner bases and what they buy: normal forms, standard monomials,
//! Hilbert functions, and the combinatorics of monomial ideals.

mod buchberger;
mod hilbert;
mod monomial;

pub use buchberger::{buchberger, buchberger_with, BuchbergerConfig, GroebnerBasis};
pub use hilbert::{hilbert_function, HilbertSeries};
pub use monomial::{krull_dimension, monomial_minimal_primes, monomial_radical, monomial_socle, MonomialIdeal};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::{Poly, PolyRing};

/// Generators of an ideal together with flags read off from them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdealSpec {
    #[serde(skip)]
    ring: PolyRing,
    #[serde(serialize_with = "ser_polys")]
    generators: Vec<Poly>,
    pub homogeneous: bool,
    pub monomial: bool,
}

fn ser_polys<S: serde::Serializer>(g: &[Poly], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(g.iter().map(|p| p.to_string()))
}

impl IdealSpec {
    /// Zero generators are dropped.
    pub fn new(ring: &PolyRing, generators: Vec<Poly>) -> Result<IdealSpec> {
        for g in &generators {
            if g.ring() != ring {
                return Err(Error::Structural(format!("generator {g} lives in another ring")));
            }
        }
        let generators: Vec<Poly> = generators.into_iter().filter(|g| !g.is_zero()).collect();
        let homogeneous = generators.iter().all(Poly::is_homogeneous);
        let monomial = generators.iter().all(Poly::is_monomial);
        Ok(IdealSpec { ring: ring.clone(), generators, homogeneous, monomial })
    }

    pub fn parse<S: AsRef<str>>(ring: &PolyRing, gens: &[S]) -> Result<IdealSpec> {
        let polys = gens.iter().map(|g| ring.parse(g.as_ref())).collect::<Result<Vec<_>>>()?;
        IdealSpec::new(ring, polys)
    }

    pub fn zero(ring: &PolyRing) -> IdealSpec {
        IdealSpec::new(ring, Vec::new()).unwrap()
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn generators(&self) -> &[Poly] {
        &self.generators
    }

    /// Moves the ideal into a ring containing all its variables.
    pub fn embed(&self, target: &PolyRing) -> Result<IdealSpec> {
        let gens = self.generators.iter().map(|g| g.embed(target)).collect::<Result<Vec<_>>>()?;
        IdealSpec::new(target, gens)
    }

    pub fn with_generators(&self, extra: impl IntoIterator<Item = Poly>) -> Result<IdealSpec> {
        let mut gens = self.generators.clone();
        gens.extend(extra);
        IdealSpec::new(&self.ring, gens)
    }
}
