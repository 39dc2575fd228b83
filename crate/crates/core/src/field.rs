//! Coefficient fields.
//!
//! Elements of every supported field are carried as [`Rat`]. Over a prime
//! field they are the integer representatives `0..p`; over the fraction
//! field `Q((Y))` they are plain rationals, since the transcendental never
//! enters a coefficient of the rings built here.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rat::Rat;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldSpec {
    Rationals,
    PrimeField(u64),
    /// `Q((tag))`, the fraction field of a power series ring over `Q`.
    FractionField {
        tag: String,
    },
}

impl FieldSpec {
    pub fn prime(p: u64) -> Result<FieldSpec> {
        if !is_prime(p) {
            return Err(Error::Structural(format!("{p} is not prime")));
        }
        if p >= 1 << 31 {
            return Err(Error::Unsupported(format!("prime {p} too large for word arithmetic")));
        }
        Ok(FieldSpec::PrimeField(p))
    }

    pub fn fraction_field(tag: impl Into<String>) -> FieldSpec {
        FieldSpec::FractionField { tag: tag.into() }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::PrimeField(p) => *p,
            _ => 0,
        }
    }

    /// The field whose arithmetic this one delegates to.
    pub fn base(&self) -> FieldSpec {
        match self {
            FieldSpec::FractionField { .. } => FieldSpec::Rationals,
            f => f.clone(),
        }
    }

    fn modulus(&self) -> Option<i64> {
        match self {
            FieldSpec::PrimeField(p) => Some(*p as i64),
            _ => None,
        }
    }

    fn reduce_int(&self, n: i64) -> Rat {
        match self.modulus() {
            Some(p) => Rat::from_i64(n.rem_euclid(p)),
            None => Rat::from_i64(n),
        }
    }

    /// Maps a rational into the field; fails when the denominator vanishes mod `p`.
    pub fn from_rat(&self, r: &Rat) -> Result<Rat> {
        let Some(p) = self.modulus() else {
            return Ok(r.clone());
        };
        let pb = BigInt::from(p);
        let n = r.numer().mod_floor(&pb).to_i64().unwrap();
        let d = r.denom().mod_floor(&pb).to_i64().unwrap();
        if d == 0 {
            return Err(Error::Arithmetic(format!("denominator of {r} vanishes mod {p}")));
        }
        Ok(Rat::from_i64(mulmod(n, inv_mod(d, p), p)))
    }

    pub fn from_i64(&self, n: i64) -> Rat {
        self.reduce_int(n)
    }

    pub fn add(&self, a: &Rat, b: &Rat) -> Rat {
        match self.modulus() {
            Some(p) => Rat::from_i64((small(a) + small(b)) % p),
            None => a + b,
        }
    }

    pub fn sub(&self, a: &Rat, b: &Rat) -> Rat {
        match self.modulus() {
            Some(p) => Rat::from_i64((small(a) - small(b)).rem_euclid(p)),
            None => a - b,
        }
    }

    pub fn mul(&self, a: &Rat, b: &Rat) -> Rat {
        match self.modulus() {
            Some(p) => Rat::from_i64(mulmod(small(a), small(b), p)),
            None => a * b,
        }
    }

    pub fn neg(&self, a: &Rat) -> Rat {
        match self.modulus() {
            Some(p) => Rat::from_i64((p - small(a)) % p),
            None => -a,
        }
    }

    pub fn inv(&self, a: &Rat) -> Rat {
        assert!(!a.is_zero(), "inverse of zero");
        match self.modulus() {
            Some(p) => Rat::from_i64(inv_mod(small(a), p)),
            None => a.recip(),
        }
    }

    pub fn div(&self, a: &Rat, b: &Rat) -> Rat {
        self.mul(a, &self.inv(b))
    }

    /// `a - c * b`, the elimination step.
    pub fn sub_mul(&self, a: &Rat, c: &Rat, b: &Rat) -> Rat {
        self.sub(a, &self.mul(c, b))
    }

    /// Whether elements of `self` and `other` can be combined.
    pub fn compatible(&self, other: &FieldSpec) -> bool {
        self == other
    }
}

fn small(a: &Rat) -> i64 {
    a.to_i64().expect("prime-field element out of representation")
}

fn mulmod(a: i64, b: i64, p: i64) -> i64 {
    ((a as i128 * b as i128) % p as i128) as i64
}

fn inv_mod(a: i64, p: i64) -> i64 {
    let e = num_integer::Integer::extended_gcd(&a.rem_euclid(p), &p);
    debug_assert_eq!(e.gcd, 1);
    e.x.rem_euclid(p)
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::PrimeField(p) => write!(f, "Fp({p})"),
            FieldSpec::FractionField { tag } => write!(f, "Q(({tag}))"),
        }
    }
}

impl std::str::FromStr for FieldSpec {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "Q" {
            return Ok(FieldSpec::Rationals);
        }
        if let Some(inner) = s.strip_prefix("Fp(").and_then(|r| r.strip_suffix(')')) {
            let p: u64 = inner.trim().parse().map_err(|_| Error::Structural(format!("bad prime in `{s}`")))?;
            return FieldSpec::prime(p);
        }
        if let Some(inner) = s.strip_prefix("Q((").and_then(|r| r.strip_suffix("))")) {
            return Ok(FieldSpec::fraction_field(inner.trim()));
        }
        Err(Error::Structural(format!("unknown field `{s}`")))
    }
}

/// Whether `a` has finite multiplicative order in `Q^x`, i.e. `a = +-1` (or 0).
pub fn is_root_of_unity_or_zero(a: &Rat) -> bool {
    a.is_zero() || *a == Rat::one() || *a == Rat::from_i64(-1)
}
