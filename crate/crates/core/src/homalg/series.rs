use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rat::Rat;

/// Power series `c_0 + c_1 t + ... + c_N t^N` known through degree `N`.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesTrunc {
    coeffs: Vec<Rat>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl SeriesTrunc {
    /// Pads or cuts `coeffs` to length `trunc + 1`.
    pub fn new(mut coeffs: Vec<Rat>, trunc: usize) -> SeriesTrunc {
        coeffs.resize(trunc + 1, Rat::zero());
        SeriesTrunc { coeffs }
    }

    pub fn from_i64(coeffs: &[i64], trunc: usize) -> SeriesTrunc {
        SeriesTrunc::new(coeffs.iter().map(|&c| Rat::from_i64(c)).collect(), trunc)
    }

    pub fn from_usize(coeffs: &[usize], trunc: usize) -> SeriesTrunc {
        SeriesTrunc::new(coeffs.iter().map(|&c| Rat::from_i64(c as i64)).collect(), trunc)
    }

    pub fn constant(c: i64, trunc: usize) -> SeriesTrunc {
        SeriesTrunc::from_i64(&[c], trunc)
    }

    /// `t^k`.
    pub fn monomial(k: usize, trunc: usize) -> SeriesTrunc {
        let mut c = vec![0i64; k + 1];
        c[k] = 1;
        SeriesTrunc::from_i64(&c, trunc)
    }

    /// `(1 + t)^k`.
    pub fn one_plus_t_pow(k: usize, trunc: usize) -> SeriesTrunc {
        let base = SeriesTrunc::from_i64(&[1, 1], trunc);
        (0..k).fold(SeriesTrunc::constant(1, trunc), |acc, _| acc.mul(&base))
    }

    pub fn trunc(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// Integer coefficients, when they all are integers.
    pub fn to_i64(&self) -> Option<Vec<i64>> {
        self.coeffs.iter().map(Rat::to_i64).collect()
    }

    /// Index of the first nonzero coefficient.
    pub fn order(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn truncate(&self, trunc: usize) -> SeriesTrunc {
        SeriesTrunc::new(self.coeffs.clone(), trunc.min(self.trunc()))
    }

    fn common(&self, other: &SeriesTrunc) -> usize {
        self.trunc().min(other.trunc())
    }

    pub fn add(&self, other: &SeriesTrunc) -> SeriesTrunc {
        let n = self.common(other);
        SeriesTrunc { coeffs: (0..=n).map(|i| &self.coeffs[i] + &other.coeffs[i]).collect() }
    }

    pub fn sub(&self, other: &SeriesTrunc) -> SeriesTrunc {
        let n = self.common(other);
        SeriesTrunc { coeffs: (0..=n).map(|i| &self.coeffs[i] - &other.coeffs[i]).collect() }
    }

    pub fn mul(&self, other: &SeriesTrunc) -> SeriesTrunc {
        let n = self.common(other);
        let mut out = vec![Rat::zero(); n + 1];
        for i in 0..=n {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=n - i {
                out[i + j] = &out[i + j] + &(&self.coeffs[i] * &other.coeffs[j]);
            }
        }
        SeriesTrunc { coeffs: out }
    }

    pub fn scale(&self, c: &Rat) -> SeriesTrunc {
        SeriesTrunc { coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    /// `self / other`; the divisor must be a unit.
    pub fn div(&self, other: &SeriesTrunc) -> Result<SeriesTrunc> {
        let n = self.common(other);
        let b0 = &other.coeffs[0];
        if b0.is_zero() {
            return Err(Error::Arithmetic("division by a series with zero constant term".into()));
        }
        let inv = b0.recip();
        let mut q: Vec<Rat> = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let mut acc = self.coeffs[k].clone();
            for (j, qj) in q.iter().enumerate() {
                acc = &acc - &(qj * &other.coeffs[k - j]);
            }
            q.push(&acc * &inv);
        }
        Ok(SeriesTrunc { coeffs: q })
    }
}

pub fn series_arith(a: &SeriesTrunc, b: &SeriesTrunc, op: SeriesOp) -> Result<SeriesTrunc> {
    Ok(match op {
        SeriesOp::Add => a.add(b),
        SeriesOp::Sub => a.sub(b),
        SeriesOp::Mul => a.mul(b),
        SeriesOp::Div => a.div(b)?,
    })
}

impl fmt::Debug for SeriesTrunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for SeriesTrunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(Rat::to_string).collect();
        write!(f, "[{}; O(t^{})]", parts.join(", "), self.coeffs.len())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn documented_examples() {
        let a = SeriesTrunc::from_i64(&[1, 1], 5);
        let b = SeriesTrunc::from_i64(&[1, -1], 5);
        assert_eq!(a.mul(&b), SeriesTrunc::from_i64(&[1, 0, -1], 5));
        let one = SeriesTrunc::constant(1, 5);
        let g = one.div(&SeriesTrunc::from_i64(&[1, -2], 5)).unwrap();
        assert_eq!(g.to_i64().unwrap(), vec![1, 2, 4, 8, 16, 32]);
        let h = SeriesTrunc::from_i64(&[2, -1], 5).div(&SeriesTrunc::from_i64(&[1, -2], 5)).unwrap();
        assert_eq!(h.to_i64().unwrap(), vec![2, 3, 6, 12, 24, 48]);
        let err = one.div(&SeriesTrunc::from_i64(&[0, 1], 5));
        assert!(matches!(err, Err(Error::Arithmetic(_))));
        assert_eq!(SeriesTrunc::one_plus_t_pow(2, 3).to_i64().unwrap(), vec![1, 2, 1, 0]);
        assert_eq!(a.add(&SeriesTrunc::constant(1, 2)).trunc(), 2);
    }

    fn arb() -> impl Strategy<Value = SeriesTrunc> {
        prop::collection::vec(-5i64..6, 1..8).prop_map(|c| SeriesTrunc::from_i64(&c, 7))
    }

    proptest! {
        #[test]
        fn division_inverts_multiplication(a in arb(), mut b in arb()) {
            if b.coeffs[0].is_zero() {
                b.coeffs[0] = Rat::one();
            }
            prop_assert_eq!(a.mul(&b).div(&b).unwrap(), a.clone());
            prop_assert_eq!(a.mul(&b), b.mul(&a));
        }
    }
}
