use super::buchberger::buchberger;
use super::monomial::MonomialIdeal;
use super::IdealSpec;
use crate::error::{Error, Result};
use crate::poly::{Monomial, MonomialOrder};

/// Hilbert series of a standard-graded quotient, `Q(t) / (1 - t)^dim`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertSeries {
    /// `Q(t)` with `Q(1) != 0` (or the zero polynomial for the unit ideal).
    pub numerator: Vec<i64>,
    pub dim: usize,
}

fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_sub(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trim(out)
}

fn trim(mut v: Vec<i64>) -> Vec<i64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn one_minus_t_pow(d: u32) -> Vec<i64> {
    let mut v = vec![0i64; d as usize + 1];
    v[0] += 1;
    v[d as usize] -= 1;
    trim(v)
}

/// K-polynomial: the numerator of the series over `(1 - t)^nvars`.
fn k_polynomial(ideal: &MonomialIdeal) -> Vec<i64> {
    let gens = ideal.gens();
    if gens.is_empty() {
        return vec![1];
    }
    if gens.iter().any(Monomial::is_one) {
        return Vec::new();
    }
    // pairwise coprime generators: a complete intersection
    let coprime = gens.iter().enumerate().all(|(i, a)| gens[i + 1..].iter().all(|b| a.coprime(b)));
    if coprime {
        return gens.iter().fold(vec![1], |acc, g| poly_mul(&acc, &one_minus_t_pow(g.degree())));
    }
    // K(J + (m)) = K(J) - t^deg(m) K(J : m)
    let (last, rest) = gens.split_last().unwrap();
    let j = MonomialIdeal::new(ideal.nvars(), rest.iter().cloned());
    let colon = j.colon(last);
    let mut shifted = vec![0i64; last.degree() as usize];
    shifted.extend(k_polynomial(&colon));
    poly_sub(&k_polynomial(&j), &shifted)
}

impl HilbertSeries {
    /// Series of `k[x_1..x_n] / (gens)` for monomial generators.
    pub fn of_monomials(nvars: usize, gens: &[Monomial]) -> HilbertSeries {
        let ideal = MonomialIdeal::new(nvars, gens.iter().cloned());
        let mut q = k_polynomial(&ideal);
        let mut dim = nvars;
        if q.is_empty() {
            return HilbertSeries { numerator: q, dim: 0 };
        }
        // divide by (1 - t) while Q(1) = 0
        while dim > 0 && q.iter().sum::<i64>() == 0 {
            let mut out = vec![0i64; q.len() - 1];
            let mut acc = 0i64;
            for (i, c) in q.iter().take(q.len() - 1).enumerate() {
                acc += c;
                out[i] = acc;
            }
            q = trim(out);
            dim -= 1;
        }
        HilbertSeries { numerator: q, dim }
    }

    /// Series of a homogeneous ideal, read off its grevlex lead ideal.
    pub fn of_ideal(ideal: &IdealSpec) -> Result<HilbertSeries> {
        if !ideal.homogeneous {
            return Err(Error::Unsupported("Hilbert functions need a homogeneous ideal".into()));
        }
        let gb = buchberger(ideal, &MonomialOrder::grevlex(ideal.ring()))?;
        Ok(HilbertSeries::of_monomials(ideal.ring().nvars(), gb.leads()))
    }

    /// The multiplicity `Q(1)`.
    pub fn multiplicity(&self) -> i64 {
        self.numerator.iter().sum()
    }

    /// `dim_k R_n`.
    pub fn coefficient(&self, n: usize) -> i64 {
        // coefficient of t^n in Q(t) / (1 - t)^dim
        let mut c: Vec<i64> = (0..=n).map(|i| self.numerator.get(i).copied().unwrap_or(0)).collect();
        for _ in 0..self.dim {
            for i in 1..c.len() {
                c[i] += c[i - 1];
            }
        }
        c[n]
    }

    /// First degree from which `dim_k R_n` agrees with the Hilbert polynomial.
    pub fn regularity_index(&self) -> usize {
        (self.numerator.len() as i64 - self.dim as i64).max(0) as usize
    }

    /// Cumulative lengths `H[n] = dim_k R / m^(n+1)` for `n = 0..=n_max`.
    pub fn cumulative(&self, n_max: usize) -> Vec<u64> {
        let mut acc = 0i64;
        (0..=n_max)
            .map(|n| {
                acc += self.coefficient(n);
                acc as u64
            })
            .collect()
    }
}

/// `H[n] = length(ring / (I + m^(n+1)))` for a homogeneous ideal.
pub fn hilbert_function(ideal: &IdealSpec, n_max: usize) -> Result<Vec<u64>> {
    Ok(HilbertSeries::of_ideal(ideal)?.cumulative(n_max))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use crate::groebner::buchberger::monomials_of_degree;
    use crate::poly::PolyRing;
    use proptest::prelude::*;

    fn ideal(vars: &[&str], gens: &[&str]) -> IdealSpec {
        let r = PolyRing::new(vars, FieldSpec::Rationals).unwrap();
        IdealSpec::parse(&r, gens).unwrap()
    }

    fn brute(nvars: usize, gens: &[Monomial], n_max: u32) -> Vec<u64> {
        let mut acc = 0;
        (0..=n_max)
            .map(|d| {
                acc +=
                    monomials_of_degree(nvars, d).iter().filter(|m| !gens.iter().any(|g| g.divides(m))).count() as u64;
                acc
            })
            .collect()
    }

    #[test]
    fn node_grows_linearly() {
        let i = ideal(&["x", "z"], &["x*z"]);
        let h = hilbert_function(&i, 6).unwrap();
        assert_eq!(h, (0..=6).map(|n| 2 * n + 1).collect::<Vec<u64>>());
        assert_eq!(h, brute(2, &[Monomial(vec![1, 1])], 6));
        let s = HilbertSeries::of_ideal(&i).unwrap();
        assert_eq!((s.dim, s.multiplicity()), (1, 2));
    }

    #[test]
    fn square_of_maximal_ideal() {
        let i = ideal(&["x", "y"], &["x^2", "x*y", "y^2"]);
        assert_eq!(hilbert_function(&i, 4).unwrap(), vec![1, 3, 3, 3, 3]);
        let s = HilbertSeries::of_ideal(&i).unwrap();
        assert_eq!((s.dim, s.multiplicity()), (0, 3));
    }

    #[test]
    fn glued_gorenstein_quadrics_have_multiplicity_thirteen() {
        let vars = ["X1", "X2", "X3", "X4", "X5", "Y", "Z"];
        let gens = [
            "2*X1*X3 + X2*X3",
            "X1*X4 + X2*X4",
            "X3^2 + 2*X1*X5 - X2*X5",
            "X4^2 + X1*X5 - X2*X5",
            "X1^2",
            "X2^2",
            "X3*X4",
            "X3*X5",
            "X4*X5",
            "X5^2",
            "Y*Z",
            "X1*Z",
            "X2*Z",
            "X3*Z",
            "X4*Z",
            "X5*Z",
        ];
        let i = ideal(&vars, &gens);
        let s = HilbertSeries::of_ideal(&i).unwrap();
        assert_eq!(s.dim, 1);
        assert_eq!(s.multiplicity(), 13);
        assert_eq!(s.numerator, vec![1, 6, 5, 1]);
        let h = hilbert_function(&i, 12).unwrap();
        let diffs: Vec<u64> = (1..h.len()).map(|n| h[n] - h[n - 1]).collect();
        assert_eq!(&diffs[..4], &[7, 12, 13, 13]);
        assert!(diffs[2..].iter().all(|&d| d == 13));
        assert_eq!(s.regularity_index(), 3);
    }

    #[test]
    fn rejects_inhomogeneous() {
        let i = ideal(&["x", "y"], &["x^2 - y^3"]);
        assert!(matches!(hilbert_function(&i, 3), Err(Error::Unsupported(_))));
    }

    #[test]
    fn unit_ideal_and_empty() {
        let s = HilbertSeries::of_monomials(2, &[Monomial(vec![0, 0])]);
        assert_eq!(s.cumulative(3), vec![0, 0, 0, 0]);
        let f = HilbertSeries::of_monomials(0, &[]);
        assert_eq!(f.cumulative(2), vec![1, 1, 1]);
    }

    fn arb_gens() -> impl Strategy<Value = (usize, Vec<Monomial>)> {
        (1usize..=4).prop_flat_map(|n| {
            (Just(n), prop::collection::vec(prop::collection::vec(0u32..4, n).prop_map(Monomial), 0..6))
        })
    }

    proptest! {
        #[test]
        fn agrees_with_enumeration((n, gens) in arb_gens()) {
            let s = HilbertSeries::of_monomials(n, &gens);
            prop_assert_eq!(s.cumulative(8), brute(n, &gens, 8));
            // past the regularity index the first differences follow a polynomial of degree dim - 1
            if s.dim == 1 {
                let r = s.regularity_index();
                prop_assert_eq!(s.coefficient(r + 5), s.multiplicity());
            }
        }
    }
}
