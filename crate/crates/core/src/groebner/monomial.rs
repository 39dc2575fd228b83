use super::IdealSpec;
use crate::error::{Error, Result};
use crate::poly::{Monomial, PolyRing};
use crate::rat::Rat;

/// A monomial ideal kept as its minimal generating set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn new(nvars: usize, gens: impl IntoIterator<Item = Monomial>) -> MonomialIdeal {
        let mut all: Vec<Monomial> = gens.into_iter().collect();
        all.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| b.0.cmp(&a.0)));
        all.dedup();
        let mut gens: Vec<Monomial> = Vec::new();
        for m in all {
            if !gens.iter().any(|g| g.divides(&m)) {
                gens.push(m);
            }
        }
        MonomialIdeal { nvars, gens }
    }

    pub fn from_ideal(ideal: &IdealSpec) -> Result<MonomialIdeal> {
        if !ideal.monomial {
            return Err(Error::Unsupported("ideal is not generated by monomials".into()));
        }
        let gens = ideal.generators().iter().map(|g| g.terms().next().unwrap().0.clone());
        Ok(MonomialIdeal::new(ideal.ring().nvars(), gens))
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(Monomial::is_one)
    }

    /// The colon ideal `(self : m)`.
    pub fn colon(&self, m: &Monomial) -> MonomialIdeal {
        let gens =
            self.gens.iter().map(|g| Monomial(g.0.iter().zip(&m.0).map(|(a, b)| a.saturating_sub(*b)).collect()));
        MonomialIdeal::new(self.nvars, gens)
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let gens = self.gens.iter().flat_map(|a| other.gens.iter().map(move |b| a.lcm(b)));
        MonomialIdeal::new(self.nvars, gens)
    }

    /// `(self : m)` for the maximal ideal `m` of all variables.
    pub fn colon_max(&self) -> MonomialIdeal {
        (0..self.nvars)
            .map(|i| self.colon(&Monomial::var(self.nvars, i)))
            .reduce(|a, b| a.intersect(&b))
            .unwrap_or_else(|| self.clone())
    }

    /// `(self : m^∞)`, removing the component supported at the origin.
    pub fn saturation(&self) -> MonomialIdeal {
        let mut cur = self.clone();
        loop {
            let next = cur.colon_max();
            if next == cur {
                return cur;
            }
            cur = next;
        }
    }

    pub fn contains_ideal(&self, other: &MonomialIdeal) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    pub fn radical(&self) -> MonomialIdeal {
        MonomialIdeal::new(self.nvars, self.gens.iter().map(Monomial::squarefree_part))
    }

    pub fn is_radical(&self) -> bool {
        self.gens.iter().all(|g| g.0.iter().all(|&e| e <= 1))
    }

    /// Minimal primes as sorted variable-index sets: the minimal vertex
    /// covers of the generator supports.
    pub fn minimal_primes(&self) -> Vec<Vec<usize>> {
        if self.is_unit() {
            return Vec::new();
        }
        let supports: Vec<u64> =
            self.gens.iter().map(|g| g.support().iter().fold(0u64, |acc, &i| acc | (1 << i))).collect();
        let used: Vec<usize> = (0..self.nvars).filter(|&i| supports.iter().any(|s| s & (1 << i) != 0)).collect();
        let mut covers: Vec<u64> = Vec::new();
        for size in 0..=used.len() {
            for subset in subsets_of_size(&used, size) {
                if covers.iter().any(|c| c & subset == *c) {
                    continue;
                }
                if supports.iter().all(|s| s & subset != 0) {
                    covers.push(subset);
                }
            }
        }
        let mut out: Vec<Vec<usize>> =
            covers.into_iter().map(|c| (0..self.nvars).filter(|i| c & (1 << i) != 0).collect()).collect();
        out.sort();
        out
    }

    /// Krull dimension of the quotient; `None` for the unit ideal.
    pub fn dimension(&self) -> Option<usize> {
        let primes = self.minimal_primes();
        primes.iter().map(|p| self.nvars - p.len()).max()
    }

    /// Monomial basis of the socle `(I : m) / I` of the quotient.
    pub fn socle(&self) -> Vec<Monomial> {
        if self.is_unit() {
            return Vec::new();
        }
        if self.nvars == 0 {
            return vec![Monomial(Vec::new())];
        }
        // a socle monomial never exceeds the largest generator exponent in any variable
        let caps: Vec<u32> = (0..self.nvars).map(|i| self.gens.iter().map(|g| g.0[i]).max().unwrap_or(0)).collect();
        if caps.contains(&0) {
            return Vec::new();
        }
        let mut out = Vec::new();
        let mut cur = vec![0u32; self.nvars];
        loop {
            let u = Monomial(cur.clone());
            if !self.contains(&u) && (0..self.nvars).all(|i| self.contains(&u.mul(&Monomial::var(self.nvars, i)))) {
                out.push(u);
            }
            let mut i = 0;
            loop {
                if i == self.nvars {
                    out.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| b.0.cmp(&a.0)));
                    return out;
                }
                if cur[i] < caps[i] {
                    cur[i] += 1;
                    break;
                }
                cur[i] = 0;
                i += 1;
            }
        }
    }

    pub fn to_ideal(&self, ring: &PolyRing) -> Result<IdealSpec> {
        if ring.nvars() != self.nvars {
            return Err(Error::Structural("ring has the wrong number of variables".into()));
        }
        IdealSpec::new(ring, self.gens.iter().map(|g| ring.term(Rat::one(), g.clone())).collect())
    }
}

fn subsets_of_size(items: &[usize], k: usize) -> Vec<u64> {
    let mut out = Vec::new();
    fn rec(items: &[usize], k: usize, start: usize, acc: u64, out: &mut Vec<u64>) {
        if k == 0 {
            out.push(acc);
            return;
        }
        for j in start..items.len() {
            if items.len() - j < k {
                break;
            }
            rec(items, k - 1, j + 1, acc | (1 << items[j]), out);
        }
    }
    rec(items, k, 0, 0, &mut out);
    out
}

pub fn monomial_radical(ideal: &IdealSpec) -> Result<IdealSpec> {
    MonomialIdeal::from_ideal(ideal)?.radical().to_ideal(ideal.ring())
}

/// Minimal primes of a monomial ideal, as sets of variable names.
pub fn monomial_minimal_primes(ideal: &IdealSpec) -> Result<Vec<Vec<String>>> {
    let vars = &ideal.ring().vars;
    Ok(MonomialIdeal::from_ideal(ideal)?
        .minimal_primes()
        .into_iter()
        .map(|p| p.into_iter().map(|i| vars[i].clone()).collect())
        .collect())
}

/// Krull dimension of `ring / ideal` for a monomial ideal.
pub fn krull_dimension(ideal: &IdealSpec) -> Result<usize> {
    MonomialIdeal::from_ideal(ideal)?
        .dimension()
        .ok_or_else(|| Error::Unsupported("the unit ideal has no dimension".into()))
}

pub fn monomial_socle(ideal: &IdealSpec) -> Result<Vec<Monomial>> {
    Ok(MonomialIdeal::from_ideal(ideal)?.socle())
}
