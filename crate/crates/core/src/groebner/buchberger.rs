use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};

use super::IdealSpec;
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::poly::{Monomial, MonomialOrder, Poly, PolyRing};
use crate::rat::Rat;

#[derive(Debug, Clone)]
pub struct BuchbergerConfig {
    /// Ceiling on S-pairs reduced before giving up.
    pub max_pairs: usize,
}

impl Default for BuchbergerConfig {
    fn default() -> Self {
        BuchbergerConfig { max_pairs: 200_000 }
    }
}

/// Reduced Gröbner basis of an ideal under a fixed order.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    basis: Vec<Poly>,
    leads: Vec<Monomial>,
    order: MonomialOrder,
    source: IdealSpec,
    internal: Vec<SortedPoly>,
}

/// Key whose lexicographic order is the monomial order.
type Key = Vec<i64>;

fn key(ord: &MonomialOrder, m: &Monomial) -> Key {
    // grevlex: degree, then reversed negated exponents along the variable order
    let mut k = Vec::with_capacity(m.nvars() + 1);
    k.push(m.degree() as i64);
    for &i in ord.perm().iter().rev() {
        k.push(-(m.0[i] as i64));
    }
    k
}

/// Polynomial as terms sorted by the order, largest first.
#[derive(Clone, Debug)]
struct SortedPoly {
    terms: Vec<(Monomial, Rat)>,
}

impl SortedPoly {
    fn lead(&self) -> &Monomial {
        &self.terms[0].0
    }

    fn lc(&self) -> &Rat {
        &self.terms[0].1
    }
}

struct Reducer<'a> {
    field: &'a FieldSpec,
    ord: &'a MonomialOrder,
}

impl Reducer<'_> {
    fn from_map(&self, work: BTreeMap<Key, (Monomial, Rat)>) -> SortedPoly {
        SortedPoly { terms: work.into_values().rev().collect() }
    }

    fn to_map(&self, p: &SortedPoly) -> BTreeMap<Key, (Monomial, Rat)> {
        p.terms.iter().map(|(m, c)| (key(self.ord, m), (m.clone(), c.clone()))).collect()
    }

    fn add_into(&self, work: &mut BTreeMap<Key, (Monomial, Rat)>, m: Monomial, c: Rat) {
        let k = key(self.ord, &m);
        match work.get_mut(&k) {
            Some(entry) => {
                let s = self.field.add(&entry.1, &c);
                if s.is_zero() {
                    work.remove(&k);
                } else {
                    entry.1 = s;
                }
            }
            None => {
                if !c.is_zero() {
                    work.insert(k, (m, c));
                }
            }
        }
    }

    /// Full reduction of `f` modulo `basis`.
    fn reduce(&self, f: &SortedPoly, basis: &[SortedPoly]) -> SortedPoly {
        let mut work = self.to_map(f);
        let mut rem: Vec<(Monomial, Rat)> = Vec::new();
        while let Some((_, (m, c))) = work.pop_last() {
            match basis.iter().find(|g| g.lead().divides(&m)) {
                Some(g) => {
                    let q = m.div(g.lead()).unwrap();
                    let factor = self.field.div(&c, g.lc());
                    for (gm, gc) in &g.terms[1..] {
                        self.add_into(&mut work, gm.mul(&q), self.field.neg(&self.field.mul(&factor, gc)));
                    }
                }
                None => rem.push((m, c)),
            }
        }
        SortedPoly { terms: rem }
    }

    fn spoly(&self, f: &SortedPoly, g: &SortedPoly) -> SortedPoly {
        let l = f.lead().lcm(g.lead());
        let qf = l.div(f.lead()).unwrap();
        let qg = l.div(g.lead()).unwrap();
        let mut work = BTreeMap::new();
        let cf = self.field.inv(f.lc());
        let cg = self.field.neg(&self.field.inv(g.lc()));
        for (m, c) in &f.terms[1..] {
            self.add_into(&mut work, m.mul(&qf), self.field.mul(c, &cf));
        }
        for (m, c) in &g.terms[1..] {
            self.add_into(&mut work, m.mul(&qg), self.field.mul(c, &cg));
        }
        self.from_map(work)
    }

    fn monic(&self, p: SortedPoly) -> SortedPoly {
        let inv = self.field.inv(p.lc());
        SortedPoly { terms: p.terms.into_iter().map(|(m, c)| (m, self.field.mul(&c, &inv))).collect() }
    }
}

pub fn buchberger(ideal: &IdealSpec, ord: &MonomialOrder) -> Result<GroebnerBasis> {
    buchberger_with(ideal, ord, &BuchbergerConfig::default())
}

/// Buchberger's algorithm with the normal selection strategy and the
/// coprime-lead and chain criteria.
pub fn buchberger_with(ideal: &IdealSpec, ord: &MonomialOrder, cfg: &BuchbergerConfig) -> Result<GroebnerBasis> {
    let ring = ideal.ring();
    if ord.variable_order.len() != ring.nvars() || ord.variable_order.iter().any(|v| ring.var_index(v).is_none()) {
        return Err(Error::Structural("monomial order does not match the ring".into()));
    }
    let red = Reducer { field: &ring.field, ord };
    let mut basis: Vec<SortedPoly> = Vec::new();
    for g in ideal.generators() {
        let sp = SortedPoly { terms: g.sorted_terms(ord) };
        let r = red.reduce(&sp, &basis);
        if !r.terms.is_empty() {
            basis.push(red.monic(r));
        }
    }
    // pairs keyed by (lcm degree, lcm key, i, j) so the smallest is popped first
    let mut pairs: BTreeSet<(u32, Key, usize, usize)> = BTreeSet::new();
    let mut live: BTreeSet<(usize, usize)> = BTreeSet::new();
    let push_pair = |pairs: &mut BTreeSet<(u32, Key, usize, usize)>,
                     live: &mut BTreeSet<(usize, usize)>,
                     basis: &[SortedPoly],
                     i: usize,
                     j: usize| {
        let l = basis[i].lead().lcm(basis[j].lead());
        pairs.insert((l.degree(), key(ord, &l), i, j));
        live.insert((i, j));
    };
    for j in 0..basis.len() {
        for i in 0..j {
            push_pair(&mut pairs, &mut live, &basis, i, j);
        }
    }
    let mut treated = 0usize;
    while let Some(entry) = pairs.pop_first() {
        let (_, _, i, j) = entry;
        live.remove(&(i, j));
        let (li, lj) = (basis[i].lead().clone(), basis[j].lead().clone());
        if li.coprime(&lj) {
            continue;
        }
        let l = li.lcm(&lj);
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].lead().divides(&l)
                && !live.contains(&(i.min(k), i.max(k)))
                && !live.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }
        treated += 1;
        if treated > cfg.max_pairs {
            return Err(Error::LimitExceeded(format!("more than {} S-pairs", cfg.max_pairs)));
        }
        let s = red.spoly(&basis[i], &basis[j]);
        let r = red.reduce(&s, &basis);
        if r.terms.is_empty() {
            continue;
        }
        let r = red.monic(r);
        basis.push(r);
        let n = basis.len() - 1;
        for k in 0..n {
            push_pair(&mut pairs, &mut live, &basis, k, n);
        }
    }
    Ok(finish(ideal, ord, &red, basis))
}

fn finish(ideal: &IdealSpec, ord: &MonomialOrder, red: &Reducer<'_>, basis: Vec<SortedPoly>) -> GroebnerBasis {
    // drop elements whose lead is divisible by another lead
    let mut minimal: Vec<SortedPoly> = Vec::new();
    for (i, g) in basis.iter().enumerate() {
        let redundant = basis
            .iter()
            .enumerate()
            .any(|(k, h)| k != i && h.lead().divides(g.lead()) && (h.lead() != g.lead() || k < i));
        if !redundant {
            minimal.push(g.clone());
        }
    }
    minimal.sort_by(|a, b| ord.cmp(a.lead(), b.lead()));
    let mut reduced = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<SortedPoly> =
            minimal.iter().enumerate().filter(|(k, _)| *k != i).map(|(_, g)| g.clone()).collect();
        let head = SortedPoly { terms: vec![minimal[i].terms[0].clone()] };
        let tail = SortedPoly { terms: minimal[i].terms[1..].to_vec() };
        let tail = red.reduce(&tail, &others);
        let mut terms = head.terms;
        terms.extend(tail.terms);
        reduced.push(SortedPoly { terms });
    }
    let ring = ideal.ring();
    let basis_polys: Vec<Poly> = reduced.iter().map(|g| Poly::from_terms(ring, g.terms.iter().cloned())).collect();
    GroebnerBasis {
        leads: reduced.iter().map(|g| g.lead().clone()).collect(),
        basis: basis_polys,
        order: ord.clone(),
        source: ideal.clone(),
        internal: reduced,
    }
}

impl GroebnerBasis {
    pub fn basis(&self) -> &[Poly] {
        &self.basis
    }

    pub fn leads(&self) -> &[Monomial] {
        &self.leads
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn source(&self) -> &IdealSpec {
        &self.source
    }

    pub fn ring(&self) -> &PolyRing {
        self.source.ring()
    }

    /// The unique remainder of `f` modulo the basis.
    pub fn normal_form(&self, f: &Poly) -> Result<Poly> {
        f.check_same_ring(&self.ring().zero())?;
        let red = Reducer { field: &self.ring().field, ord: &self.order };
        let sp = SortedPoly { terms: f.sorted_terms(&self.order) };
        let r = red.reduce(&sp, &self.internal);
        Ok(Poly::from_terms(self.ring(), r.terms))
    }

    pub fn contains(&self, f: &Poly) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// Normal form of a monomial, as `(monomial, coefficient)` pairs.
    pub fn reduce_monomial(&self, m: &Monomial) -> Vec<(Monomial, Rat)> {
        let red = Reducer { field: &self.ring().field, ord: &self.order };
        let sp = SortedPoly { terms: vec![(m.clone(), Rat::one())] };
        red.reduce(&sp, &self.internal).terms
    }

    pub fn is_standard(&self, m: &Monomial) -> bool {
        !self.leads.iter().any(|l| l.divides(m))
    }

    /// The quotient is finite dimensional iff every variable has a pure
    /// power among the leading monomials.
    pub fn is_cofinite(&self) -> bool {
        let n = self.ring().nvars();
        (0..n).all(|i| self.leads.iter().any(|l| l.pure_power() == Some(i)))
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.leads.iter().any(Monomial::is_one)
    }

    /// Standard monomials of degree at most `cap`, by degree then order.
    pub fn standard_monomials(&self, cap: u32) -> Vec<Monomial> {
        let n = self.ring().nvars();
        let mut out = Vec::new();
        for d in 0..=cap {
            let mut layer: Vec<Monomial> =
                monomials_of_degree(n, d).into_iter().filter(|m| self.is_standard(m)).collect();
            layer.sort_by(|a, b| self.order.cmp(a, b));
            out.extend(layer);
        }
        out
    }

    /// The full standard-monomial basis of a cofinite ideal.
    ///
    /// `cap` bounds the search; running past it while monomials keep
    /// appearing is a not-cofinite error.
    pub fn quotient_basis(&self, cap: u32) -> Result<Vec<Monomial>> {
        if !self.is_cofinite() {
            return Err(Error::NotCofinite(format!(
                "some variable has no pure power among the leads {:?}",
                self.leads
            )));
        }
        // the largest standard monomial has degree below the sum of pure-power exponents
        let n = self.ring().nvars();
        let bound: u32 = (0..n)
            .map(|i| self.leads.iter().filter(|l| l.pure_power() == Some(i)).map(|l| l.0[i]).min().unwrap() - 1)
            .sum();
        let mut out = Vec::new();
        for d in 0..=bound {
            let mut layer: Vec<Monomial> =
                monomials_of_degree(n, d).into_iter().filter(|m| self.is_standard(m)).collect();
            if layer.is_empty() {
                break;
            }
            if d > cap {
                return Err(Error::NotCofinite(format!("standard monomials persist past degree {cap}")));
            }
            layer.sort_by(|a, b| self.order.cmp(a, b));
            out.extend(layer);
        }
        Ok(out)
    }
}

/// All exponent vectors of total degree `d` in `n` variables.
pub(crate) fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; n];
    fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        let n = cur.len();
        if n == 0 {
            if left == 0 {
                out.push(Monomial(Vec::new()));
            }
            return;
        }
        if i == n - 1 {
            cur[i] = left;
            out.push(Monomial(cur.clone()));
            cur[i] = 0;
            return;
        }
        for e in (0..=left).rev() {
            cur[i] = e;
            rec(i + 1, left - e, cur, out);
        }
        cur[i] = 0;
    }
    rec(0, d, &mut cur, &mut out);
    out
}

impl PartialEq for GroebnerBasis {
    fn eq(&self, other: &Self) -> bool {
        self.basis == other.basis && self.order == other.order
    }
}

#[allow(dead_code)]
fn cmp_leads(ord: &MonomialOrder, a: &Poly, b: &Poly) -> Ordering {
    ord.cmp(a.lead(ord).unwrap().0, b.lead(ord).unwrap().0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use proptest::prelude::*;

    fn ring(vars: &[&str]) -> PolyRing {
        PolyRing::new(vars, FieldSpec::Rationals).unwrap()
    }

    fn js_ideal(alpha: &str) -> IdealSpec {
        let r = ring(&["X1", "X2", "X3", "X4", "X5"]);
        let a = alpha;
        IdealSpec::parse(
            &r,
            &[
                format!("{a}*X1*X3 + X2*X3"),
                "X1*X4 + X2*X4".into(),
                format!("X3^2 + {a}*X1*X5 - X2*X5"),
                "X4^2 + X1*X5 - X2*X5".into(),
                "X1^2".into(),
                "X2^2".into(),
                "X3*X4".into(),
                "X3*X5".into(),
                "X4*X5".into(),
                "X5^2".into(),
            ],
        )
        .unwrap()
    }

    #[test]
    fn monomial_ideal_is_its_own_basis() {
        let r = ring(&["x", "y"]);
        let i = IdealSpec::parse(&r, &["x^2", "x*y", "y^2"]).unwrap();
        let g = buchberger(&i, &MonomialOrder::grevlex(&r)).unwrap();
        let mut want: Vec<Poly> = i.generators().to_vec();
        want.sort_by(|a, b| cmp_leads(g.order(), a, b));
        assert_eq!(g.basis(), &want[..]);
        assert!(g.contains(&r.parse("x^2").unwrap()).unwrap());
        let p = r.parse("x + y").unwrap();
        assert_eq!(g.normal_form(&p).unwrap(), p);
    }

    #[test]
    fn principal_ideal() {
        let r = ring(&["x", "z"]);
        let i = IdealSpec::parse(&r, &["x*z"]).unwrap();
        let g = buchberger(&i, &MonomialOrder::grevlex(&r)).unwrap();
        assert_eq!(g.basis(), &[r.parse("x*z").unwrap()]);
        assert!(!g.is_cofinite());
    }

    #[test]
    fn gorenstein_quadrics_have_length_twelve() {
        let i = js_ideal("2");
        let g = buchberger(&i, &MonomialOrder::grevlex(i.ring())).unwrap();
        assert!(g.is_cofinite());
        let basis = g.quotient_basis(20).unwrap();
        assert_eq!(basis.len(), 12);
        // independent oracle (sympy, grevlex): the ten generators already form a basis
        assert_eq!(g.basis().len(), 10);
        let per_degree: Vec<usize> = (0..4).map(|d| basis.iter().filter(|m| m.degree() == d).count()).collect();
        assert_eq!(per_degree, vec![1, 5, 5, 1]);
    }

    #[test]
    fn normal_form_of_x3_squared() {
        let i = js_ideal("2");
        let r = i.ring().clone();
        let g = buchberger(&i, &MonomialOrder::grevlex(&r)).unwrap();
        let nf = g.normal_form(&r.parse("X3^2").unwrap()).unwrap();
        assert_eq!(nf, r.parse("-2*X1*X5 + X2*X5").unwrap());
        // adding the generator back recovers X3^2
        let gen = r.parse("X3^2 + 2*X1*X5 - X2*X5").unwrap();
        assert_eq!(nf.try_add(&gen).unwrap(), r.parse("X3^2").unwrap());
    }

    #[test]
    fn not_cofinite_is_reported() {
        let r = ring(&["x", "y"]);
        let i = IdealSpec::parse(&r, &["x^2"]).unwrap();
        let g = buchberger(&i, &MonomialOrder::grevlex(&r)).unwrap();
        assert!(matches!(g.quotient_basis(10), Err(Error::NotCofinite(_))));
        assert_eq!(g.standard_monomials(2).len(), 5);
        let k = IdealSpec::parse(&ring(&["x"]), &["x^2"]).unwrap();
        let gk = buchberger(&k, &MonomialOrder::grevlex(k.ring())).unwrap();
        assert_eq!(gk.quotient_basis(10).unwrap(), vec![Monomial(vec![0]), Monomial(vec![1])]);
    }

    #[test]
    fn pair_ceiling() {
        let i = js_ideal("2");
        let cfg = BuchbergerConfig { max_pairs: 0 };
        let r = buchberger_with(
            &i.with_generators([i.ring().parse("X1*X2 + X3*X1").unwrap()]).unwrap(),
            &MonomialOrder::grevlex(i.ring()),
            &cfg,
        );
        assert!(matches!(r, Err(Error::LimitExceeded(_))));
    }

    #[test]
    fn deterministic_output() {
        let i = js_ideal("2");
        let ord = MonomialOrder::grevlex(i.ring());
        let a = buchberger(&i, &ord).unwrap();
        let b = buchberger(&i, &ord).unwrap();
        assert_eq!(format!("{:?}", a.basis()), format!("{:?}", b.basis()));
    }

    #[test]
    fn twisted_cubic_has_three_quadrics() {
        let r = ring(&["a", "b", "c", "d"]);
        let i = IdealSpec::parse(&r, &["a*c - b^2", "b*d - c^2", "a*d - b*c"]).unwrap();
        let g = buchberger(&i, &MonomialOrder::grevlex(&r)).unwrap();
        assert_eq!(g.basis().len(), 3);
        let i2 = IdealSpec::parse(&r, &["a^2 - b*c", "b^2 - c*d"]).unwrap();
        let g2 = buchberger(&i2, &MonomialOrder::grevlex(&r)).unwrap();
        for b in g2.basis() {
            assert!(g2.contains(b).unwrap());
        }
        for f in i2.generators() {
            assert!(g2.contains(f).unwrap());
        }
    }

    fn arb_ideal() -> impl Strategy<Value = IdealSpec> {
        let r = PolyRing::new(&["x", "y", "z"], FieldSpec::prime(101).unwrap()).unwrap();
        prop::collection::vec(prop::collection::vec(((0u32..3, 0u32..3, 0u32..2), 1i64..100), 1..3), 1..4).prop_map(
            move |gens| {
                let polys = gens
                    .into_iter()
                    .map(|ts| {
                        Poly::from_terms(
                            &r,
                            ts.into_iter().map(|((a, b, c), k)| (Monomial(vec![a, b, c]), Rat::from_i64(k))),
                        )
                    })
                    .collect();
                IdealSpec::new(&r, polys).unwrap()
            },
        )
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]
        #[test]
        fn spolys_reduce_to_zero_and_absorption(i in arb_ideal(), h in arb_ideal()) {
            let ord = MonomialOrder::grevlex(i.ring());
            let g = buchberger(&i, &ord).unwrap();
            let red = Reducer { field: &i.ring().field, ord: &ord };
            for a in 0..g.internal.len() {
                for b in 0..a {
                    let s = red.spoly(&g.internal[a], &g.internal[b]);
                    prop_assert!(red.reduce(&s, &g.internal).terms.is_empty());
                }
                prop_assert!(g.internal[a].lc().is_one());
                for b in 0..g.internal.len() {
                    if a != b {
                        for (m, _) in &g.internal[b].terms {
                            prop_assert!(!g.internal[a].lead().divides(m));
                        }
                    }
                }
            }
            // normal_form(f*q + h) = normal_form(h) for generators f
            let hp = h.generators()[0].clone();
            for f in i.generators() {
                let q = h.generators().last().unwrap();
                let lhs = g.normal_form(&f.try_mul(q).unwrap().try_add(&hp).unwrap()).unwrap();
                prop_assert_eq!(lhs, g.normal_form(&hp).unwrap());
            }
        }
    }
}
