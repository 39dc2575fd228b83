//! Monomials, the graded reverse lexicographic order, and sparse polynomials.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::rat::Rat;

/// Exponent vector, one entry per ring variable.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Monomial {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Monomial {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        Some(Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect()))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// The variable index if this is `x_i^e` with `e >= 1`.
    pub fn pure_power(&self) -> Option<usize> {
        let mut found = None;
        for (i, &e) in self.0.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some(i);
            }
        }
        found
    }

    pub fn squarefree_part(&self) -> Monomial {
        Monomial(self.0.iter().map(|&e| e.min(1)).collect())
    }

    pub fn support(&self) -> Vec<usize> {
        self.0.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i).collect()
    }

    pub fn fmt_with(&self, vars: &[String]) -> String {
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| if e == 1 { vars[i].clone() } else { format!("{}^{}", vars[i], e) })
            .collect();
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// Graded reverse lexicographic order with an explicit variable order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialOrder {
    pub kind: String,
    pub variable_order: Vec<String>,
    /// Position in the order -> ring variable index.
    perm: Vec<usize>,
}

impl MonomialOrder {
    /// Grevlex with the ring's own variable order (`x_1 > x_2 > ...`).
    pub fn grevlex(ring: &PolyRing) -> MonomialOrder {
        MonomialOrder { kind: "grevlex".into(), variable_order: ring.vars.to_vec(), perm: (0..ring.nvars()).collect() }
    }

    pub fn grevlex_with(ring: &PolyRing, order: &[&str]) -> Result<MonomialOrder> {
        if order.len() != ring.nvars() {
            return Err(Error::Structural("variable order must list every variable once".into()));
        }
        let mut perm = Vec::with_capacity(order.len());
        for name in order {
            let i = ring.var_index(name).ok_or_else(|| Error::Structural(format!("unknown variable {name}")))?;
            if perm.contains(&i) {
                return Err(Error::Structural(format!("variable {name} repeated")));
            }
            perm.push(i);
        }
        Ok(MonomialOrder {
            kind: "grevlex".into(),
            variable_order: order.iter().map(|s| s.to_string()).collect(),
            perm,
        })
    }

    /// Ring variable indices from largest to smallest.
    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (da, db) = (a.degree(), b.degree());
        if da != db {
            return da.cmp(&db);
        }
        for &i in self.perm.iter().rev() {
            match a.0[i].cmp(&b.0[i]) {
                Ordering::Equal => continue,
                // smaller exponent in the last differing variable wins
                o => return o.reverse(),
            }
        }
        Ordering::Equal
    }
}

/// A polynomial ring: variable names plus coefficient field.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PolyRing {
    pub vars: Arc<[String]>,
    pub field: FieldSpec,
}

impl PolyRing {
    pub fn new<S: AsRef<str>>(vars: &[S], field: FieldSpec) -> Result<PolyRing> {
        let vars: Vec<String> = vars.iter().map(|v| v.as_ref().to_string()).collect();
        for (i, v) in vars.iter().enumerate() {
            if !is_identifier(v) {
                return Err(Error::Structural(format!("bad variable name `{v}`")));
            }
            if vars[..i].contains(v) {
                return Err(Error::Structural(format!("variable {v} repeated")));
            }
        }
        Ok(PolyRing { vars: vars.into(), field })
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn zero(&self) -> Poly {
        Poly { ring: self.clone(), terms: BTreeMap::new() }
    }

    pub fn one(&self) -> Poly {
        self.constant(Rat::one())
    }

    pub fn constant(&self, c: Rat) -> Poly {
        self.term(c, Monomial::one(self.nvars()))
    }

    pub fn var(&self, i: usize) -> Poly {
        self.term(Rat::one(), Monomial::var(self.nvars(), i))
    }

    pub fn var_named(&self, name: &str) -> Result<Poly> {
        let i = self.var_index(name).ok_or_else(|| Error::Structural(format!("unknown variable {name}")))?;
        Ok(self.var(i))
    }

    pub fn term(&self, c: Rat, m: Monomial) -> Poly {
        assert_eq!(m.nvars(), self.nvars());
        let mut terms = BTreeMap::new();
        let c = self.field.from_rat(&c).expect("coefficient not in field");
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { ring: self.clone(), terms }
    }

    /// The same variables over another field.
    pub fn with_field(&self, field: FieldSpec) -> PolyRing {
        PolyRing { vars: self.vars.clone(), field }
    }

    pub fn parse(&self, text: &str) -> Result<Poly> {
        crate::parse::parse_poly(self, text)
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Sparse polynomial; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    ring: PolyRing,
    terms: BTreeMap<Monomial, Rat>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Mul,
    /// Multiply by the constant polynomial on the right.
    ScalarMul,
}

/// One entry point for the three ring operations.
pub fn poly_arith(a: &Poly, b: &Poly, op: ArithOp) -> Result<Poly> {
    match op {
        ArithOp::Add => a.try_add(b),
        ArithOp::Mul => a.try_mul(b),
        ArithOp::ScalarMul => {
            a.check_same_ring(b)?;
            if b.terms.keys().any(|m| !m.is_one()) {
                return Err(Error::Structural("scalar-mul needs a constant right operand".into()));
            }
            Ok(a.scale(&b.constant_coeff()))
        }
    }
}

impl Poly {
    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn field(&self) -> &FieldSpec {
        &self.ring.field
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> Rat {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn constant_coeff(&self) -> Rat {
        self.coeff(&Monomial::one(self.ring.nvars()))
    }

    pub fn from_terms(ring: &PolyRing, terms: impl IntoIterator<Item = (Monomial, Rat)>) -> Poly {
        let mut p = ring.zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: Rat) {
        let f = &self.ring.field;
        let c = f.from_rat(&c).expect("coefficient not in field");
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(old) => {
                let s = f.add(old, &c);
                if s.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *old = s;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn check_same_ring(&self, other: &Poly) -> Result<()> {
        if self.ring.vars != other.ring.vars {
            return Err(Error::Structural(format!(
                "variable lists differ: {:?} vs {:?}",
                self.ring.vars, other.ring.vars
            )));
        }
        if self.ring.field != other.ring.field {
            return Err(Error::Structural(format!("fields differ: {} vs {}", self.ring.field, other.ring.field)));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Poly) -> Result<Poly> {
        self.check_same_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Poly) -> Result<Poly> {
        self.try_add(&other.neg())
    }

    pub fn try_mul(&self, other: &Poly) -> Result<Poly> {
        self.check_same_ring(other)?;
        let f = &self.ring.field;
        let mut out = self.ring.zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), f.mul(c1, c2));
            }
        }
        Ok(out)
    }

    pub fn neg(&self) -> Poly {
        let f = &self.ring.field;
        Poly { ring: self.ring.clone(), terms: self.terms.iter().map(|(m, c)| (m.clone(), f.neg(c))).collect() }
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        let f = &self.ring.field;
        let c = f.from_rat(c).expect("scalar not in field");
        if c.is_zero() {
            return self.ring.zero();
        }
        Poly { ring: self.ring.clone(), terms: self.terms.iter().map(|(m, a)| (m.clone(), f.mul(a, &c))).collect() }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Poly {
        Poly { ring: self.ring.clone(), terms: self.terms.iter().map(|(t, c)| (t.mul(m), c.clone())).collect() }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = self.ring.one();
        for _ in 0..e {
            acc = acc.try_mul(self).expect("same ring");
        }
        acc
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Leading term under `ord`.
    pub fn lead(&self, ord: &MonomialOrder) -> Option<(&Monomial, &Rat)> {
        self.terms.iter().max_by(|a, b| ord.cmp(a.0, b.0))
    }

    /// Order (least total degree of a term) and the order-maximal monomial.
    pub fn order_term(&self, ord: &MonomialOrder) -> Result<(u32, Monomial)> {
        let order = self.terms.keys().map(Monomial::degree).min().ok_or(Error::UndefinedOrder)?;
        let (lead, _) = self.lead(ord).expect("nonzero");
        Ok((order, lead.clone()))
    }

    /// Terms sorted by `ord`, largest first.
    pub fn sorted_terms(&self, ord: &MonomialOrder) -> Vec<(Monomial, Rat)> {
        let mut v: Vec<(Monomial, Rat)> = self.terms.iter().map(|(m, c)| (m.clone(), c.clone())).collect();
        v.sort_by(|a, b| ord.cmp(&b.0, &a.0));
        v
    }

    /// Moves the polynomial into a ring with more variables, by name.
    pub fn embed(&self, target: &PolyRing) -> Result<Poly> {
        if target.field != self.ring.field {
            return Err(Error::Structural("embedding changes the field".into()));
        }
        let map: Vec<usize> = self
            .ring
            .vars
            .iter()
            .map(|v| {
                target.var_index(v).ok_or_else(|| Error::Structural(format!("variable {v} missing in target ring")))
            })
            .collect::<Result<_>>()?;
        let mut out = target.zero();
        for (m, c) in &self.terms {
            let mut e = vec![0; target.nvars()];
            for (i, &x) in m.0.iter().enumerate() {
                e[map[i]] += x;
            }
            out.add_term(Monomial(e), c.clone());
        }
        Ok(out)
    }

    /// Retags the coefficient field without touching coefficients.
    pub fn with_field(&self, field: FieldSpec) -> Result<Poly> {
        let ring = self.ring.with_field(field);
        let mut out = ring.zero();
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    /// Substitutes polynomials for variables.
    pub fn substitute(&self, images: &[Poly], target: &PolyRing) -> Result<Poly> {
        if images.len() != self.ring.nvars() {
            return Err(Error::Structural("one image per variable required".into()));
        }
        let mut out = target.zero();
        for (m, c) in &self.terms {
            let mut t = target.constant(c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    t = t.try_mul(&images[i].pow(e))?;
                }
            }
            out = out.try_add(&t)?;
        }
        Ok(out)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let ord = MonomialOrder::grevlex(&self.ring);
        for (k, (m, c)) in self.sorted_terms(&ord).into_iter().enumerate() {
            let neg = c.is_negative();
            let a = if neg { -&c } else { c };
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            let mono = m.fmt_with(&self.ring.vars);
            match (a.is_one(), m.is_one()) {
                (_, true) => write!(f, "{a}")?,
                (true, false) => write!(f, "{mono}")?,
                (false, false) => write!(f, "{a}*{mono}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}
