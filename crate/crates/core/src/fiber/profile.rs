use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::artin::{quotient_algebra, ArtinAlgebra, ModRep};
use crate::error::{Error, Result};
use crate::groebner::{buchberger, HilbertSeries, IdealSpec, MonomialIdeal};
use crate::homalg::{betti_numbers_bounded, SeriesTrunc};
use crate::linalg::rank;
use crate::poly::{Monomial, MonomialOrder, Poly};
use crate::rat::Rat;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    Computed,
    Declared,
}

/// Flags a user may assert when they cannot be computed from a presentation.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeclaredFlags {
    pub analytically_unramified: Option<bool>,
    pub finite_cm_type: Option<bool>,
    pub regular: Option<bool>,
}

/// How far series are expanded and how large a free module may get.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SeriesBudget {
    pub trunc: usize,
    pub ceiling: usize,
}

impl Default for SeriesBudget {
    fn default() -> Self {
        SeriesBudget { trunc: 10, ceiling: 150_000 }
    }
}

/// A recognized plane curve `x^2 - y^n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PlaneCurveForm {
    pub x: String,
    pub y: String,
    pub n: u32,
}

/// Numerical invariants and flags of a local ring.
///
/// Series are known through their own truncation, which may be lower than
/// requested when a resolution hit the size ceiling. Series are absent when
/// no route computes them (non Cohen-Macaulay rings of positive dimension).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RingProfile {
    pub name: String,
    pub dim: usize,
    pub depth: usize,
    pub edim: usize,
    #[serde(rename = "type")]
    pub ring_type: usize,
    pub multiplicity: u64,
    pub length: Option<usize>,
    pub poincare_k: Option<SeriesTrunc>,
    pub bass: Option<SeriesTrunc>,
    pub regular: bool,
    pub cm: bool,
    pub gorenstein: bool,
    pub analytically_unramified: Option<bool>,
    pub finite_cm_type: Option<bool>,
    pub plane_curve: Option<PlaneCurveForm>,
    pub provenance: BTreeMap<String, Provenance>,
}

const CORE_FIELDS: [&str; 10] =
    ["dim", "depth", "edim", "type", "multiplicity", "regular", "cm", "gorenstein", "poincare_k", "bass"];

impl RingProfile {
    fn blank(name: &str) -> RingProfile {
        RingProfile {
            name: name.to_string(),
            dim: 0,
            depth: 0,
            edim: 0,
            ring_type: 1,
            multiplicity: 1,
            length: None,
            poincare_k: None,
            bass: None,
            regular: false,
            cm: false,
            gorenstein: false,
            analytically_unramified: None,
            finite_cm_type: None,
            plane_curve: None,
            provenance: BTreeMap::new(),
        }
    }

    fn mark(&mut self, keys: &[&str]) {
        for k in keys {
            self.provenance.insert(k.to_string(), Provenance::Computed);
        }
    }

    pub fn ecodepth(&self) -> usize {
        self.edim - self.depth
    }

    pub fn singular(&self) -> bool {
        !self.regular
    }

    pub fn hypersurface(&self) -> bool {
        self.ecodepth() <= 1
    }

    pub fn is_artinian(&self) -> bool {
        self.dim == 0
    }

    /// A regular local ring of dimension `dim`.
    pub fn regular(name: &str, dim: usize, trunc: usize) -> RingProfile {
        let mut p = RingProfile::blank(name);
        p.dim = dim;
        p.depth = dim;
        p.edim = dim;
        p.regular = true;
        p.cm = true;
        p.gorenstein = true;
        p.poincare_k = Some(SeriesTrunc::one_plus_t_pow(dim, trunc));
        p.bass = Some(SeriesTrunc::monomial(dim, trunc.max(dim)));
        if dim == 0 {
            p.length = Some(1);
        }
        p.analytically_unramified = Some(true);
        p.mark(&CORE_FIELDS);
        p.mark(&["analytically_unramified"]);
        p.derive_finite_cm_type();
        p
    }

    /// Invariants of an artinian algebra, with series from minimal resolutions
    /// of the residue field and of the dualizing module.
    pub fn from_artinian(name: &str, alg: &Arc<ArtinAlgebra>, budget: SeriesBudget) -> RingProfile {
        let inv = alg.local_invariants();
        let mut p = RingProfile::blank(name);
        p.edim = inv.edim;
        p.ring_type = inv.socle_dim;
        p.multiplicity = inv.length as u64;
        p.length = Some(inv.length);
        p.regular = inv.edim == 0;
        p.cm = true;
        p.gorenstein = inv.gorenstein;
        let series = |m: &ModRep| {
            let b = betti_numbers_bounded(m, budget.trunc, budget.ceiling);
            SeriesTrunc::from_usize(&b, b.len() - 1)
        };
        p.poincare_k = Some(series(&ModRep::residue_field(alg)));
        p.bass = Some(series(&ModRep::dualizing_module(alg)));
        p.analytically_unramified = Some(inv.edim == 0);
        p.mark(&CORE_FIELDS);
        p.mark(&["length", "analytically_unramified"]);
        p.derive_finite_cm_type();
        p
    }

    /// Adjoins `k` power series variables: `R[[Y_1..Y_k]]`.
    pub fn cone(&self, k: usize) -> RingProfile {
        if k == 0 {
            return self.clone();
        }
        let mut p = self.clone();
        p.dim += k;
        p.depth += k;
        p.edim += k;
        p.length = None;
        p.provenance.remove("length");
        p.poincare_k = self.poincare_k.as_ref().map(|s| s.mul(&SeriesTrunc::one_plus_t_pow(k, s.trunc())));
        p.bass = self.bass.as_ref().map(|s| {
            SeriesTrunc::monomial(k, s.trunc() + k).mul(&SeriesTrunc::new(s.coeffs().to_vec(), s.trunc() + k))
        });
        // the shifted Bass series is only known through the old truncation plus k
        p.plane_curve = None;
        if p.provenance.get("finite_cm_type") == Some(&Provenance::Computed) {
            p.finite_cm_type = None;
            p.provenance.remove("finite_cm_type");
        }
        p.derive_finite_cm_type();
        p
    }

    /// Profile of the local ring at the origin of `k[vars]/I`, with `cone`
    /// extra power series variables and user declarations for flags that
    /// cannot be computed.
    pub fn from_presentation(
        name: &str,
        ideal: &IdealSpec,
        cone: usize,
        declared: &DeclaredFlags,
        budget: SeriesBudget,
    ) -> Result<RingProfile> {
        let core = core_profile(name, ideal, budget)?;
        let mut p = core.cone(cone);
        p.apply_declared(declared)?;
        Ok(p)
    }

    /// Sets declared flags; a declaration contradicting a computed value is an error.
    pub fn apply_declared(&mut self, d: &DeclaredFlags) -> Result<()> {
        if let Some(r) = d.regular {
            if r != self.regular {
                return Err(Error::Inconsistent(format!("declared regular = {r} but computed {}", self.regular)));
            }
        }
        for (key, decl) in
            [("analytically_unramified", d.analytically_unramified), ("finite_cm_type", d.finite_cm_type)]
        {
            let Some(v) = decl else { continue };
            let slot =
                if key == "finite_cm_type" { &mut self.finite_cm_type } else { &mut self.analytically_unramified };
            match *slot {
                Some(c) if c != v => {
                    return Err(Error::Inconsistent(format!("declared {key} = {v} but computed {c}")));
                }
                Some(_) => {}
                None => {
                    *slot = Some(v);
                    self.provenance.insert(key.to_string(), Provenance::Declared);
                }
            }
        }
        self.derive_finite_cm_type();
        Ok(())
    }

    /// Fills in finite Cohen-Macaulay type where a standard criterion decides it:
    /// regular rings have it; artinian rings have it iff principal; a
    /// one-dimensional ring with it has multiplicity at most 3; a
    /// one-dimensional Cohen-Macaulay ring with nilpotents lacks it; an
    /// analytically unramified one-dimensional hypersurface of multiplicity
    /// at most 2 has it.
    fn derive_finite_cm_type(&mut self) {
        if self.finite_cm_type.is_some() {
            return;
        }
        let verdict = if self.regular {
            Some(true)
        } else if self.dim == 0 {
            Some(self.edim <= 1)
        } else if self.dim == 1 && self.multiplicity >= 4 {
            Some(false)
        } else if self.dim == 1 && self.cm && self.analytically_unramified == Some(false) {
            Some(false)
        } else if self.dim == 1
            && self.cm
            && self.analytically_unramified == Some(true)
            && self.hypersurface()
            && self.multiplicity <= 2
        {
            Some(true)
        } else {
            None
        };
        if verdict.is_some() {
            self.finite_cm_type = verdict;
            self.mark(&["finite_cm_type"]);
        }
    }
}

/// Linear parts of the generators; errors when some generator is a unit.
fn embedding_dimension(ideal: &IdealSpec) -> Result<usize> {
    let n = ideal.ring().nvars();
    let field = ideal.ring().field.clone();
    let mut lin = Vec::new();
    for g in ideal.generators() {
        if !g.constant_coeff().is_zero() {
            return Err(Error::Unsupported(format!("generator {g} is a unit at the origin")));
        }
        let v: Vec<(usize, Rat)> =
            (0..n).map(|i| (i, g.coeff(&Monomial::var(n, i)))).filter(|(_, c)| !c.is_zero()).collect();
        lin.push(v);
    }
    Ok(n - rank(&field, &lin))
}

/// `c (x^2 - y^n)` with `n >= 2`, in a ring of two variables.
pub fn recognize_plane_curve(ideal: &IdealSpec) -> Option<PlaneCurveForm> {
    let ring = ideal.ring();
    if ring.nvars() != 2 || ideal.generators().len() != 1 {
        return None;
    }
    let f = &ideal.generators()[0];
    if f.num_terms() != 2 {
        return None;
    }
    let terms: Vec<(&Monomial, &Rat)> = f.terms().collect();
    if *terms[0].1 != ring.field.neg(terms[1].1) {
        return None;
    }
    let pure: Vec<(usize, u32)> = terms.iter().filter_map(|(m, _)| m.pure_power().map(|v| (v, m.0[v]))).collect();
    if pure.len() != 2 || pure[0].0 == pure[1].0 {
        return None;
    }
    let (sq, other) = if pure[0].1 == 2 {
        (pure[0], pure[1])
    } else if pure[1].1 == 2 {
        (pure[1], pure[0])
    } else {
        return None;
    };
    if other.1 < 2 {
        return None;
    }
    Some(PlaneCurveForm { x: ring.vars[sq.0].clone(), y: ring.vars[other.0].clone(), n: other.1 })
}

/// Candidate linear forms: the sum of variables, then sums with growing coefficients.
fn linear_candidates(ideal: &IdealSpec) -> Vec<Poly> {
    let ring = ideal.ring();
    let n = ring.nvars();
    let weights: Vec<Vec<i64>> = vec![
        vec![1; n],
        (1..=n as i64).collect(),
        (1..=n as i64).map(|i| i * i + 1).collect(),
        (1..=n as i64).map(|i| 2 * i * i * i - i + 3).collect(),
    ];
    weights
        .into_iter()
        .map(|w| {
            let terms = w.iter().enumerate().map(|(i, &c)| (Monomial::var(n, i), Rat::from_i64(c)));
            Poly::from_terms(ring, terms)
        })
        .collect()
}

/// A linear form `l` with `length(R/lR) = e(R)`; for a one-dimensional ring this
/// makes `l` a parameter whose colon `(0 : l)` has length zero, so `l` is regular.
pub fn certified_regular_form(ideal: &IdealSpec, e: u64) -> Result<Option<(Poly, Arc<ArtinAlgebra>)>> {
    for l in linear_candidates(ideal) {
        let cut = ideal.with_generators([l.clone()])?;
        let gb = buchberger(&cut, &MonomialOrder::grevlex(ideal.ring()))?;
        if !gb.is_cofinite() {
            continue;
        }
        let alg = match quotient_algebra(&cut, &ideal.ring().field) {
            Ok(a) => a,
            Err(Error::Structural(_)) => continue,
            Err(err) => return Err(err),
        };
        if alg.len() as u64 == e {
            return Ok(Some((l, Arc::new(alg))));
        }
    }
    Ok(None)
}

/// Length of `(I : m) / I` for a monomial ideal with that quotient finite.
fn monomial_socle_length(mi: &MonomialIdeal) -> u64 {
    let j = mi.colon_max();
    let hi = HilbertSeries::of_monomials(mi.nvars(), mi.gens());
    let hj = HilbertSeries::of_monomials(mi.nvars(), j.gens());
    let bound = hi.regularity_index().max(hj.regularity_index()) + hi.numerator.len() + hj.numerator.len();
    (0..=bound).map(|n| hi.coefficient(n) - hj.coefficient(n)).sum::<i64>() as u64
}

/// One-dimensional monomial rings: finite Cohen-Macaulay type holds iff the
/// nilradical has finite length and the reduced ring (a union of coordinate
/// axes) has it; one or two axes do, four or more do not.
pub fn monomial_finite_cm_type(mi: &MonomialIdeal) -> Option<bool> {
    if mi.dimension() != Some(1) {
        return None;
    }
    let rad = mi.radical();
    if !mi.saturation().contains_ideal(&rad) {
        return Some(false);
    }
    match rad.minimal_primes().len() {
        1 | 2 => Some(true),
        3 => None,
        _ => Some(false),
    }
}

fn core_profile(name: &str, ideal: &IdealSpec, budget: SeriesBudget) -> Result<RingProfile> {
    let edim = embedding_dimension(ideal)?;
    let ring = ideal.ring();
    let gb = buchberger(ideal, &MonomialOrder::grevlex(ring))?;
    if gb.is_unit_ideal() {
        return Err(Error::Unsupported("the unit ideal defines no local ring".into()));
    }
    if gb.is_cofinite() {
        let alg = Arc::new(quotient_algebra(ideal, &ring.field)?);
        let mut p = RingProfile::from_artinian(name, &alg, budget);
        if ideal.monomial {
            p.analytically_unramified = Some(MonomialIdeal::from_ideal(ideal)?.is_radical());
        }
        return Ok(p);
    }
    if let Some(form) = recognize_plane_curve(ideal) {
        return plane_curve_profile(name, ideal, form, budget);
    }
    if !ideal.homogeneous {
        return Err(Error::Unsupported(
            "non-homogeneous presentations other than x^2 - y^n need an artinian core".into(),
        ));
    }
    let hs = HilbertSeries::of_ideal(ideal)?;
    let dim = hs.dim;
    let e = hs.multiplicity() as u64;
    let mut p = RingProfile::blank(name);
    p.dim = dim;
    p.edim = edim;
    p.multiplicity = e;
    p.mark(&["dim", "edim", "multiplicity"]);
    let monomial = if ideal.monomial { Some(MonomialIdeal::from_ideal(ideal)?) } else { None };
    if let Some(mi) = &monomial {
        p.analytically_unramified = Some(mi.is_radical());
        p.mark(&["analytically_unramified"]);
    }
    if edim == dim {
        let mut r = RingProfile::regular(name, dim, budget.trunc);
        r.multiplicity = e;
        return Ok(r);
    }
    if dim != 1 {
        return Err(Error::Unsupported(format!(
            "singular presentations of dimension {dim} need an artinian core and cone variables"
        )));
    }
    if let Some((_, cut)) = certified_regular_form(ideal, e)? {
        let base = RingProfile::from_artinian(name, &cut, budget);
        if base.edim + 1 != edim {
            return Err(Error::Inconsistent("regular linear form lies in the square of the maximal ideal".into()));
        }
        p.depth = 1;
        p.cm = true;
        p.ring_type = base.ring_type;
        p.gorenstein = base.ring_type == 1;
        p.regular = false;
        p.poincare_k = base.poincare_k.map(|s| s.mul(&SeriesTrunc::one_plus_t_pow(1, s.trunc())));
        p.bass = base.bass.map(|s| {
            SeriesTrunc::monomial(1, s.trunc() + 1).mul(&SeriesTrunc::new(s.coeffs().to_vec(), s.trunc() + 1))
        });
        p.mark(&CORE_FIELDS);
    } else if let Some(mi) = &monomial {
        if mi.saturation() == *mi {
            return Err(Error::Inconclusive("no certified regular linear form among the candidates".into()));
        }
        p.depth = 0;
        p.cm = false;
        p.gorenstein = false;
        p.ring_type = monomial_socle_length(mi) as usize;
        p.mark(&["depth", "cm", "gorenstein", "type", "regular"]);
    } else {
        return Err(Error::Inconclusive("depth of a non-monomial presentation without a regular linear form".into()));
    }
    if let Some(mi) = &monomial {
        if let Some(v) = monomial_finite_cm_type(mi) {
            p.finite_cm_type = Some(v);
            p.mark(&["finite_cm_type"]);
        }
    }
    p.derive_finite_cm_type();
    Ok(p)
}

/// `k[[x, y]]/(x^2 - y^n)`: multiplicity is the order of the equation, and
/// `y` is a regular parameter with `R/yR = k[x]/(x^2)`.
fn plane_curve_profile(
    name: &str,
    ideal: &IdealSpec,
    form: PlaneCurveForm,
    budget: SeriesBudget,
) -> Result<RingProfile> {
    let ring = ideal.ring();
    let f = &ideal.generators()[0];
    let (order, _) = f.order_term(&MonomialOrder::grevlex(ring))?;
    let y = ring.var_named(&form.y)?;
    let cut = ideal.with_generators([y])?;
    let base = RingProfile::from_artinian(name, &Arc::new(quotient_algebra(&cut, &ring.field)?), budget);
    if base.length != Some(order as usize) {
        return Err(Error::Inconsistent("y is not a regular parameter on the plane curve".into()));
    }
    let mut p = RingProfile::blank(name);
    p.dim = 1;
    p.depth = 1;
    p.edim = 2;
    p.multiplicity = order as u64;
    p.ring_type = base.ring_type;
    p.cm = true;
    p.gorenstein = base.ring_type == 1;
    p.poincare_k = base.poincare_k.map(|s| s.mul(&SeriesTrunc::one_plus_t_pow(1, s.trunc())));
    p.bass = base
        .bass
        .map(|s| SeriesTrunc::monomial(1, s.trunc() + 1).mul(&SeriesTrunc::new(s.coeffs().to_vec(), s.trunc() + 1)));
    p.mark(&CORE_FIELDS);
    // x^2 - y^n is a square exactly when n is even in characteristic 2
    let reduced = !(ring.field.characteristic() == 2 && form.n % 2 == 0);
    p.analytically_unramified = Some(reduced);
    p.mark(&["analytically_unramified"]);
    p.plane_curve = Some(form);
    p.derive_finite_cm_type();
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use crate::groebner::hilbert_function;
    use crate::poly::PolyRing;

    fn ideal(vars: &[&str], gens: &[&str]) -> IdealSpec {
        let r = PolyRing::new(vars, FieldSpec::Rationals).unwrap();
        IdealSpec::parse(&r, gens).unwrap()
    }

    fn small() -> SeriesBudget {
        SeriesBudget { trunc: 6, ceiling: 20_000 }
    }

    fn profile(vars: &[&str], gens: &[&str], cone: usize) -> RingProfile {
        RingProfile::from_presentation("t", &ideal(vars, gens), cone, &DeclaredFlags::default(), small()).unwrap()
    }

    #[test]
    fn square_with_a_cone_variable() {
        let p = profile(&["x", "y"], &["x^2", "x*y", "y^2"], 1);
        assert_eq!((p.dim, p.depth, p.ring_type, p.multiplicity, p.edim), (1, 1, 2, 3, 3));
        assert!(p.cm && !p.gorenstein && !p.regular);
        assert_eq!(p.poincare_k.unwrap().to_i64().unwrap()[..4], [1, 3, 6, 12]);
        assert_eq!(p.bass.unwrap().to_i64().unwrap()[..4], [0, 2, 3, 6]);
        assert_eq!(p.finite_cm_type, Some(false));
    }

    #[test]
    fn cone_matches_direct_presentation() {
        // S0(1)[[Y]] given as a non-cofinite monomial ideal in three variables
        let direct = profile(&["x", "y", "Y"], &["x^2", "x*y", "y^2"], 0);
        let coned = profile(&["x", "y"], &["x^2", "x*y", "y^2"], 1);
        assert_eq!(
            (direct.dim, direct.depth, direct.ring_type, direct.multiplicity, direct.edim),
            (coned.dim, coned.depth, coned.ring_type, coned.multiplicity, coned.edim)
        );
        let (a, b) = (direct.poincare_k.unwrap(), coned.poincare_k.unwrap());
        let n = a.trunc().min(b.trunc());
        assert_eq!(a.truncate(n), b.truncate(n));
    }

    #[test]
    fn plane_curves() {
        let cusp = profile(&["x", "y"], &["x^2 - y^3"], 0);
        assert_eq!((cusp.dim, cusp.depth, cusp.edim, cusp.multiplicity, cusp.ring_type), (1, 1, 2, 2, 1));
        assert_eq!(cusp.plane_curve.as_ref().unwrap().n, 3);
        assert_eq!(cusp.finite_cm_type, Some(true));
        assert_eq!(cusp.poincare_k.unwrap().to_i64().unwrap()[..4], [1, 2, 2, 2]);
        // n = 2 is homogeneous: the order rule agrees with the Hilbert function
        let i = ideal(&["x", "y"], &["x^2 - y^2"]);
        let h = hilbert_function(&i, 6).unwrap();
        let node = profile(&["x", "y"], &["x^2 - y^2"], 0);
        assert_eq!(node.multiplicity, h[6] - h[5]);
        let r = PolyRing::new(&["x", "y"], FieldSpec::prime(2).unwrap()).unwrap();
        let sq = RingProfile::from_presentation(
            "sq",
            &IdealSpec::parse(&r, &["x^2 - y^4"]).unwrap(),
            0,
            &DeclaredFlags::default(),
            small(),
        )
        .unwrap();
        assert_eq!(sq.analytically_unramified, Some(false));
    }

    #[test]
    fn one_dimensional_monomial_rings() {
        let double_line = profile(&["x", "y"], &["x^2"], 0);
        assert_eq!((double_line.depth, double_line.multiplicity, double_line.finite_cm_type), (1, 2, Some(false)));
        let embedded = profile(&["x", "y"], &["x^2", "x*y"], 0);
        assert_eq!((embedded.dim, embedded.depth, embedded.multiplicity, embedded.ring_type), (1, 0, 1, 1));
        assert_eq!(embedded.finite_cm_type, Some(true));
        assert!(embedded.bass.is_none());
        let node = profile(&["x", "z"], &["x*z"], 0);
        assert_eq!((node.multiplicity, node.ring_type, node.edim), (2, 1, 2));
        assert!(node.gorenstein && node.hypersurface());
        let axes = profile(&["x", "y", "z", "w"], &["x*y", "x*z", "x*w", "y*z", "y*w", "z*w"], 0);
        assert_eq!((axes.multiplicity, axes.finite_cm_type), (4, Some(false)));
        let dvr = profile(&["x", "y"], &["x"], 0);
        assert!(dvr.regular && dvr.dim == 1);
    }

    #[test]
    fn declarations() {
        let i = ideal(&["x", "y", "z"], &["x^2", "x*y", "y^2"]);
        let bad = DeclaredFlags { regular: Some(true), ..Default::default() };
        assert!(matches!(RingProfile::from_presentation("s", &i, 0, &bad, small()), Err(Error::Inconsistent(_))));
        let j = ideal(&["x", "y"], &["x^2 + x*y - y^2"]);
        assert!(RingProfile::from_presentation("s", &j, 0, &DeclaredFlags::default(), small())
            .unwrap()
            .analytically_unramified
            .is_none());
        let ok = DeclaredFlags { analytically_unramified: Some(true), ..Default::default() };
        let p = RingProfile::from_presentation("s", &j, 0, &ok, small()).unwrap();
        assert_eq!(p.provenance["analytically_unramified"], Provenance::Declared);
        assert_eq!(p.finite_cm_type, Some(true));
    }

    #[test]
    fn regular_profiles() {
        let p = RingProfile::regular("dvr", 1, 5);
        assert_eq!(p.poincare_k.as_ref().unwrap().to_i64().unwrap(), vec![1, 1, 0, 0, 0, 0]);
        assert_eq!(p.bass.as_ref().unwrap().to_i64().unwrap(), vec![0, 1, 0, 0, 0, 0]);
        assert!(p.hypersurface() && p.finite_cm_type == Some(true));
    }
}
