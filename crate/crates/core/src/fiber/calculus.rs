use std::collections::BTreeMap;

use serde::Serialize;

use super::profile::{Provenance, RingProfile};
use crate::error::{Error, Result};
use crate::groebner::IdealSpec;
use crate::homalg::SeriesTrunc;
use crate::poly::PolyRing;
use crate::rat::Rat;

/// The factors `S` and `T` of a fiber product `S ×_k T`.
#[derive(Clone, Debug, Serialize)]
pub struct FiberSpec {
    pub left: RingProfile,
    pub right: RingProfile,
}

impl FiberSpec {
    /// Rejects a factor equal to the residue field.
    pub fn new(left: RingProfile, right: RingProfile) -> Result<FiberSpec> {
        for p in [&left, &right] {
            if p.edim == 0 {
                return Err(Error::InvalidFiber(format!("factor {} is the residue field", p.name)));
            }
        }
        Ok(FiberSpec { left, right })
    }

    pub fn swapped(&self) -> FiberSpec {
        FiberSpec { left: self.right.clone(), right: self.left.clone() }
    }
}

/// Which row family of the type and Bass series table applies.
enum Shape<'a> {
    BothSingular(&'a RingProfile, &'a RingProfile),
    /// singular factor, regular factor
    OneRegular(&'a RingProfile, &'a RingProfile),
    BothRegular(usize, usize),
}

fn shape(f: &FiberSpec) -> Result<Shape<'_>> {
    let (s, t) = (&f.left, &f.right);
    for p in [s, t] {
        if p.regular && p.dim == 0 {
            return Err(Error::InvalidFiber(format!("regular factor {} of dimension 0 is the residue field", p.name)));
        }
    }
    Ok(match (s.regular, t.regular) {
        (false, false) => Shape::BothSingular(s, t),
        (false, true) => Shape::OneRegular(s, t),
        (true, false) => Shape::OneRegular(t, s),
        (true, true) => Shape::BothRegular(s.dim, t.dim),
    })
}

/// `(dim, depth, cm)` of `S ×_k T`.
pub fn fiber_dim_depth(f: &FiberSpec) -> (usize, usize, bool) {
    let (s, t) = (&f.left, &f.right);
    let dim = s.dim.max(t.dim);
    let depth = s.depth.min(t.depth).min(1);
    let cm = s.cm && t.cm && s.dim == t.dim && s.dim <= 1;
    (dim, depth, cm)
}

pub fn fiber_type(f: &FiberSpec) -> Result<usize> {
    Ok(match shape(f)? {
        Shape::BothSingular(s, t) => {
            let (a, b) = if s.depth <= t.depth { (s, t) } else { (t, s) };
            match (a.depth, b.depth) {
                (0, 0) => a.ring_type + b.ring_type,
                (0, _) => a.ring_type,
                (1, 1) => a.ring_type + b.ring_type + 1,
                (1, _) => a.ring_type + 1,
                _ => 1,
            }
        }
        Shape::OneRegular(s, _) => match s.depth {
            0 => s.ring_type,
            1 => s.ring_type + 1,
            _ => 1,
        },
        Shape::BothRegular(..) => 1,
    })
}

pub fn fiber_multiplicity(f: &FiberSpec) -> u64 {
    let (s, t) = (&f.left, &f.right);
    match s.dim.cmp(&t.dim) {
        std::cmp::Ordering::Greater => s.multiplicity,
        std::cmp::Ordering::Less => t.multiplicity,
        std::cmp::Ordering::Equal if s.dim > 0 => s.multiplicity + t.multiplicity,
        std::cmp::Ordering::Equal => s.multiplicity + t.multiplicity - 1,
    }
}

pub fn fiber_edim(f: &FiberSpec) -> usize {
    f.left.edim + f.right.edim
}

/// `P^S P^T / (P^S + P^T - P^S P^T)`, the Poincaré series of the residue field.
pub fn fiber_poincare_k(ps: &SeriesTrunc, pt: &SeriesTrunc) -> Result<SeriesTrunc> {
    for p in [ps, pt] {
        if p.coeff(0) != Rat::one() {
            return Err(Error::InvalidFiber("Poincaré series must start with 1".into()));
        }
        if p.trunc() >= 1 && p.coeff(1).is_zero() {
            return Err(Error::InvalidFiber("a factor with Poincaré series 1 is the residue field".into()));
        }
    }
    let denom = ps.add(pt).sub(&ps.mul(pt));
    ps.mul(pt).div(&denom)
}

fn required<'a>(
    p: &'a RingProfile,
    which: &str,
    s: &'a Option<SeriesTrunc>,
    missing: &mut Vec<String>,
) -> Option<&'a SeriesTrunc> {
    if s.is_none() {
        missing.push(format!("{}.{which}", p.name));
    }
    s.as_ref()
}

/// Bass series of `S ×_k T` through `t^n`, or through the highest degree the
/// factor series support. The coefficient at `depth(R)` is checked against
/// [`fiber_type`].
pub fn fiber_bass_series(f: &FiberSpec, n: usize) -> Result<SeriesTrunc> {
    let t1 = SeriesTrunc::monomial(1, n);
    let mut missing = Vec::new();
    let series = match shape(f)? {
        Shape::BothSingular(s, t) => {
            let ps = required(s, "poincare_k", &s.poincare_k, &mut missing);
            let pt = required(t, "poincare_k", &t.poincare_k, &mut missing);
            let is = required(s, "bass", &s.bass, &mut missing);
            let it = required(t, "bass", &t.bass, &mut missing);
            let (Some(ps), Some(pt), Some(is), Some(it)) = (ps, pt, is, it) else {
                return Err(Error::IncompleteProfile(missing));
            };
            let (ps, pt) = (ps.truncate(n.min(ps.trunc())), pt.truncate(n.min(pt.trunc())));
            let num = t1.mul(&ps).mul(&pt).add(&is.mul(&pt)).add(&it.mul(&ps));
            num.div(&ps.add(&pt).sub(&ps.mul(&pt)))?
        }
        Shape::OneRegular(s, t) => {
            let ps = required(s, "poincare_k", &s.poincare_k, &mut missing);
            let is = required(s, "bass", &s.bass, &mut missing);
            let (Some(ps), Some(is)) = (ps, is) else {
                return Err(Error::IncompleteProfile(missing));
            };
            let ps = ps.truncate(n.min(ps.trunc()));
            let r = t.dim;
            let pt = SeriesTrunc::one_plus_t_pow(r, n);
            let num = t1.mul(&ps).mul(&pt).add(&is.mul(&pt)).sub(&SeriesTrunc::monomial(r + 1, n).mul(&ps));
            num.div(&ps.add(&pt).sub(&ps.mul(&pt)))?
        }
        Shape::BothRegular(m, r) => {
            let ps = SeriesTrunc::one_plus_t_pow(m, n);
            let pt = SeriesTrunc::one_plus_t_pow(r, n);
            let num = t1
                .mul(&SeriesTrunc::one_plus_t_pow(m + r, n))
                .sub(&SeriesTrunc::monomial(m + 1, n).mul(&pt))
                .sub(&SeriesTrunc::monomial(r + 1, n).mul(&ps));
            num.div(&ps.add(&pt).sub(&ps.mul(&pt)))?
        }
    };
    let (_, depth, _) = fiber_dim_depth(f);
    if depth <= series.trunc() {
        let ty = fiber_type(f)?;
        if series.coeff(depth) != Rat::from_i64(ty as i64) {
            return Err(Error::Inconsistent(format!(
                "Bass coefficient {} at degree {depth} differs from the type {ty}",
                series.coeff(depth)
            )));
        }
    }
    Ok(series)
}

/// Profile of `S ×_k T` assembled from the factor profiles.
pub fn fiber_profile(f: &FiberSpec, trunc: usize) -> Result<RingProfile> {
    let (s, t) = (&f.left, &f.right);
    let (dim, depth, cm) = fiber_dim_depth(f);
    let ring_type = fiber_type(f)?;
    let poincare_k = match (&s.poincare_k, &t.poincare_k) {
        (Some(a), Some(b)) => {
            Some(fiber_poincare_k(&a.truncate(trunc.min(a.trunc())), &b.truncate(trunc.min(b.trunc())))?)
        }
        _ => None,
    };
    let bass = match fiber_bass_series(f, trunc) {
        Ok(b) => Some(b),
        Err(Error::IncompleteProfile(_)) => None,
        Err(e) => return Err(e),
    };
    let analytically_unramified = match (s.analytically_unramified, t.analytically_unramified) {
        (Some(false), _) | (_, Some(false)) => Some(false),
        (Some(true), Some(true)) => Some(true),
        _ => None,
    };
    let mut provenance = BTreeMap::new();
    for key in ["dim", "depth", "edim", "type", "multiplicity", "regular", "cm", "gorenstein"] {
        provenance.insert(key.to_string(), Provenance::Computed);
    }
    if poincare_k.is_some() {
        provenance.insert("poincare_k".into(), Provenance::Computed);
    }
    if bass.is_some() {
        provenance.insert("bass".into(), Provenance::Computed);
    }
    let declared = [s, t].iter().any(|p| p.provenance.get("analytically_unramified") == Some(&Provenance::Declared));
    if analytically_unramified.is_some() {
        let how = if declared { Provenance::Declared } else { Provenance::Computed };
        provenance.insert("analytically_unramified".into(), how);
    }
    let length = match (s.length, t.length) {
        (Some(a), Some(b)) => Some(a + b - 1),
        _ => None,
    };
    if length.is_some() {
        provenance.insert("length".into(), Provenance::Computed);
    }
    let mut p = RingProfile {
        name: format!("{} x_k {}", s.name, t.name),
        dim,
        depth,
        edim: fiber_edim(f),
        ring_type,
        multiplicity: fiber_multiplicity(f),
        length,
        poincare_k,
        bass,
        regular: false,
        cm,
        gorenstein: cm && ring_type == 1,
        analytically_unramified,
        finite_cm_type: None,
        plane_curve: None,
        provenance,
    };
    let verdict = if dim <= 1 { super::classify::classify_fcmt_depth_le1(f).ok().map(|c| c.verdict) } else { None };
    if let Some(v) = verdict {
        p.finite_cm_type = Some(v);
        p.provenance.insert("finite_cm_type".into(), Provenance::Computed);
    }
    Ok(p)
}

/// `I_S + I_T + (x z : x in X, z in Z)` in the ring on both variable sets.
pub fn fiber_present(is: &IdealSpec, it: &IdealSpec) -> Result<IdealSpec> {
    let (rs, rt) = (is.ring(), it.ring());
    if rs.field != rt.field {
        return Err(Error::InvalidFiber("factors are over different fields".into()));
    }
    if let Some(v) = rs.vars.iter().find(|v| rt.vars.contains(v)) {
        return Err(Error::InvalidFiber(format!("variable {v} occurs in both factors")));
    }
    let vars: Vec<&String> = rs.vars.iter().chain(rt.vars.iter()).collect();
    let ring = PolyRing::new(&vars, rs.field.clone())?;
    let mut gens: Vec<_> = is.embed(&ring)?.generators().to_vec();
    gens.extend(it.embed(&ring)?.generators().iter().cloned());
    let ns = rs.nvars();
    for i in 0..ns {
        for j in ns..ring.nvars() {
            gens.push(ring.var(i).try_mul(&ring.var(j))?);
        }
    }
    IdealSpec::new(&ring, gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::artin::{quotient_algebra, ModRep};
    use crate::fiber::profile::{DeclaredFlags, SeriesBudget};
    use crate::field::FieldSpec;
    use crate::homalg::{bass_series, betti_numbers};
    use proptest::prelude::*;
    use std::sync::Arc;

    fn ideal<S: AsRef<str>>(vars: &[&str], gens: &[S]) -> IdealSpec {
        IdealSpec::parse(&PolyRing::new(vars, FieldSpec::Rationals).unwrap(), gens).unwrap()
    }

    fn budget() -> SeriesBudget {
        SeriesBudget { trunc: 8, ceiling: 50_000 }
    }

    fn prof<S: AsRef<str>>(vars: &[&str], gens: &[S], cone: usize) -> RingProfile {
        RingProfile::from_presentation(&vars.join(""), &ideal(vars, gens), cone, &DeclaredFlags::default(), budget())
            .unwrap()
    }

    fn with(dim: usize, depth: usize, ty: usize, e: u64, regular: bool) -> RingProfile {
        let mut p = RingProfile::regular("p", dim, 6);
        p.depth = depth;
        p.ring_type = ty;
        p.multiplicity = e;
        p.regular = regular;
        p.cm = depth == dim;
        p.edim = dim + 2;
        p
    }

    #[test]
    fn dim_depth_rows() {
        let f = FiberSpec::new(with(1, 1, 1, 2, false), with(1, 1, 1, 2, false)).unwrap();
        assert_eq!(fiber_dim_depth(&f), (1, 1, true));
        let f = FiberSpec::new(with(1, 1, 1, 2, false), with(0, 0, 1, 2, false)).unwrap();
        assert_eq!(fiber_dim_depth(&f), (1, 0, false));
        let f = FiberSpec::new(with(2, 2, 1, 2, false), with(1, 1, 1, 2, false)).unwrap();
        assert_eq!(fiber_dim_depth(&f), (2, 1, false));
    }

    #[test]
    fn type_and_multiplicity_rows() {
        let dvr = RingProfile::regular("dvr", 1, 6);
        let f = FiberSpec::new(with(1, 1, 1, 12, false), dvr.clone()).unwrap();
        assert_eq!(fiber_type(&f).unwrap(), 2);
        assert_eq!(fiber_multiplicity(&f), 13);
        let f = FiberSpec::new(with(1, 1, 8, 27, false), dvr.clone()).unwrap();
        assert_eq!(fiber_type(&f).unwrap(), 9);
        let f = FiberSpec::new(with(0, 0, 1, 2, false), with(0, 0, 1, 2, false)).unwrap();
        assert_eq!((fiber_type(&f).unwrap(), fiber_multiplicity(&f)), (2, 3));
        let f = FiberSpec::new(with(2, 2, 1, 5, false), dvr.clone()).unwrap();
        assert_eq!((fiber_type(&f).unwrap(), fiber_multiplicity(&f)), (1, 5));
        let f = FiberSpec::new(with(1, 1, 3, 4, false), with(3, 3, 1, 2, false)).unwrap();
        assert_eq!(fiber_type(&f).unwrap(), 4);
        let f = FiberSpec::new(with(0, 0, 3, 4, false), with(2, 1, 5, 2, false)).unwrap();
        assert_eq!(fiber_type(&f).unwrap(), 3);
        assert!(matches!(FiberSpec::new(RingProfile::regular("k", 0, 3), dvr), Err(Error::InvalidFiber(_))));
    }

    #[test]
    fn poincare_of_residue_field() {
        let p = SeriesTrunc::from_i64(&[1; 6], 5);
        let r = fiber_poincare_k(&p, &p).unwrap();
        assert_eq!(r.to_i64().unwrap(), vec![1, 2, 4, 8, 16, 32]);
        let a = Arc::new(quotient_algebra(&ideal(&["x", "z"], &["x^2", "x*z", "z^2"]), &FieldSpec::Rationals).unwrap());
        let direct = betti_numbers(&ModRep::residue_field(&a), 5).unwrap();
        assert_eq!(direct, vec![1, 2, 4, 8, 16, 32]);
        let line = SeriesTrunc::one_plus_t_pow(1, 5);
        let node = fiber_poincare_k(&line, &line).unwrap();
        assert_eq!(node.to_i64().unwrap(), vec![1, 2, 2, 2, 2, 2]);
        assert_eq!(prof(&["x", "z"], &["x*z"], 0).poincare_k.unwrap().to_i64().unwrap()[..6], [1, 2, 2, 2, 2, 2]);
        assert!(matches!(fiber_poincare_k(&p, &SeriesTrunc::constant(1, 5)), Err(Error::InvalidFiber(_))));
    }

    #[test]
    fn bass_series_cases() {
        let dvr = RingProfile::regular("dvr", 1, 8);
        let f = FiberSpec::new(dvr.clone(), dvr.clone()).unwrap();
        assert_eq!(fiber_bass_series(&f, 5).unwrap().to_i64().unwrap(), vec![0, 1, 0, 0, 0, 0]);
        let dual = prof(&["x"], &["x^2"], 0);
        let f = FiberSpec::new(dual.clone(), dual).unwrap();
        let b = fiber_bass_series(&f, 5).unwrap().to_i64().unwrap();
        assert_eq!(b[..4], [2, 3, 6, 12]);
        let a = Arc::new(quotient_algebra(&ideal(&["x", "z"], &["x^2", "x*z", "z^2"]), &FieldSpec::Rationals).unwrap());
        assert_eq!(bass_series(&a, 5).unwrap().to_i64().unwrap(), b);
        let cone = prof(&["x", "y"], &["x^2", "x*y", "y^2"], 1);
        let f = FiberSpec::new(cone, dvr).unwrap();
        assert_eq!(fiber_bass_series(&f, 5).unwrap().coeff(1), Rat::from_i64(3));
    }

    #[test]
    fn presentation_of_fiber_product() {
        let p = fiber_present(&ideal(&["x"], &["x^2"]), &ideal(&["z"], &["z^2"])).unwrap();
        assert_eq!(p.generators().len(), 3);
        let a = quotient_algebra(&p, &FieldSpec::Rationals).unwrap();
        assert_eq!(a.len(), 3);
        assert!(matches!(
            fiber_present(&ideal(&["x"], &["x^2"]), &ideal(&["x"], &["x^3"])),
            Err(Error::InvalidFiber(_))
        ));
    }

    #[test]
    fn fiber_profile_matches_direct_presentation() {
        // both factors one dimensional, so the fiber product is a curve
        let cone = prof(&["x", "y"], &["x^2", "x*y", "y^2"], 1);
        let f = FiberSpec::new(cone, RingProfile::regular("dvr", 1, 8)).unwrap();
        let formula = fiber_profile(&f, 6).unwrap();
        let joined =
            fiber_present(&ideal(&["x", "y", "w"], &["x^2", "x*y", "y^2"]), &ideal(&["z"], &[] as &[&str])).unwrap();
        let direct = RingProfile::from_presentation("d", &joined, 0, &DeclaredFlags::default(), budget()).unwrap();
        assert_eq!(
            (formula.dim, formula.depth, formula.edim, formula.ring_type, formula.multiplicity),
            (direct.dim, direct.depth, direct.edim, direct.ring_type, direct.multiplicity)
        );
        let n = 5;
        assert_eq!(formula.poincare_k.unwrap().truncate(n), direct.poincare_k.unwrap().truncate(n));
        assert_eq!(formula.bass.unwrap().truncate(n), direct.bass.unwrap().truncate(n));
    }

    fn small_artinian() -> impl Strategy<Value = Vec<&'static str>> {
        prop::sample::select(vec![
            vec!["x^2", "y"],
            vec!["x^3", "y"],
            vec!["x^2", "y^2"],
            vec!["x^2", "x*y", "y^2"],
            vec!["x^2", "y^3", "x*y"],
            vec!["x^3", "x*y", "y^2"],
        ])
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(12))]
        #[test]
        fn formulas_match_direct_and_are_symmetric(a in small_artinian(), b in small_artinian()) {
            let s = prof(&["x", "y"], &a, 0);
            let rb: Vec<String> = b.iter().map(|g| g.replace('x', "u").replace('y', "v")).collect();
            let t = prof(&["u", "v"], &rb, 0);
            let f = FiberSpec::new(s, t).unwrap();
            let g = f.swapped();
            let pf = fiber_profile(&f, 5).unwrap();
            let pg = fiber_profile(&g, 5).unwrap();
            prop_assert_eq!((pf.ring_type, pf.multiplicity, pf.edim), (pg.ring_type, pg.multiplicity, pg.edim));
            prop_assert_eq!(&pf.bass, &pg.bass);
            let joined = fiber_present(&ideal(&["x", "y"], &a), &ideal(&["u", "v"], &rb)).unwrap();
            let direct = RingProfile::from_presentation("d", &joined, 0, &DeclaredFlags::default(), budget()).unwrap();
            prop_assert_eq!((pf.ring_type, pf.multiplicity, pf.edim, pf.length), (direct.ring_type, direct.multiplicity, direct.edim, direct.length));
            let n = 5.min(direct.bass.as_ref().unwrap().trunc());
            prop_assert_eq!(pf.bass.unwrap().truncate(n), direct.bass.unwrap().truncate(n));
            prop_assert_eq!(pf.poincare_k.unwrap().truncate(n), direct.poincare_k.unwrap().truncate(n));
        }
    }
}
