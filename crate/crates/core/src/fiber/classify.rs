use std::sync::Arc;

use serde::Serialize;

use super::calculus::{fiber_dim_depth, fiber_multiplicity, FiberSpec};
use super::profile::RingProfile;
use crate::artin::ArtinAlgebra;
use crate::error::{Error, Result};
use crate::groebner::{monomial_radical, HilbertSeries, IdealSpec, MonomialIdeal};
use crate::linalg::{rank, SparseVec};
use crate::rat::Rat;

/// A verdict together with the condition that produced it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub verdict: bool,
    /// Which sufficient condition matched, if any.
    pub matched: Option<String>,
    pub reason: String,
}

/// Gorenstein iff both factors are discrete valuation rings.
pub fn classify_gorenstein_fiber(f: &FiberSpec) -> Classification {
    let (s, t) = (&f.left, &f.right);
    let dvr = |p: &RingProfile| p.regular && p.dim == 1;
    if dvr(s) && dvr(t) {
        return Classification {
            verdict: true,
            matched: Some("two_dvrs".into()),
            reason: "both factors are discrete valuation rings, so R is a dimension-1 hypersurface".into(),
        };
    }
    let (_, _, cm) = fiber_dim_depth(f);
    let reason = if !cm {
        "R is not Cohen-Macaulay"
    } else if s.singular() || t.singular() {
        "a singular factor makes the type at least 2"
    } else {
        "regular factors of dimension other than 1"
    };
    Classification { verdict: false, matched: None, reason: reason.into() }
}

/// Three-valued conjunction: false wins, then unknown.
fn all(parts: &[Option<bool>]) -> Option<bool> {
    if parts.contains(&Some(false)) {
        Some(false)
    } else if parts.iter().all(|p| p.is_some()) {
        Some(true)
    } else {
        None
    }
}

fn any(parts: &[Option<bool>]) -> Option<bool> {
    if parts.contains(&Some(true)) {
        Some(true)
    } else if parts.iter().all(|p| p.is_some()) {
        Some(false)
    } else {
        None
    }
}

fn missing_flags(f: &FiberSpec, keys: &[&str]) -> Vec<String> {
    let mut out = Vec::new();
    for p in [&f.left, &f.right] {
        for k in keys {
            let absent = match *k {
                "analytically_unramified" => p.analytically_unramified.is_none(),
                "finite_cm_type" => p.finite_cm_type.is_none(),
                _ => false,
            };
            if absent {
                out.push(format!("{}.{k}", p.name));
            }
        }
    }
    out
}

/// `S` is an analytically unramified one-dimensional hypersurface with
/// `e(S) <= 2` and `T` is a discrete valuation ring.
fn hypersurface_and_dvr(s: &RingProfile, t: &RingProfile) -> Option<bool> {
    all(&[
        Some(s.dim == 1 && s.hypersurface() && s.multiplicity <= 2),
        s.analytically_unramified,
        Some(t.regular && t.dim == 1),
    ])
}

/// Both factors are one-dimensional Cohen-Macaulay with finite
/// Cohen-Macaulay type and `e(R) <= 3`.
fn small_multiplicity(f: &FiberSpec) -> Option<bool> {
    let (s, t) = (&f.left, &f.right);
    all(&[
        Some(s.cm && t.cm && s.dim == 1 && t.dim == 1 && fiber_multiplicity(f) <= 3),
        s.finite_cm_type,
        t.finite_cm_type,
    ])
}

/// Cohen-Macaulay with finite Cohen-Macaulay type. Two equivalent
/// characterizations are evaluated and must agree whenever both are decided.
pub fn classify_fcmt_cm(f: &FiberSpec) -> Result<Classification> {
    let (s, t) = (&f.left, &f.right);
    let first = any(&[hypersurface_and_dvr(s, t), hypersurface_and_dvr(t, s)]);
    let second = small_multiplicity(f);
    if let (Some(a), Some(b)) = (first, second) {
        if a != b {
            return Err(Error::Inconsistent(format!(
                "hypersurface criterion gives {a} but multiplicity criterion gives {b}"
            )));
        }
    }
    let (verdict, matched) = match (first, second) {
        (Some(true), _) => (true, Some("hypersurface_and_dvr")),
        (_, Some(true)) => (true, Some("small_multiplicity")),
        (Some(false), _) | (_, Some(false)) => (false, None),
        (None, None) => {
            return Err(Error::IncompleteProfile(missing_flags(f, &["analytically_unramified", "finite_cm_type"])));
        }
    };
    if verdict {
        let (dim, _, cm) = fiber_dim_depth(f);
        if dim != 1 || !cm {
            return Err(Error::Inconsistent(
                "a positive verdict requires a one-dimensional Cohen-Macaulay ring".into(),
            ));
        }
    }
    let reason = match matched {
        Some("hypersurface_and_dvr") => {
            "an analytically unramified curve hypersurface of multiplicity at most 2 glued to a DVR"
        }
        Some(_) => "two Cohen-Macaulay curves of finite type with e(R) at most 3",
        None => "neither characterization holds",
    };
    Ok(Classification { verdict, matched: matched.map(String::from), reason: reason.into() })
}

/// Finite Cohen-Macaulay type for fiber products of dimension at most 1.
pub fn classify_fcmt_depth_le1(f: &FiberSpec) -> Result<Classification> {
    let (dim, _, _) = fiber_dim_depth(f);
    if dim > 1 {
        return Err(Error::Unsupported(format!("fiber product has dimension {dim}")));
    }
    let curve_and_artinian =
        |s: &RingProfile, t: &RingProfile| all(&[Some(s.dim == 1 && t.dim == 0), s.finite_cm_type]);
    let two_curves = |s: &RingProfile, t: &RingProfile| {
        all(&[
            Some(s.dim == 1 && t.dim == 1 && s.multiplicity <= 2 && t.multiplicity == 1),
            s.finite_cm_type,
            t.finite_cm_type,
        ])
    };
    let (s, t) = (&f.left, &f.right);
    let first = any(&[curve_and_artinian(s, t), curve_and_artinian(t, s)]);
    let second = any(&[two_curves(s, t), two_curves(t, s)]);
    let (verdict, matched) = match (first, second) {
        (Some(true), _) => (true, Some("curve_and_artinian")),
        (_, Some(true)) => (true, Some("two_curves")),
        (Some(false), Some(false)) => (false, None),
        _ => return Err(Error::IncompleteProfile(missing_flags(f, &["finite_cm_type"]))),
    };
    if verdict && dim == 0 {
        return Err(Error::Inconsistent("an artinian fiber product cannot have finite Cohen-Macaulay type".into()));
    }
    let reason = match (matched, dim) {
        (Some("curve_and_artinian"), _) => "a curve of finite type glued to an artinian ring".to_string(),
        (Some(_), _) => "two curves of finite type with multiplicities at most 2 and exactly 1".to_string(),
        (None, 0) => "artinian fiber products have infinite Cohen-Macaulay type".to_string(),
        (None, _) => "no gluing pattern of finite type applies".to_string(),
    };
    Ok(Classification { verdict, matched: matched.map(String::from), reason })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NilCheck {
    pub e_r: u64,
    pub e_r_mod_nil: u64,
    pub equal: bool,
    /// Whether `m^i ∩ Nil(R) = 0` for large `i`, i.e. the nilradical has finite length.
    pub nil_eventually_zero: bool,
}

/// Multiplicities of `R` and `R/Nil(R)` for a one-dimensional monomial
/// presentation. They must agree when the nilradical has finite length.
pub fn nil_multiplicity_check(ideal: &IdealSpec) -> Result<NilCheck> {
    if !ideal.monomial {
        return Err(Error::Unsupported("nilradical multiplicity needs a monomial ideal".into()));
    }
    let mi = MonomialIdeal::from_ideal(ideal)?;
    if mi.dimension() != Some(1) {
        return Err(Error::Unsupported(format!("expected a one-dimensional ring, got dimension {:?}", mi.dimension())));
    }
    let e_r = HilbertSeries::of_ideal(ideal)?.multiplicity() as u64;
    let e_r_mod_nil = HilbertSeries::of_ideal(&monomial_radical(ideal)?)?.multiplicity() as u64;
    let nil_eventually_zero = mi.saturation().contains_ideal(&mi.radical());
    let equal = e_r == e_r_mod_nil;
    if nil_eventually_zero && !equal {
        return Err(Error::Inconsistent(format!(
            "finite-length nilradical but e(R) = {e_r} and e(R/Nil) = {e_r_mod_nil}"
        )));
    }
    Ok(NilCheck { e_r, e_r_mod_nil, equal, nil_eventually_zero })
}

/// Whether a Cohen-Macaulay ring is guaranteed at most two semidualizing
/// modules by the multiplicity bound `e <= 8`.
pub fn small_mult_semidualizing_flag(p: &RingProfile) -> Result<bool> {
    if !p.cm {
        return Err(Error::Unsupported(format!("{} is not Cohen-Macaulay", p.name)));
    }
    Ok(p.multiplicity <= 8)
}

/// Checks on an artinian algebra that back the `e <= 8` bound.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SmallLengthRecord {
    pub length: usize,
    pub edim: usize,
    pub mmax_sq_dim: usize,
    pub ring_type: usize,
    pub socle_in_mmax_sq: bool,
    /// `edim = length - 1 - dim m^2`.
    pub identity_holds: bool,
    /// Length at most 8, socle inside `m^2` and type at least 4.
    pub hypothesis: bool,
    /// The implication `hypothesis => edim <= 3`.
    pub implication_holds: bool,
}

pub fn proposition_proof_invariant(a: &Arc<ArtinAlgebra>) -> SmallLengthRecord {
    let field = a.base();
    let sq: Vec<SparseVec> = a.mmax_power(2);
    let r_sq = rank(field, &sq);
    let socle = a.socle();
    let socle_sparse: Vec<SparseVec> = socle
        .iter()
        .map(|v| {
            v.iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(i, x)| (i, x.clone()))
                .collect::<Vec<(usize, Rat)>>()
        })
        .collect();
    let mut joined = sq.clone();
    joined.extend(socle_sparse);
    let socle_in_mmax_sq = rank(field, &joined) == r_sq;
    let length = a.len();
    let edim = a.edim();
    let ring_type = socle.len();
    let hypothesis = length <= 8 && socle_in_mmax_sq && ring_type >= 4;
    SmallLengthRecord {
        length,
        edim,
        mmax_sq_dim: r_sq,
        ring_type,
        socle_in_mmax_sq,
        identity_holds: edim + 1 + r_sq == length,
        hypothesis,
        implication_holds: !hypothesis || edim <= 3,
    }
}

/// Down-closed sets of exponent vectors in `nvars` variables with at most
/// `max_len` elements, each returned as the minimal monomial generators of the
/// ideal it is the complement of. The empty set is omitted.
pub fn monomial_staircases(nvars: usize, max_len: usize) -> Vec<Vec<Vec<u32>>> {
    fn grow(
        nvars: usize,
        max_len: usize,
        cur: &mut Vec<Vec<u32>>,
        seen: &mut std::collections::BTreeSet<Vec<Vec<u32>>>,
    ) {
        let mut key = cur.clone();
        key.sort();
        if !seen.insert(key) || cur.len() == max_len {
            return;
        }
        let corners = outer_corners(nvars, cur);
        for c in corners {
            cur.push(c);
            grow(nvars, max_len, cur, seen);
            cur.pop();
        }
    }
    let mut seen = std::collections::BTreeSet::new();
    let mut cur = vec![vec![0; nvars]];
    grow(nvars, max_len, &mut cur, &mut seen);
    seen.into_iter().map(|s| outer_corners(nvars, &s)).collect()
}

/// Exponents outside the down-set all of whose predecessors lie inside it.
fn outer_corners(nvars: usize, set: &[Vec<u32>]) -> Vec<Vec<u32>> {
    let mut out = std::collections::BTreeSet::new();
    for e in set {
        for i in 0..nvars {
            let mut c = e.clone();
            c[i] += 1;
            if set.contains(&c) {
                continue;
            }
            let inside = (0..nvars).all(|j| {
                if c[j] == 0 {
                    return true;
                }
                let mut p = c.clone();
                p[j] -= 1;
                set.contains(&p)
            });
            if inside {
                out.insert(c);
            }
        }
    }
    out.into_iter().collect()
}
