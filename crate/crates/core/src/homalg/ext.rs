use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Serialize;

use super::resolution::{Resolution, Stage};
use super::series::SeriesTrunc;
use crate::artin::grading::{sub_deg, Deg};
use crate::artin::{hom_space, same_algebra, ArtinAlgebra, ModRep};
use crate::error::{Error, Result};
use crate::linalg::{rank, SparseVec};
use crate::rat::Rat;

/// Which side of `Ext^i(M, N) ≅ Ext^i(N^∨, M^∨)` gets resolved.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ExtRoute {
    Direct,
    Dual,
    Auto,
}

/// Ranks of `Hom(F_{i-1}, N) -> Hom(F_i, N)` for `i = 1..=upto`.
fn cochain_ranks(res: &Resolution, n: &ModRep, upto: usize) -> Vec<usize> {
    let alg = res.algebra();
    let field = alg.base();
    let d = alg.len();
    let dn = n.dim();
    let graded = res.is_graded() && n.degrees().is_some();
    let n_deg = |p: usize| -> Deg {
        if graded {
            n.degree(p)
        } else {
            Vec::new()
        }
    };
    let n_cols: Vec<Vec<SparseVec>> = (0..d).map(|t| (0..dn).map(|q| n.basis_action(t).column(q)).collect()).collect();
    let mut out = Vec::with_capacity(upto);
    for i in 1..=upto {
        let src: &Stage = &res.stages()[i - 1];
        let tgt: &Stage = &res.stages()[i];
        if src.gen_degrees.is_empty() || tgt.gen_degrees.is_empty() {
            out.push(0);
            continue;
        }
        // occurrences of generator k of F_{i-1} inside the images of F_i
        let mut occ: Vec<Vec<(usize, usize, &Rat)>> = vec![Vec::new(); src.gen_degrees.len()];
        for (j, img) in tgt.images.iter().enumerate() {
            for (idx, c) in img {
                occ[idx / d].push((j, idx % d, c));
            }
        }
        let mut blocks: BTreeMap<Deg, Vec<SparseVec>> = BTreeMap::new();
        for (k, gk) in src.gen_degrees.iter().enumerate() {
            let gk = if graded { gk.clone() } else { Vec::new() };
            for q in 0..dn {
                let mut acc: BTreeMap<usize, Rat> = BTreeMap::new();
                for &(j, t, c) in &occ[k] {
                    for (p, x) in &n_cols[t][q] {
                        let key = j * dn + p;
                        let val = field.mul(c, x);
                        let e = acc.entry(key).or_insert_with(Rat::zero);
                        *e = field.add(e, &val);
                    }
                }
                let col: SparseVec = acc.into_iter().filter(|(_, x)| !x.is_zero()).collect();
                if !col.is_empty() {
                    blocks.entry(sub_deg(&n_deg(q), &gk)).or_default().push(col);
                }
            }
        }
        out.push(blocks.values().map(|cols| rank(field, cols)).sum());
    }
    out
}

/// `dim Ext^i_A(M, N)` for `i = 0..=bound` from an existing resolution of `M`.
pub fn ext_dims_from(res: &mut Resolution, n: &ModRep, bound: usize) -> Result<Vec<usize>> {
    if !same_algebra(res.algebra(), n.algebra()) {
        return Err(Error::Structural("modules live over different algebras".into()));
    }
    res.extend_to(bound + 1)?;
    let betti = res.betti();
    let ranks = cochain_ranks(res, n, bound + 1);
    Ok((0..=bound)
        .map(|i| {
            let before = if i == 0 { 0 } else { ranks[i - 1] };
            betti[i] * n.dim() - ranks[i] - before
        })
        .collect())
}

/// Probe depth used to pick the cheaper side of Matlis duality.
const PROBE: usize = 3;

fn probe_cost(m: &ModRep, n: &ModRep, bound: usize) -> Result<(Resolution, usize)> {
    let mut r = Resolution::start(m);
    r.extend_to(PROBE.min(bound + 1))?;
    let b = r.betti();
    // geometric extrapolation of the last two Betti numbers
    let last = *b.last().unwrap();
    let prev = if b.len() > 1 { b[b.len() - 2].max(1) } else { 1 };
    let growth = (last as f64 / prev as f64).max(1.0);
    let steps = (bound + 1).saturating_sub(b.len() - 1) as i32;
    let est = last as f64 * growth.powi(steps) * n.dim() as f64;
    Ok((r, est.min(usize::MAX as f64 / 4.0) as usize))
}

/// `dim Ext^i_A(M, N)` for `i = 0..=bound`.
pub fn ext_dims_with(m: &ModRep, n: &ModRep, bound: usize, route: ExtRoute) -> Result<Vec<usize>> {
    if !same_algebra(m.algebra(), n.algebra()) {
        return Err(Error::Structural("modules live over different algebras".into()));
    }
    match route {
        ExtRoute::Direct => ext_dims_from(&mut Resolution::start(m), n, bound),
        ExtRoute::Dual => ext_dims_from(&mut Resolution::start(&n.dual()), &m.dual(), bound),
        ExtRoute::Auto => {
            let (nd, md) = (n.dual(), m.dual());
            let (mut r1, c1) = probe_cost(m, n, bound)?;
            let (mut r2, c2) = probe_cost(&nd, &md, bound)?;
            if c1 <= c2 {
                ext_dims_from(&mut r1, n, bound)
            } else {
                ext_dims_from(&mut r2, &md, bound)
            }
        }
    }
}

pub fn ext_dims(m: &ModRep, n: &ModRep, bound: usize) -> Result<Vec<usize>> {
    ext_dims_with(m, n, bound, ExtRoute::Auto)
}

/// Betti numbers `β_0 .. β_trunc` of `M`.
pub fn betti_numbers(m: &ModRep, trunc: usize) -> Result<Vec<usize>> {
    let mut r = Resolution::start(m);
    r.extend_to(trunc)?;
    Ok(r.betti())
}

/// Betti numbers through `trunc`, stopping early once a free module would
/// exceed `ceiling`; the result may be shorter than `trunc + 1`.
pub fn betti_numbers_bounded(m: &ModRep, trunc: usize, ceiling: usize) -> Vec<usize> {
    let mut r = Resolution::with_ceiling(m, ceiling);
    for i in 1..=trunc {
        if r.extend_to(i).is_err() {
            break;
        }
    }
    r.betti()
}

/// Poincaré series `Σ β_i t^i` through `t^trunc`.
pub fn poincare_series(m: &ModRep, trunc: usize) -> Result<SeriesTrunc> {
    Ok(SeriesTrunc::from_usize(&betti_numbers(m, trunc)?, trunc))
}

/// Bass numbers `μ^i(N) = dim Ext^i(k, N)`, read off as the Betti numbers of `N^∨`.
pub fn bass_numbers(n: &ModRep, trunc: usize) -> Result<Vec<usize>> {
    betti_numbers(&n.dual(), trunc)
}

/// Bass series of the algebra itself: the Poincaré series of its dualizing module.
pub fn bass_series(a: &Arc<ArtinAlgebra>, trunc: usize) -> Result<SeriesTrunc> {
    poincare_series(&ModRep::dualizing_module(a), trunc)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SemidualizingReport {
    /// Whether every checked condition held.
    pub verdict: bool,
    pub hom_dim: usize,
    pub algebra_len: usize,
    /// The homothety `A -> Hom(C, C)` is injective iff `C` is faithful.
    pub nat_map_injective: bool,
    /// `dim Ext^i(C, C)` for `i = 1..=bound`.
    pub ext: Vec<usize>,
    pub bound: usize,
}

/// Checks `A ≅ Hom(C, C)` exactly and `Ext^i(C, C) = 0` for `1 <= i <= bound`.
pub fn is_semidualizing(c: &ModRep, bound: usize) -> Result<SemidualizingReport> {
    let nat_map_injective = c.is_faithful();
    let hom_dim = hom_space(c, c)?.len();
    let algebra_len = c.algebra().len();
    let dims = ext_dims(c, c, bound)?;
    debug_assert_eq!(dims[0], hom_dim);
    let ext = dims[1..].to_vec();
    let verdict = nat_map_injective && hom_dim == algebra_len && ext.iter().all(|&e| e == 0);
    Ok(SemidualizingReport { verdict, hom_dim, algebra_len, nat_map_injective, ext, bound })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::artin::{quotient_algebra, tensor_algebra};
    use crate::field::FieldSpec;
    use crate::groebner::IdealSpec;
    use crate::poly::PolyRing;

    fn alg(vars: &[&str], gens: &[&str]) -> Arc<ArtinAlgebra> {
        let r = PolyRing::new(vars, FieldSpec::Rationals).unwrap();
        Arc::new(quotient_algebra(&IdealSpec::parse(&r, gens).unwrap(), &FieldSpec::Rationals).unwrap())
    }

    fn square() -> Arc<ArtinAlgebra> {
        alg(&["x", "y"], &["x^2", "x*y", "y^2"])
    }

    #[test]
    fn ext_into_residue_field_is_betti() {
        let s = square();
        let k = ModRep::residue_field(&s);
        let w = ModRep::dualizing_module(&s);
        for m in [&k, &w] {
            let b = betti_numbers(m, 5).unwrap();
            for route in [ExtRoute::Direct, ExtRoute::Dual, ExtRoute::Auto] {
                assert_eq!(ext_dims_with(m, &k, 4, route).unwrap(), b[..5].to_vec());
            }
        }
    }

    #[test]
    fn ext_zero_is_hom() {
        let s = square();
        let mods = [ModRep::free(&s, 1), ModRep::residue_field(&s), ModRep::dualizing_module(&s)];
        for m in &mods {
            for n in &mods {
                let e = ext_dims_with(m, n, 2, ExtRoute::Direct).unwrap();
                assert_eq!(e[0], hom_space(m, n).unwrap().len());
                assert_eq!(ext_dims_with(m, n, 2, ExtRoute::Dual).unwrap(), e);
                let ug = ext_dims_with(&m.ungraded(), &n.ungraded(), 2, ExtRoute::Direct).unwrap();
                assert_eq!(ug, e);
            }
        }
    }

    #[test]
    fn bass_numbers_detect_gorenstein() {
        let a = alg(&["x", "y"], &["x^2", "y^2"]);
        let b = bass_series(&a, 4).unwrap();
        assert_eq!(b.to_i64().unwrap(), vec![1, 0, 0, 0, 0]);
        let s = square();
        // μ^i(S) = dim Ext^i(k, S), computed both ways
        let k = ModRep::residue_field(&s);
        let mu = ext_dims_with(&k, &ModRep::free(&s, 1), 4, ExtRoute::Direct).unwrap();
        assert_eq!(mu, bass_numbers(&ModRep::free(&s, 1), 4).unwrap());
        assert_eq!(mu, vec![2, 3, 6, 12, 24]);
    }

    #[test]
    fn semidualizing_modules_of_a_tensor_product() {
        let s = square();
        assert!(is_semidualizing(&ModRep::free(&s, 1), 4).unwrap().verdict);
        assert!(is_semidualizing(&ModRep::dualizing_module(&s), 4).unwrap().verdict);
        let rep = is_semidualizing(&ModRep::residue_field(&s), 2).unwrap();
        assert!(!rep.verdict && !rep.nat_map_injective);
        let s2 = Arc::new(tensor_algebra(&s, &s).unwrap());
        let a = ModRep::free(&s, 1);
        let w = ModRep::dualizing_module(&s);
        let aw = a.tensor_over(&w, &s2).unwrap();
        let rep = is_semidualizing(&aw, 4).unwrap();
        assert!(rep.verdict, "{rep:?}");
        assert_eq!(rep.hom_dim, 9);
    }

    #[test]
    fn gorenstein_and_dualizing_self_ext() {
        let d = alg(&["x"], &["x^2"]);
        let e = ext_dims(&ModRep::residue_field(&d), &ModRep::free(&d, 1), 4).unwrap();
        assert_eq!(e, vec![1, 0, 0, 0, 0]);
        let s = square();
        let w = ModRep::dualizing_module(&s);
        let e = ext_dims(&w, &w, 10).unwrap();
        assert_eq!(e[0], 3);
        assert!(e[1..].iter().all(|&x| x == 0));
    }
}
