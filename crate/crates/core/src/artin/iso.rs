use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::grading::sub_deg;
use super::module::{same_algebra, ModRep};
use crate::error::{Error, Result};
use crate::linalg::{kernel, Matrix, SparseVec};
use crate::rat::Rat;

/// Basis of `Hom_A(M, N)` as `dim N x dim M` matrices.
///
/// Solves `X ρ_M(x) = ρ_N(x) X` for every variable; when both modules are
/// graded the system splits by the degree shift of `X`.
pub fn hom_space(m: &ModRep, n: &ModRep) -> Result<Vec<Matrix>> {
    if !same_algebra(m.algebra(), n.algebra()) {
        return Err(Error::Structural("modules live over different algebras".into()));
    }
    let field = m.algebra().base().clone();
    let (dm, dn) = (m.dim(), n.dim());
    // unknown (p, q) is the entry X[p][q]
    let mut blocks: BTreeMap<Vec<i32>, Vec<(usize, usize)>> = BTreeMap::new();
    for p in 0..dn {
        for q in 0..dm {
            blocks.entry(sub_deg(&n.degree(p), &m.degree(q))).or_default().push((p, q));
        }
    }
    let mut out = Vec::new();
    let nv = m.algebra().nvars();
    for unknowns in blocks.values() {
        // equation row (v, i, j) of X ρ_M(v) - ρ_N(v) X
        let cols: Vec<SparseVec> = unknowns
            .iter()
            .map(|&(p, q)| {
                let mut acc: BTreeMap<usize, Rat> = BTreeMap::new();
                for v in 0..nv {
                    for (j, x) in m.actions()[v].row(q) {
                        let r = (v * dn + p) * dm + j;
                        let e = acc.entry(r).or_insert_with(Rat::zero);
                        *e = field.add(e, &x);
                    }
                    for (i, x) in n.actions()[v].column(p) {
                        let r = (v * dn + i) * dm + q;
                        let e = acc.entry(r).or_insert_with(Rat::zero);
                        *e = field.sub(e, &x);
                    }
                }
                acc.into_iter().filter(|(_, x)| !x.is_zero()).collect()
            })
            .collect();
        for sol in kernel(&field, &cols) {
            let mut x = Matrix::zeros(dn, dm);
            for (u, c) in sol {
                let (p, q) = unknowns[u];
                x.set(p, q, c);
            }
            out.push(x);
        }
    }
    Ok(out)
}

/// Cheap isomorphism invariants: for every set `S` of variables the
/// dimensions of `S M` and `(0 :_M S)`.
pub fn fingerprint(m: &ModRep) -> Vec<(usize, usize)> {
    let nv = m.algebra().nvars();
    let subsets: Vec<Vec<usize>> = if nv <= 8 {
        (0..1u32 << nv).map(|mask| (0..nv).filter(|i| mask & (1 << i) != 0).collect()).collect()
    } else {
        let mut s: Vec<Vec<usize>> = (0..nv).map(|i| vec![i]).collect();
        s.push((0..nv).collect());
        s
    };
    subsets.iter().map(|s| (m.dim_image_of_vars(s), m.dim_annihilated_by_vars(s))).collect()
}

#[derive(Clone, Debug)]
pub struct IsoConfig {
    pub seed: u64,
    pub random_tries: usize,
    /// Largest number of grid points evaluated by the exact fallback.
    pub grid_budget: usize,
}

impl Default for IsoConfig {
    fn default() -> Self {
        IsoConfig { seed: 0, random_tries: 24, grid_budget: 4096 }
    }
}

pub fn is_isomorphic(m: &ModRep, n: &ModRep) -> Result<bool> {
    is_isomorphic_with(m, n, &IsoConfig::default())
}

/// Decides `M ≅ N` by looking for an invertible element of `Hom_A(M, N)`.
///
/// Invariants are compared first. Then seeded random combinations of a
/// Hom basis are tested with exact determinants. If none is invertible,
/// the determinant of the general element is a polynomial of degree at
/// most `dim` in each coefficient, so it vanishes identically iff it
/// vanishes on a grid with `dim + 1` values per coefficient; that grid is
/// evaluated when it fits the budget, and otherwise the answer is
/// inconclusive.
pub fn is_isomorphic_with(m: &ModRep, n: &ModRep, cfg: &IsoConfig) -> Result<bool> {
    if !same_algebra(m.algebra(), n.algebra()) {
        return Err(Error::Structural("modules live over different algebras".into()));
    }
    if m.dim() != n.dim() || m.generator_count() != n.generator_count() {
        return Ok(false);
    }
    if m.dim() == 0 {
        return Ok(true);
    }
    if fingerprint(m) != fingerprint(n) {
        return Ok(false);
    }
    let field = m.algebra().base().clone();
    let hom = hom_space(m, n)?;
    if hom.is_empty() || hom.len() != hom_space(m, m)?.len() || hom.len() != hom_space(n, n)?.len() {
        return Ok(false);
    }
    let combine = |coeffs: &[i64]| -> Matrix {
        let mut acc = Matrix::zeros(n.dim(), m.dim());
        for (b, &c) in hom.iter().zip(coeffs) {
            if c != 0 {
                acc = acc.add(&b.scale(&field.from_i64(c), &field), &field);
            }
        }
        acc
    };
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for _ in 0..cfg.random_tries {
        let coeffs: Vec<i64> = (0..hom.len()).map(|_| rng.gen_range(-64..=64)).collect();
        if combine(&coeffs).is_invertible(&field) {
            return Ok(true);
        }
    }
    let per_axis = m.dim() + 1;
    let p = field.characteristic();
    let points = (per_axis as f64).powi(hom.len() as i32);
    if (p != 0 && (p as usize) < per_axis) || points > cfg.grid_budget as f64 {
        return Err(Error::Inconclusive(format!(
            "no invertible map among {} random elements of a {}-dimensional Hom space",
            cfg.random_tries,
            hom.len()
        )));
    }
    let mut idx = vec![0usize; hom.len()];
    loop {
        let coeffs: Vec<i64> = idx.iter().map(|&i| i as i64).collect();
        if combine(&coeffs).is_invertible(&field) {
            return Ok(true);
        }
        let mut k = 0;
        loop {
            if k == idx.len() {
                return Ok(false);
            }
            idx[k] += 1;
            if idx[k] < per_axis {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::artin::{quotient_algebra, ArtinAlgebra};
    use crate::field::FieldSpec;
    use crate::groebner::IdealSpec;
    use crate::poly::PolyRing;
    use std::sync::Arc;

    fn alg(vars: &[&str], gens: &[&str]) -> Arc<ArtinAlgebra> {
        let r = PolyRing::new(vars, FieldSpec::Rationals).unwrap();
        Arc::new(quotient_algebra(&IdealSpec::parse(&r, gens).unwrap(), &FieldSpec::Rationals).unwrap())
    }

    fn square() -> Arc<ArtinAlgebra> {
        alg(&["x", "y"], &["x^2", "x*y", "y^2"])
    }

    #[test]
    fn identity_and_invariant_mismatch() {
        let s = square();
        let a = ModRep::free(&s, 1);
        let w = ModRep::dualizing_module(&s);
        assert!(is_isomorphic(&a, &a).unwrap());
        assert!(is_isomorphic(&w, &w).unwrap());
        assert!(!is_isomorphic(&a, &w).unwrap());
    }

    #[test]
    fn gorenstein_algebra_is_its_own_dual() {
        let a = alg(&["x"], &["x^3"]);
        assert!(is_isomorphic(&ModRep::free(&a, 1), &ModRep::dualizing_module(&a)).unwrap());
        // and the ungraded check agrees
        assert!(is_isomorphic(&ModRep::free(&a, 1).ungraded(), &ModRep::dualizing_module(&a).ungraded()).unwrap());
    }

    #[test]
    fn hom_dims() {
        let s = square();
        let a = ModRep::free(&s, 1);
        let k = ModRep::residue_field(&s);
        let w = ModRep::dualizing_module(&s);
        assert_eq!(hom_space(&a, &a).unwrap().len(), 3);
        assert_eq!(hom_space(&k, &a).unwrap().len(), 2);
        assert_eq!(hom_space(&a, &k).unwrap().len(), 1);
        assert_eq!(hom_space(&w, &w).unwrap().len(), 3);
        for h in hom_space(&w, &a).unwrap() {
            for (x, y) in w.actions().iter().zip(a.actions()) {
                assert_eq!(h.mul(x, s.base()), y.mul(&h, s.base()));
            }
        }
    }

    #[test]
    fn mixed_tensor_choices_are_distinct() {
        let s = square();
        let a = ModRep::free(&s, 1);
        let w = ModRep::dualizing_module(&s);
        let s2 = Arc::new(s.tensor(&s).unwrap());
        let aw = a.tensor_over(&w, &s2).unwrap();
        let wa = w.tensor_over(&a, &s2).unwrap();
        let ww = w.tensor_over(&w, &s2).unwrap();
        assert!(!is_isomorphic(&aw, &wa).unwrap());
        assert!(is_isomorphic(&ww, &ModRep::dualizing_module(&s2)).unwrap());
        // the same verdict without the invariant shortcut: the intertwiner space has no unit
        let hom = hom_space(&aw, &wa).unwrap();
        assert!(hom.iter().all(|h| !h.is_invertible(s.base())));
    }

    #[test]
    fn grid_fallback_and_budget() {
        // k[x]/(x^2) versus k ⊕ k: settled by invariants before any search
        let a = alg(&["x"], &["x^2"]);
        let free = ModRep::free(&a, 1).ungraded();
        let split = ModRep::new(a.clone(), vec![Matrix::zeros(2, 2)], None).unwrap();
        let cfg = IsoConfig { seed: 1, random_tries: 0, grid_budget: 100 };
        assert!(!is_isomorphic_with(&free, &split, &cfg).unwrap());
        let cfg_small = IsoConfig { seed: 1, random_tries: 0, grid_budget: 1 };
        // with no random tries the grid alone finds the identity-like unit
        assert!(is_isomorphic_with(&free, &free, &cfg).unwrap());
        assert!(matches!(is_isomorphic_with(&free, &free, &cfg_small), Err(Error::Inconclusive(_))));
    }
}
