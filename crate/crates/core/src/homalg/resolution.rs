use std::collections::BTreeMap;
use std::sync::Arc;

use crate::artin::grading::{add_deg, sub_deg, Deg};
use crate::artin::{ArtinAlgebra, ModRep};
use crate::error::{Error, Result};
use crate::linalg::{axpy_into, to_sparse, Echelon, SparseVec};
use crate::rat::Rat;

/// One free module `F_i` of a resolution: generator degrees and the image
/// of each generator in `F_{i-1}` (or in the module, for `i = 0`).
///
/// Vectors in a free module `A^b` use the index `generator * len(A) + basis`.
#[derive(Clone, Debug)]
pub struct Stage {
    pub gen_degrees: Vec<Deg>,
    pub images: Vec<SparseVec>,
}

/// A minimal free resolution computed degree by degree.
#[derive(Clone, Debug)]
pub struct Resolution {
    module: ModRep,
    algebra: Arc<ArtinAlgebra>,
    graded: bool,
    stages: Vec<Stage>,
    /// Largest vector-space dimension of a free module that will be built.
    ceiling: usize,
    /// Columns of `ρ_M(b_t)` for every basis element `b_t`.
    module_cols: Vec<Vec<SparseVec>>,
}

pub const DEFAULT_CEILING: usize = 4_000_000;

impl Resolution {
    /// Starts a resolution of `m`; only `F_0 -> M` is built here.
    pub fn start(m: &ModRep) -> Resolution {
        Resolution::with_ceiling(m, DEFAULT_CEILING)
    }

    pub fn with_ceiling(m: &ModRep, ceiling: usize) -> Resolution {
        let algebra = m.algebra().clone();
        let module_cols =
            (0..algebra.len()).map(|t| (0..m.dim()).map(|j| m.basis_action(t).column(j)).collect()).collect();
        let mut r = Resolution {
            module: m.clone(),
            graded: m.degrees().is_some(),
            algebra,
            stages: Vec::new(),
            ceiling,
            module_cols,
        };
        let first = r.first_stage();
        r.stages.push(first);
        r
    }

    pub fn module(&self) -> &ModRep {
        &self.module
    }

    pub fn algebra(&self) -> &Arc<ArtinAlgebra> {
        &self.algebra
    }

    pub fn is_graded(&self) -> bool {
        self.graded
    }

    pub fn stages(&self) -> &[Stage] {
        &self.stages
    }

    /// Betti numbers `β_0 .. β_N` computed so far.
    pub fn betti(&self) -> Vec<usize> {
        self.stages.iter().map(|s| s.gen_degrees.len()).collect()
    }

    pub fn trunc(&self) -> usize {
        self.stages.len() - 1
    }

    pub(crate) fn basis_degree(&self, t: usize) -> Deg {
        if self.graded {
            self.algebra.degrees()[t].clone()
        } else {
            Vec::new()
        }
    }

    pub(crate) fn var_degree(&self, v: usize) -> Deg {
        if self.graded {
            self.algebra.var_degrees()[v].clone()
        } else {
            Vec::new()
        }
    }

    fn module_degree(&self, i: usize) -> Deg {
        if self.graded {
            self.module.degree(i)
        } else {
            Vec::new()
        }
    }

    /// Generators of `M`: per degree, standard basis vectors completing `mM`.
    fn first_stage(&self) -> Stage {
        let m = &self.module;
        let field = self.algebra.base();
        let mut by_deg: BTreeMap<Deg, Vec<usize>> = BTreeMap::new();
        for i in 0..m.dim() {
            by_deg.entry(self.module_degree(i)).or_default().push(i);
        }
        let mut images_by_deg: BTreeMap<Deg, Vec<SparseVec>> = BTreeMap::new();
        for a in m.actions() {
            for j in 0..m.dim() {
                let c = a.column(j);
                if let Some((i, _)) = c.first() {
                    images_by_deg.entry(self.module_degree(*i)).or_default().push(c);
                }
            }
        }
        let mut stage = Stage { gen_degrees: Vec::new(), images: Vec::new() };
        for (deg, idx) in by_deg {
            let mut ech = Echelon::new(field);
            for v in images_by_deg.get(&deg).into_iter().flatten() {
                ech.insert(v);
            }
            for i in idx {
                let e = vec![(i, Rat::one())];
                if ech.insert(&e) {
                    stage.gen_degrees.push(deg.clone());
                    stage.images.push(e);
                }
            }
        }
        stage
    }

    /// `b_t * v` for `v` in the target of stage `i`.
    fn act_on_target(&self, i: usize, t: usize, v: &[(usize, Rat)]) -> SparseVec {
        let field = self.algebra.base();
        let mut acc = BTreeMap::new();
        if i == 0 {
            for (j, c) in v {
                axpy_into(field, &mut acc, c, &self.module_cols[t][*j]);
            }
        } else {
            let d = self.algebra.len();
            for (idx, c) in v {
                let (g, s) = (idx / d, idx % d);
                for (u, x) in self.algebra.product(t, s) {
                    let val = field.mul(c, x);
                    let key = g * d + u;
                    match acc.get_mut(&key) {
                        Some(e) => {
                            let sum = field.add(e, &val);
                            if sum.is_zero() {
                                acc.remove(&key);
                            } else {
                                *e = sum;
                            }
                        }
                        None => {
                            acc.insert(key, val);
                        }
                    }
                }
            }
        }
        to_sparse(acc)
    }

    /// `x_v * w` for `w` in a free module.
    fn var_on_free(&self, v: usize, w: &[(usize, Rat)]) -> SparseVec {
        let field = self.algebra.base();
        let d = self.algebra.len();
        let mut acc = BTreeMap::new();
        for (idx, c) in w {
            let (g, s) = (idx / d, idx % d);
            for (t, x) in self.algebra.var_elem(v) {
                let coef = field.mul(c, x);
                let shifted: SparseVec =
                    self.algebra.product(*t, s).iter().map(|(u, y)| (g * d + u, y.clone())).collect();
                axpy_into(field, &mut acc, &coef, &shifted);
            }
        }
        to_sparse(acc)
    }

    /// Builds `F_{i+1}` from the kernel of `F_i -> F_{i-1}`.
    fn next_stage(&self) -> Result<Stage> {
        let i = self.stages.len() - 1;
        let prev = &self.stages[i];
        let d = self.algebra.len();
        let field = self.algebra.base();
        let size = prev.gen_degrees.len() * d;
        if size > self.ceiling {
            return Err(Error::LimitExceeded(format!(
                "free module of dimension {size} exceeds the ceiling {}",
                self.ceiling
            )));
        }
        // columns of F_i -> target, grouped by degree
        let mut blocks: BTreeMap<Deg, Vec<usize>> = BTreeMap::new();
        for (j, g) in prev.gen_degrees.iter().enumerate() {
            for t in 0..d {
                blocks.entry(add_deg(g, &self.basis_degree(t))).or_default().push(j * d + t);
            }
        }
        let mut kernels: BTreeMap<Deg, Vec<SparseVec>> = BTreeMap::new();
        for (deg, cols) in &blocks {
            let mut ech = Echelon::with_tracking(field);
            let mut ker = Vec::new();
            for (local, &global) in cols.iter().enumerate() {
                let (j, t) = (global / d, global % d);
                let img = self.act_on_target(i, t, &prev.images[j]);
                if let Some(rel) = ech.insert_tagged(&img, vec![(local, Rat::one())]) {
                    let mut v: SparseVec = rel.into_iter().map(|(l, c)| (cols[l], c)).collect();
                    v.sort_by_key(|e| e.0);
                    ker.push(v);
                }
            }
            if !ker.is_empty() {
                kernels.insert(deg.clone(), ker);
            }
        }
        let mut stage = Stage { gen_degrees: Vec::new(), images: Vec::new() };
        for (deg, ker) in &kernels {
            let mut ech = Echelon::new(field);
            for v in 0..self.algebra.nvars() {
                let below = sub_deg(deg, &self.var_degree(v));
                if let Some(lower) = kernels.get(&below) {
                    for w in lower {
                        ech.insert(&self.var_on_free(v, w));
                    }
                }
            }
            for w in ker {
                if ech.insert(w) {
                    stage.gen_degrees.push(deg.clone());
                    stage.images.push(w.clone());
                }
            }
        }
        Ok(stage)
    }

    /// Extends through `F_n`.
    pub fn extend_to(&mut self, n: usize) -> Result<()> {
        while self.stages.len() <= n {
            if self.stages.last().unwrap().gen_degrees.is_empty() {
                self.stages.push(Stage { gen_degrees: Vec::new(), images: Vec::new() });
                continue;
            }
            let s = self.next_stage()?;
            self.stages.push(s);
        }
        Ok(())
    }

    /// Whether every image lies in `m F` (no entry on the unit basis element).
    pub fn is_minimal(&self) -> bool {
        let d = self.algebra.len();
        self.stages.iter().skip(1).all(|s| s.images.iter().all(|v| v.iter().all(|(idx, _)| idx % d != 0)))
    }
}

/// Minimal free resolution through `F_n`.
pub fn minimal_resolution(m: &ModRep, n: usize) -> Result<Resolution> {
    let mut r = Resolution::start(m);
    r.extend_to(n)?;
    Ok(r)
}
