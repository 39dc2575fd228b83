use std::sync::Arc;

use super::algebra::ArtinAlgebra;
use super::grading::{add_deg, neg_deg, Deg};
use crate::error::{Error, Result};
use crate::linalg::{rank, Matrix, SparseVec};
use crate::rat::Rat;

/// A finitely generated module over an [`ArtinAlgebra`], as a vector space
/// with one action matrix per algebra variable.
#[derive(Clone, Debug)]
pub struct ModRep {
    algebra: Arc<ArtinAlgebra>,
    dim: usize,
    actions: Vec<Matrix>,
    /// Action of every basis element of the algebra.
    basis_actions: Vec<Matrix>,
    degrees: Option<Vec<Deg>>,
}

pub fn same_algebra(a: &Arc<ArtinAlgebra>, b: &Arc<ArtinAlgebra>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl ModRep {
    /// Validates that the matrices commute and respect every relation of the algebra.
    pub fn new(algebra: Arc<ArtinAlgebra>, actions: Vec<Matrix>, degrees: Option<Vec<Deg>>) -> Result<ModRep> {
        let field = algebra.base().clone();
        if actions.len() != algebra.nvars() {
            return Err(Error::Structural(format!(
                "expected {} action matrices, got {}",
                algebra.nvars(),
                actions.len()
            )));
        }
        let dim = actions.first().map_or_else(|| degrees.as_ref().map_or(0, Vec::len), Matrix::nrows);
        if actions.iter().any(|m| m.nrows() != dim || m.ncols() != dim) {
            return Err(Error::Structural("action matrices must be square of one size".into()));
        }
        if algebra.nvars() == 0 && degrees.is_none() {
            return Err(Error::Structural(
                "a module over the field needs explicit degrees to fix its dimension".into(),
            ));
        }
        for (i, a) in actions.iter().enumerate() {
            for b in &actions[i + 1..] {
                if a.mul(b, &field) != b.mul(a, &field) {
                    return Err(Error::Structural("action matrices do not commute".into()));
                }
            }
        }
        let basis_actions: Vec<Matrix> = algebra
            .basis()
            .iter()
            .map(|m| {
                let mut acc = Matrix::identity(dim);
                for (v, &e) in m.0.iter().enumerate() {
                    for _ in 0..e {
                        acc = actions[v].mul(&acc, &field);
                    }
                }
                acc
            })
            .collect();
        let combine = |v: &SparseVec| -> Matrix {
            let mut acc = Matrix::zeros(dim, dim);
            for (t, c) in v {
                acc = acc.add(&basis_actions[*t].scale(c, &field), &field);
            }
            acc
        };
        for (v, a) in actions.iter().enumerate() {
            if combine(algebra.var_elem(v)) != *a {
                return Err(Error::Structural(format!("action of {} violates a linear relation", algebra.vars()[v])));
            }
        }
        let d = algebra.len();
        for i in 1..d {
            for j in i..d {
                if basis_actions[i].mul(&basis_actions[j], &field) != combine(algebra.product(i, j)) {
                    return Err(Error::Structural("action matrices violate a relation of the algebra".into()));
                }
            }
        }
        if let Some(degs) = &degrees {
            if degs.len() != dim {
                return Err(Error::Structural("one degree per basis vector is required".into()));
            }
            let width = algebra.degrees()[0].len();
            if degs.iter().any(|g| g.len() != width) {
                return Err(Error::Structural("module degrees do not match the algebra grading".into()));
            }
            for (v, a) in actions.iter().enumerate() {
                for j in 0..dim {
                    for (i, _) in a.column(j) {
                        if degs[i] != add_deg(&degs[j], &algebra.var_degrees()[v]) {
                            return Err(Error::Structural("action is not homogeneous for the given degrees".into()));
                        }
                    }
                }
            }
        }
        Ok(ModRep { algebra, dim, actions, basis_actions, degrees })
    }

    pub fn free(algebra: &Arc<ArtinAlgebra>, rank: usize) -> ModRep {
        let field = algebra.base();
        let actions: Vec<Matrix> = (0..algebra.nvars())
            .map(|v| Matrix::identity(rank).kron(&algebra.left_mult_by(algebra.var_elem(v)), field))
            .collect();
        let degrees: Vec<Deg> = (0..rank).flat_map(|_| algebra.degrees().iter().cloned()).collect();
        ModRep::new(algebra.clone(), actions, Some(degrees)).expect("free modules are valid")
    }

    pub fn residue_field(algebra: &Arc<ArtinAlgebra>) -> ModRep {
        let actions = vec![Matrix::zeros(1, 1); algebra.nvars()];
        let zero = vec![0; algebra.degrees()[0].len()];
        ModRep::new(algebra.clone(), actions, Some(vec![zero])).expect("the residue field is a module")
    }

    /// `Hom_k(A, k)` with the contragredient action.
    pub fn dualizing_module(algebra: &Arc<ArtinAlgebra>) -> ModRep {
        ModRep::free(algebra, 1).dual()
    }

    /// `Hom_k(M, k)`: transposed actions and negated degrees.
    pub fn dual(&self) -> ModRep {
        let actions = self.actions.iter().map(Matrix::transpose).collect();
        let degrees = self.degrees.as_ref().map(|d| d.iter().map(|g| neg_deg(g)).collect());
        ModRep::new(self.algebra.clone(), actions, degrees).expect("duals of modules are modules")
    }

    pub fn algebra(&self) -> &Arc<ArtinAlgebra> {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn actions(&self) -> &[Matrix] {
        &self.actions
    }

    pub fn basis_action(&self, t: usize) -> &Matrix {
        &self.basis_actions[t]
    }

    pub fn degrees(&self) -> Option<&[Deg]> {
        self.degrees.as_deref()
    }

    /// Degree of basis vector `i`, empty when ungraded.
    pub fn degree(&self, i: usize) -> Deg {
        self.degrees.as_ref().map_or_else(Vec::new, |d| d[i].clone())
    }

    /// Basis of `S M` where `S` lists variable indices.
    pub fn image_of_vars(&self, vars: &[usize]) -> Vec<SparseVec> {
        vars.iter().flat_map(|&v| (0..self.dim).map(move |j| self.actions[v].column(j))).collect()
    }

    /// `dim_k (S M)` for a set of variables `S`.
    pub fn dim_image_of_vars(&self, vars: &[usize]) -> usize {
        rank(self.algebra.base(), &self.image_of_vars(vars))
    }

    /// `dim_k (0 :_M S)`.
    pub fn dim_annihilated_by_vars(&self, vars: &[usize]) -> usize {
        let rows: Vec<SparseVec> =
            vars.iter().flat_map(|&v| (0..self.dim).map(move |i| self.actions[v].row(i))).collect();
        self.dim - rank(self.algebra.base(), &rows)
    }

    /// Minimal number of generators, `dim M / mM`.
    pub fn generator_count(&self) -> usize {
        let all: Vec<usize> = (0..self.algebra.nvars()).collect();
        self.dim - self.dim_image_of_vars(&all)
    }

    /// `M ⊗_k N` over `A ⊗_k B`.
    pub fn tensor(&self, other: &ModRep) -> Result<ModRep> {
        let ab = Arc::new(self.algebra.tensor(&other.algebra)?);
        self.tensor_over(other, &ab)
    }

    /// Like [`ModRep::tensor`] but over an already built tensor algebra, so
    /// several products share one algebra.
    pub fn tensor_over(&self, other: &ModRep, ab: &Arc<ArtinAlgebra>) -> Result<ModRep> {
        let field = self.algebra.base();
        if ab.nvars() != self.algebra.nvars() + other.algebra.nvars()
            || ab.len() != self.algebra.len() * other.algebra.len()
        {
            return Err(Error::Structural("target is not the tensor algebra of the two factors".into()));
        }
        let (im, inn) = (Matrix::identity(self.dim), Matrix::identity(other.dim));
        let mut actions: Vec<Matrix> = self.actions.iter().map(|a| a.kron(&inn, field)).collect();
        actions.extend(other.actions.iter().map(|b| im.kron(b, field)));
        let degrees = match (&self.degrees, &other.degrees) {
            (Some(a), Some(b)) => Some(
                a.iter()
                    .flat_map(|x| {
                        b.iter().map(move |y| {
                            let mut g = x.clone();
                            g.extend(y);
                            g
                        })
                    })
                    .collect(),
            ),
            _ => None,
        };
        ModRep::new(ab.clone(), actions, degrees)
    }

    /// Same module with the grading forgotten.
    pub fn ungraded(&self) -> ModRep {
        ModRep { degrees: None, ..self.clone() }
    }

    /// Whether `a ↦ (multiplication by a)` is injective on the algebra.
    pub fn is_faithful(&self) -> bool {
        let vecs: Vec<SparseVec> = self
            .basis_actions
            .iter()
            .map(|m| {
                let mut v = Vec::new();
                for i in 0..self.dim {
                    for (j, x) in m.row(i) {
                        v.push((i * self.dim + j, x));
                    }
                }
                v
            })
            .collect();
        rank(self.algebra.base(), &vecs) == self.algebra.len()
    }

    /// Action of an algebra element given in basis coordinates.
    pub fn action_of_element(&self, a: &[(usize, Rat)]) -> Matrix {
        let field = self.algebra.base();
        let mut acc = Matrix::zeros(self.dim, self.dim);
        for (t, c) in a {
            acc = acc.add(&self.basis_actions[*t].scale(c, field), field);
        }
        acc
    }
}
