use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use super::grading::{add_deg, Deg};
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::groebner::{buchberger, IdealSpec};
use crate::linalg::{axpy_into, rank, sparse_scale, to_sparse, Echelon, Matrix, SparseVec};
use crate::poly::{Monomial, MonomialOrder};
use crate::rat::Rat;

/// A finite-dimensional local algebra given by a monomial basis and
/// structure constants.
#[derive(Clone, PartialEq, Eq)]
pub struct ArtinAlgebra {
    base: FieldSpec,
    vars: Vec<String>,
    basis: Vec<Monomial>,
    /// `mult[i][j]` is `basis[i] * basis[j]` in basis coordinates.
    mult: Vec<Vec<SparseVec>>,
    /// Each variable in basis coordinates.
    var_elems: Vec<SparseVec>,
    degrees: Vec<Deg>,
    var_degrees: Vec<Deg>,
    source: Option<IdealSpec>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LocalInvariants {
    pub length: usize,
    pub edim: usize,
    pub socle_dim: usize,
    pub loewy_length: usize,
    pub gorenstein: bool,
}

impl fmt::Debug for ArtinAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ArtinAlgebra")
            .field("base", &self.base)
            .field("vars", &self.vars)
            .field("length", &self.basis.len())
            .finish()
    }
}

/// `k[vars] / I` for a cofinite ideal `I` inside the maximal ideal of the variables.
///
/// Monomial ideals get the fine grading by exponent vectors, other
/// homogeneous ideals the standard grading; anything else is ungraded.
pub fn quotient_algebra(ideal: &IdealSpec, base: &FieldSpec) -> Result<ArtinAlgebra> {
    let ring = ideal.ring();
    if !ring.field.compatible(base) {
        return Err(Error::Structural(format!("base {base} does not match the ring field {}", ring.field)));
    }
    let gb = buchberger(ideal, &MonomialOrder::grevlex(ring))?;
    if gb.is_unit_ideal() {
        return Err(Error::Structural("the unit ideal has a zero quotient".into()));
    }
    let basis = gb.quotient_basis(u32::MAX)?;
    let index: HashMap<Monomial, usize> = basis.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
    let coords = |m: &Monomial| -> SparseVec {
        let mut v: SparseVec = gb.reduce_monomial(m).into_iter().map(|(b, c)| (index[&b], c)).collect();
        v.sort_by_key(|e| e.0);
        v
    };
    let d = basis.len();
    let mut mult = vec![vec![Vec::new(); d]; d];
    for i in 0..d {
        for j in i..d {
            let p = coords(&basis[i].mul(&basis[j]));
            mult[j][i] = p.clone();
            mult[i][j] = p;
        }
    }
    let n = ring.nvars();
    let var_elems: Vec<SparseVec> = (0..n).map(|i| coords(&Monomial::var(n, i))).collect();
    let (degrees, var_degrees) = if ideal.monomial {
        (
            basis.iter().map(|m| m.0.iter().map(|&e| e as i32).collect()).collect(),
            (0..n).map(|i| Monomial::var(n, i).0.iter().map(|&e| e as i32).collect()).collect(),
        )
    } else if ideal.homogeneous {
        (basis.iter().map(|m| vec![m.degree() as i32]).collect(), vec![vec![1]; n])
    } else {
        (vec![Vec::new(); d], vec![Vec::new(); n])
    };
    let alg = ArtinAlgebra {
        base: base.clone(),
        vars: ring.vars.to_vec(),
        basis,
        mult,
        var_elems,
        degrees,
        var_degrees,
        source: Some(ideal.clone()),
    };
    alg.validate()?;
    Ok(alg)
}

impl ArtinAlgebra {
    /// The base field itself, as the algebra of length 1 in no variables.
    pub fn field(base: &FieldSpec) -> ArtinAlgebra {
        ArtinAlgebra {
            base: base.clone(),
            vars: Vec::new(),
            basis: vec![Monomial::one(0)],
            mult: vec![vec![vec![(0, Rat::one())]]],
            var_elems: Vec::new(),
            degrees: vec![Vec::new()],
            var_degrees: Vec::new(),
            source: None,
        }
    }

    fn validate(&self) -> Result<()> {
        let d = self.len();
        if !self.basis[0].is_one() || self.mult[0][0] != vec![(0, Rat::one())] {
            return Err(Error::Structural("basis[0] must be the unit".into()));
        }
        for i in 0..d {
            for j in 0..d {
                if self.mult[i][j] != self.mult[j][i] {
                    return Err(Error::Structural(format!("product of basis {i} and {j} is not commutative")));
                }
            }
            if self.mult[0][i] != vec![(i, Rat::one())] {
                return Err(Error::Structural("basis[0] is not a unit".into()));
            }
        }
        for i in 1..d {
            for j in 1..d {
                for k in 1..d {
                    let left = self.mul_vec(&self.mult[i][j], &[(k, Rat::one())]);
                    let right = self.mul_vec(&[(i, Rat::one())], &self.mult[j][k]);
                    if left != right {
                        return Err(Error::Structural(format!("associativity fails on basis {i}, {j}, {k}")));
                    }
                }
            }
        }
        // locality: the non-unit basis elements span a nilpotent ideal
        for i in 1..d {
            if self.mult[i].iter().skip(1).any(|p| p.iter().any(|(t, _)| *t == 0)) {
                return Err(Error::Structural("algebra is not local".into()));
            }
        }
        for (i, v) in self.var_elems.iter().enumerate() {
            if v.iter().any(|(t, _)| *t == 0) {
                return Err(Error::Structural(format!("variable {} is not in the maximal ideal", self.vars[i])));
            }
        }
        if self.loewy_length() > d {
            return Err(Error::Structural("maximal ideal is not nilpotent".into()));
        }
        Ok(())
    }

    pub fn base(&self) -> &FieldSpec {
        &self.base
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn source(&self) -> Option<&IdealSpec> {
        self.source.as_ref()
    }

    pub fn degrees(&self) -> &[Deg] {
        &self.degrees
    }

    pub fn var_degrees(&self) -> &[Deg] {
        &self.var_degrees
    }

    pub fn var_elem(&self, i: usize) -> &SparseVec {
        &self.var_elems[i]
    }

    pub fn product(&self, i: usize, j: usize) -> &SparseVec {
        &self.mult[i][j]
    }

    /// Product of two elements in basis coordinates.
    pub fn mul_vec(&self, a: &[(usize, Rat)], b: &[(usize, Rat)]) -> SparseVec {
        let mut acc = std::collections::BTreeMap::new();
        for (i, x) in a {
            for (j, y) in b {
                let c = self.base.mul(x, y);
                axpy_into(&self.base, &mut acc, &c, &self.mult[*i][*j]);
            }
        }
        to_sparse(acc)
    }

    /// Matrix of multiplication by basis element `i`.
    pub fn left_mult(&self, i: usize) -> Matrix {
        Matrix::from_sparse_cols(self.len(), &self.mult[i])
    }

    /// Matrix of multiplication by an element.
    pub fn left_mult_by(&self, a: &[(usize, Rat)]) -> Matrix {
        let cols: Vec<SparseVec> = (0..self.len()).map(|j| self.mul_vec(a, &[(j, Rat::one())])).collect();
        Matrix::from_sparse_cols(self.len(), &cols)
    }

    /// Basis of `m^p` as sparse vectors (`m^0` is the whole algebra).
    pub fn mmax_power(&self, p: usize) -> Vec<SparseVec> {
        let mut cur: Vec<SparseVec> = (0..self.len()).map(|i| vec![(i, Rat::one())]).collect();
        for _ in 0..p {
            let mut ech = Echelon::new(&self.base);
            let mut next = Vec::new();
            for v in &cur {
                for x in &self.var_elems {
                    let w = self.mul_vec(x, v);
                    if ech.insert(&w) {
                        next.push(w);
                    }
                }
            }
            cur = next;
            if cur.is_empty() {
                break;
            }
        }
        cur
    }

    /// Smallest `L` with `m^L = 0`.
    pub fn loewy_length(&self) -> usize {
        let mut p = 0;
        let mut cur: Vec<SparseVec> = vec![vec![(0, Rat::one())]];
        while !cur.is_empty() {
            if p > self.len() {
                return p;
            }
            let mut ech = Echelon::new(&self.base);
            let mut next = Vec::new();
            for v in &cur {
                for x in &self.var_elems {
                    let w = self.mul_vec(x, v);
                    if ech.insert(&w) {
                        next.push(w);
                    }
                }
            }
            cur = next;
            p += 1;
        }
        p
    }

    pub fn mmax_sq_dim(&self) -> usize {
        let d = self.len();
        let prods: Vec<SparseVec> =
            (1..d).flat_map(|i| (1..d).map(move |j| (i, j))).map(|(i, j)| self.mult[i][j].clone()).collect();
        rank(&self.base, &prods)
    }

    pub fn edim(&self) -> usize {
        self.len() - 1 - self.mmax_sq_dim()
    }

    /// Socle as the common kernel of multiplication by the variables.
    pub fn socle(&self) -> Vec<Vec<Rat>> {
        self.common_kernel(self.var_elems.iter().map(|x| self.left_mult_by(x)).collect())
    }

    /// Socle as the common kernel of multiplication by every basis element of `m`.
    pub fn socle_of_mmax(&self) -> Vec<Vec<Rat>> {
        self.common_kernel((1..self.len()).map(|i| self.left_mult(i)).collect())
    }

    fn common_kernel(&self, maps: Vec<Matrix>) -> Vec<Vec<Rat>> {
        let d = self.len();
        let mut stacked = Matrix::zeros(maps.len() * d, d);
        for (k, m) in maps.iter().enumerate() {
            for i in 0..d {
                for j in 0..d {
                    stacked.set(k * d + i, j, m.get(i, j).clone());
                }
            }
        }
        stacked.nullspace(&self.base)
    }

    pub fn local_invariants(&self) -> LocalInvariants {
        let socle_dim = self.socle().len();
        LocalInvariants {
            length: self.len(),
            edim: self.edim(),
            socle_dim,
            loewy_length: self.loewy_length(),
            gorenstein: socle_dim == 1,
        }
    }

    /// The same algebra over `k((tag))`.
    pub fn base_change_fraction_field(&self, tag: &str) -> ArtinAlgebra {
        ArtinAlgebra { base: FieldSpec::fraction_field(tag), ..self.clone() }
    }

    /// Same algebra with a chosen base tag (used when identifying copies).
    pub fn with_base(&self, base: &FieldSpec) -> Result<ArtinAlgebra> {
        if !self.base.compatible(base) {
            return Err(Error::Structural(format!("cannot move from {} to {base}", self.base)));
        }
        Ok(ArtinAlgebra { base: base.clone(), ..self.clone() })
    }

    /// `A ⊗_k B`. Variables of `B` that clash with names in `A` get a `_r` suffix.
    pub fn tensor(&self, other: &ArtinAlgebra) -> Result<ArtinAlgebra> {
        if self.base != other.base {
            return Err(Error::Structural(format!("base fields differ: {} vs {}", self.base, other.base)));
        }
        let (da, db) = (self.len(), other.len());
        let mut vars = self.vars.clone();
        for v in &other.vars {
            let mut name = v.clone();
            while vars.contains(&name) {
                name.push_str("_r");
            }
            vars.push(name);
        }
        let idx = |i: usize, j: usize| i * db + j;
        let mut basis = Vec::with_capacity(da * db);
        let mut degrees = Vec::with_capacity(da * db);
        for i in 0..da {
            for j in 0..db {
                let mut e = self.basis[i].0.clone();
                e.extend(&other.basis[j].0);
                basis.push(Monomial(e));
                degrees.push(concat(&self.degrees[i], &other.degrees[j]));
            }
        }
        let kron = |a: &SparseVec, b: &SparseVec| -> SparseVec {
            let mut out: SparseVec = Vec::with_capacity(a.len() * b.len());
            for (i, x) in a {
                for (j, y) in b {
                    out.push((idx(*i, *j), self.base.mul(x, y)));
                }
            }
            out.sort_by_key(|e| e.0);
            out
        };
        let mut mult = vec![vec![Vec::new(); da * db]; da * db];
        for i1 in 0..da {
            for j1 in 0..db {
                for i2 in 0..da {
                    for j2 in 0..db {
                        mult[idx(i1, j1)][idx(i2, j2)] = kron(&self.mult[i1][i2], &other.mult[j1][j2]);
                    }
                }
            }
        }
        let one_a: SparseVec = vec![(0, Rat::one())];
        let one_b: SparseVec = vec![(0, Rat::one())];
        let mut var_elems: Vec<SparseVec> = self.var_elems.iter().map(|x| kron(x, &one_b)).collect();
        var_elems.extend(other.var_elems.iter().map(|y| kron(&one_a, y)));
        let zero_b = vec![0; other.degrees[0].len()];
        let zero_a = vec![0; self.degrees[0].len()];
        let mut var_degrees: Vec<Deg> = self.var_degrees.iter().map(|g| concat(g, &zero_b)).collect();
        var_degrees.extend(other.var_degrees.iter().map(|g| concat(&zero_a, g)));
        let alg =
            ArtinAlgebra { base: self.base.clone(), vars, basis, mult, var_elems, degrees, var_degrees, source: None };
        alg.validate()?;
        Ok(alg)
    }

    /// Checks that every structure constant respects the grading.
    pub fn is_graded_consistently(&self) -> bool {
        let d = self.len();
        (0..d).all(|i| {
            (0..d).all(|j| {
                self.mult[i][j].iter().all(|(t, _)| self.degrees[*t] == add_deg(&self.degrees[i], &self.degrees[j]))
            })
        }) && self.var_elems.iter().zip(&self.var_degrees).all(|(v, g)| v.iter().all(|(t, _)| self.degrees[*t] == *g))
    }

    /// Scales a sparse element; convenience for callers building modules.
    pub fn scale(&self, v: &[(usize, Rat)], c: &Rat) -> SparseVec {
        sparse_scale(&self.base, v, c)
    }
}

fn concat(a: &[i32], b: &[i32]) -> Deg {
    let mut v = a.to_vec();
    v.extend_from_slice(b);
    v
}
