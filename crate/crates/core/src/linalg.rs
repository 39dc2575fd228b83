//! Exact linear algebra over a [`FieldSpec`]: an incremental sparse
//! echelon form (ranks, kernels, complements) and small dense matrices.

use std::collections::{BTreeMap, HashMap};

use crate::field::FieldSpec;
use crate::rat::Rat;

/// Sparse vector: `(index, value)` pairs sorted by index, no zeros.
pub type SparseVec = Vec<(usize, Rat)>;

pub fn sparse_scale(field: &FieldSpec, v: &[(usize, Rat)], c: &Rat) -> SparseVec {
    if c.is_zero() {
        return Vec::new();
    }
    v.iter().map(|(i, x)| (*i, field.mul(x, c))).filter(|(_, x)| !x.is_zero()).collect()
}

/// `acc += c * v`, dropping cancelled entries.
pub fn axpy_into(field: &FieldSpec, acc: &mut BTreeMap<usize, Rat>, c: &Rat, v: &[(usize, Rat)]) {
    for (i, x) in v {
        let t = field.mul(c, x);
        match acc.get_mut(i) {
            Some(e) => {
                let s = field.add(e, &t);
                if s.is_zero() {
                    acc.remove(i);
                } else {
                    *e = s;
                }
            }
            None => {
                if !t.is_zero() {
                    acc.insert(*i, t);
                }
            }
        }
    }
}

pub fn to_sparse(acc: BTreeMap<usize, Rat>) -> SparseVec {
    acc.into_iter().collect()
}

/// Row echelon form built one vector at a time.
///
/// Each stored row is monic at its smallest index (its pivot), so a single
/// left-to-right sweep reduces any vector. With tracking enabled every row
/// also carries the combination of inserted tags that produced it, which is
/// how kernels are read off.
#[derive(Clone, Debug)]
pub struct Echelon {
    field: FieldSpec,
    rows: Vec<SparseVec>,
    tags: Vec<SparseVec>,
    pivot_row: HashMap<usize, usize>,
    tracking: bool,
}

impl Echelon {
    pub fn new(field: &FieldSpec) -> Echelon {
        Echelon { field: field.clone(), rows: Vec::new(), tags: Vec::new(), pivot_row: HashMap::new(), tracking: false }
    }

    pub fn with_tracking(field: &FieldSpec) -> Echelon {
        Echelon { tracking: true, ..Echelon::new(field) }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.iter().map(|r| r[0].0)
    }

    fn sweep(&self, v: &[(usize, Rat)], mut tag: Option<&mut BTreeMap<usize, Rat>>) -> BTreeMap<usize, Rat> {
        let mut acc: BTreeMap<usize, Rat> = v.iter().cloned().collect();
        let mut out: BTreeMap<usize, Rat> = BTreeMap::new();
        while let Some((k, c)) = acc.pop_first() {
            match self.pivot_row.get(&k) {
                Some(&r) => {
                    let neg = self.field.neg(&c);
                    axpy_into(&self.field, &mut acc, &neg, &self.rows[r][1..]);
                    if let Some(t) = tag.as_deref_mut() {
                        axpy_into(&self.field, t, &neg, &self.tags[r]);
                    }
                }
                None => {
                    out.insert(k, c);
                }
            }
        }
        out
    }

    /// Residual of `v` after reduction by the stored rows.
    pub fn reduce(&self, v: &[(usize, Rat)]) -> SparseVec {
        to_sparse(self.sweep(v, None))
    }

    pub fn contains(&self, v: &[(usize, Rat)]) -> bool {
        self.sweep(v, None).is_empty()
    }

    /// Adds `v` to the row space; true iff it was independent.
    pub fn insert(&mut self, v: &[(usize, Rat)]) -> bool {
        self.insert_tagged(v, Vec::new()).is_none()
    }

    /// Adds `v` with a tag. When `v` is dependent the returned combination
    /// of tags maps to zero.
    pub fn insert_tagged(&mut self, v: &[(usize, Rat)], tag: SparseVec) -> Option<SparseVec> {
        let mut t: BTreeMap<usize, Rat> = tag.into_iter().collect();
        let res = if self.tracking { self.sweep(v, Some(&mut t)) } else { self.sweep(v, None) };
        if res.is_empty() {
            return Some(to_sparse(t));
        }
        let lead = res.values().next().unwrap().clone();
        let inv = self.field.inv(&lead);
        let row: SparseVec = res.into_iter().map(|(i, x)| (i, self.field.mul(&x, &inv))).collect();
        let tag = if self.tracking { sparse_scale(&self.field, &to_sparse(t), &inv) } else { Vec::new() };
        self.pivot_row.insert(row[0].0, self.rows.len());
        self.rows.push(row);
        self.tags.push(tag);
        None
    }
}

/// Kernel of the linear map sending basis vector `j` to `cols[j]`.
pub fn kernel(field: &FieldSpec, cols: &[SparseVec]) -> Vec<SparseVec> {
    let mut ech = Echelon::with_tracking(field);
    let mut out = Vec::new();
    for (j, c) in cols.iter().enumerate() {
        if let Some(rel) = ech.insert_tagged(c, vec![(j, Rat::one())]) {
            out.push(rel);
        }
    }
    out
}

pub fn rank(field: &FieldSpec, vecs: &[SparseVec]) -> usize {
    let mut ech = Echelon::new(field);
    for v in vecs {
        ech.insert(v);
    }
    ech.rank()
}

/// Dense matrix with exact entries.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Matrix {
        Matrix { rows, cols, data: vec![Rat::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Matrix {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rat::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Matrix {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| Rat::from_i64(x)).collect()).collect())
    }

    /// Matrix whose column `j` is the sparse vector `cols[j]`.
    pub fn from_sparse_cols(rows: usize, cols: &[SparseVec]) -> Matrix {
        let mut m = Matrix::zeros(rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            for (i, x) in c {
                m.set(*i, j, x.clone());
            }
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rat {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: Rat) {
        self.data[i * self.cols + j] = x;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Rat::is_zero)
    }

    pub fn column(&self, j: usize) -> SparseVec {
        (0..self.rows)
            .filter_map(|i| {
                let x = self.get(i, j);
                (!x.is_zero()).then(|| (i, x.clone()))
            })
            .collect()
    }

    pub fn row(&self, i: usize) -> SparseVec {
        (0..self.cols)
            .filter_map(|j| {
                let x = self.get(i, j);
                (!x.is_zero()).then(|| (j, x.clone()))
            })
            .collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix, field: &FieldSpec) -> Matrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let cur = out.get(i, j).clone();
                        out.set(i, j, field.add(&cur, &field.mul(a, b)));
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix, field: &FieldSpec) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "dimension mismatch");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| field.add(a, b)).collect(),
        }
    }

    pub fn scale(&self, c: &Rat, field: &FieldSpec) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| field.mul(a, c)).collect() }
    }

    /// Kronecker product `self ⊗ other`.
    pub fn kron(&self, other: &Matrix, field: &FieldSpec) -> Matrix {
        let mut out = Matrix::zeros(self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = other.get(k, l);
                        if !b.is_zero() {
                            out.set(i * other.rows + k, j * other.cols + l, field.mul(a, b));
                        }
                    }
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[Rat], field: &FieldSpec) -> Vec<Rat> {
        (0..self.rows)
            .map(|i| {
                let mut acc = Rat::zero();
                for j in 0..self.cols {
                    let a = self.get(i, j);
                    if !a.is_zero() && !v[j].is_zero() {
                        acc = field.add(&acc, &field.mul(a, &v[j]));
                    }
                }
                acc
            })
            .collect()
    }

    pub fn rank(&self, field: &FieldSpec) -> usize {
        let rows: Vec<SparseVec> = (0..self.rows).map(|i| self.row(i)).collect();
        rank(field, &rows)
    }

    /// Basis of `{v : self * v = 0}` as dense vectors.
    pub fn nullspace(&self, field: &FieldSpec) -> Vec<Vec<Rat>> {
        let cols: Vec<SparseVec> = (0..self.cols).map(|j| self.column(j)).collect();
        kernel(field, &cols)
            .into_iter()
            .map(|s| {
                let mut v = vec![Rat::zero(); self.cols];
                for (i, x) in s {
                    v[i] = x;
                }
                v
            })
            .collect()
    }

    /// Determinant by Gaussian elimination over the field.
    pub fn det(&self, field: &FieldSpec) -> Rat {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        let mut a = self.clone();
        let mut det = Rat::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&r| !a.get(r, c).is_zero()) else {
                return Rat::zero();
            };
            if p != c {
                for j in 0..n {
                    a.data.swap(p * n + j, c * n + j);
                }
                det = field.neg(&det);
            }
            let piv = a.get(c, c).clone();
            det = field.mul(&det, &piv);
            let inv = field.inv(&piv);
            for r in c + 1..n {
                let f = field.mul(a.get(r, c), &inv);
                if f.is_zero() {
                    continue;
                }
                for j in c..n {
                    let v = field.sub(a.get(r, j), &field.mul(&f, a.get(c, j)));
                    a.set(r, j, v);
                }
            }
        }
        det
    }

    pub fn is_invertible(&self, field: &FieldSpec) -> bool {
        self.rows == self.cols && !self.det(field).is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    fn brute_det(m: &Matrix) -> Rat {
        // Leibniz expansion along the first row
        let n = m.nrows();
        if n == 0 {
            return Rat::one();
        }
        let mut acc = Rat::zero();
        for j in 0..n {
            let minor = Matrix::from_rows(
                (1..n).map(|i| (0..n).filter(|&k| k != j).map(|k| m.get(i, k).clone()).collect()).collect(),
            );
            let term = m.get(0, j) * &brute_det(&minor);
            acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
        }
        acc
    }

    #[test]
    fn small_examples() {
        let m = Matrix::from_i64(&[&[1, 2], &[2, 4]]);
        assert_eq!(m.rank(&q()), 1);
        assert_eq!(m.det(&q()), Rat::zero());
        let ns = m.nullspace(&q());
        assert_eq!(ns.len(), 1);
        assert!(m.apply(&ns[0], &q()).iter().all(Rat::is_zero));
        let k = Matrix::identity(2).kron(&Matrix::from_i64(&[&[0, 1], &[0, 0]]), &q());
        assert_eq!(k.rank(&q()), 2);
        assert_eq!(Matrix::from_i64(&[&[0, 1], &[1, 0]]).det(&q()), Rat::from_i64(-1));
        let f2 = FieldSpec::prime(2).unwrap();
        assert_eq!(Matrix::from_i64(&[&[1, 1], &[1, 1]]).rank(&f2), 1);
        assert_eq!(Matrix::from_i64(&[&[1, 1], &[1, -1]]).det(&f2), Rat::zero());
    }

    #[test]
    fn tracked_kernel_relations_hold() {
        let cols: Vec<SparseVec> =
            vec![vec![(0, Rat::one())], vec![(1, Rat::one())], vec![(0, Rat::from_i64(2)), (1, Rat::from_i64(3))]];
        let ker = kernel(&q(), &cols);
        assert_eq!(ker.len(), 1);
        let mut acc = BTreeMap::new();
        for (j, c) in &ker[0] {
            axpy_into(&q(), &mut acc, c, &cols[*j]);
        }
        assert!(acc.is_empty());
    }

    fn arb_matrix() -> impl Strategy<Value = Matrix> {
        (1usize..5).prop_flat_map(|n| {
            prop::collection::vec(prop::collection::vec(-3i64..4, n), n).prop_map(|rows| {
                Matrix::from_rows(rows.into_iter().map(|r| r.into_iter().map(Rat::from_i64).collect()).collect())
            })
        })
    }

    proptest! {
        #[test]
        fn det_rank_nullspace_agree(m in arb_matrix()) {
            let d = m.det(&q());
            prop_assert_eq!(d.clone(), brute_det(&m));
            let r = m.rank(&q());
            prop_assert_eq!(r == m.nrows(), !d.is_zero());
            let ns = m.nullspace(&q());
            prop_assert_eq!(ns.len() + r, m.ncols());
            for v in &ns {
                prop_assert!(m.apply(v, &q()).iter().all(Rat::is_zero));
            }
            prop_assert_eq!(m.transpose().rank(&q()), r);
        }
    }
}
