//! Degrees are integer vectors: the exponent vector for monomial algebras,
//! the total degree for other homogeneous ones, and the empty vector when
//! there is no grading. Everything homological splits into blocks by degree.

pub type Deg = Vec<i32>;

pub fn add_deg(a: &[i32], b: &[i32]) -> Deg {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub_deg(a: &[i32], b: &[i32]) -> Deg {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn neg_deg(a: &[i32]) -> Deg {
    a.iter().map(|x| -x).collect()
}
