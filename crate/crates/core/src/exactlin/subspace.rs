use super::matrix::{zero_vec, Matrix};
use super::reduce::{kernel, RowReducer};
use super::scalar::Scalar;
use crate::error::{Error, Result};

/// A linear subspace stored by its canonical RREF basis, so equal subspaces
/// compare equal structurally.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

/// Surjection onto `ambient / subspace` with a coset-representative section.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientMap {
    /// `(ambient - dim) x ambient`, kernel exactly the subspace.
    pub projection: Matrix,
    /// `ambient x (ambient - dim)`, unit vectors on the non-pivot coordinates.
    pub section: Matrix,
    /// The non-pivot coordinates, in order; quotient coordinate `k` is `free[k]`.
    pub free: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace { ambient_dim, basis: Matrix::zeros(0, ambient_dim), pivots: Vec::new() }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Subspace { ambient_dim, basis: Matrix::identity(ambient_dim), pivots: (0..ambient_dim).collect() }
    }

    pub fn span<'a>(ambient_dim: usize, vectors: impl IntoIterator<Item = &'a [Scalar]>) -> Result<Self> {
        let mut red = RowReducer::new(ambient_dim);
        for v in vectors {
            if v.len() != ambient_dim {
                return Err(Error::Dimension(format!("vector of length {} in ambient {ambient_dim}", v.len())));
            }
            red.insert_dense(v);
        }
        Ok(Self::from_reducer(&red))
    }

    pub fn from_reducer(red: &RowReducer) -> Self {
        Subspace { ambient_dim: red.width(), basis: red.to_matrix(), pivots: red.pivots() }
    }

    /// Row space of a matrix.
    pub fn row_space(m: &Matrix) -> Self {
        let mut red = RowReducer::new(m.cols());
        for i in 0..m.rows() {
            red.insert_dense(m.row(i));
        }
        Self::from_reducer(&red)
    }

    /// Null space `{x : m·x = 0}`.
    pub fn kernel_of(m: &Matrix) -> Self {
        let vs = kernel(m);
        Self::span(m.cols(), vs.iter().map(Vec::as_slice)).expect("kernel vectors fit the ambient")
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Scalar>> {
        (0..self.dim()).map(|i| self.basis.row(i).to_vec()).collect()
    }

    fn reducer(&self) -> RowReducer {
        let mut red = RowReducer::new(self.ambient_dim);
        for i in 0..self.dim() {
            red.insert_dense(self.basis.row(i));
        }
        red
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        v.len() == self.ambient_dim && self.reducer().contains(v)
    }

    /// Coordinates of `v` in the canonical basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        let coords: Vec<Scalar> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut recon = zero_vec(self.ambient_dim);
        for (i, c) in coords.iter().enumerate() {
            super::matrix::axpy(&mut recon, c, self.basis.row(i));
        }
        (recon == v).then_some(coords)
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::Dimension(format!(
                "ambient dimensions {} and {}",
                self.ambient_dim, other.ambient_dim
            )));
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        Ok(Subspace::row_space(&self.basis.vstack(&other.basis)))
    }

    pub fn intersection(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        // (a, b) with a·X = b·Y  <=>  kernel of [X^T | -Y^T]
        let m = self.basis.transpose().hstack(&other.basis.transpose().scale(&Scalar::from_int(-1)));
        let dx = self.dim();
        let vs: Vec<Vec<Scalar>> = kernel(&m)
            .into_iter()
            .map(|k| {
                let mut v = zero_vec(self.ambient_dim);
                for (i, c) in k[..dx].iter().enumerate() {
                    super::matrix::axpy(&mut v, c, self.basis.row(i));
                }
                v
            })
            .collect();
        Subspace::span(self.ambient_dim, vs.iter().map(Vec::as_slice))
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient_dim == other.ambient_dim
            && (0..self.dim()).all(|i| other.contains(self.basis.row(i)))
    }

    pub fn quotient(&self) -> QuotientMap {
        let n = self.ambient_dim;
        let mut is_pivot = vec![false; n];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        let free: Vec<usize> = (0..n).filter(|&c| !is_pivot[c]).collect();
        let q = free.len();
        let mut projection = Matrix::zeros(q, n);
        let mut section = Matrix::zeros(n, q);
        for (k, &f) in free.iter().enumerate() {
            projection[(k, f)] = Scalar::one();
            section[(f, k)] = Scalar::one();
            for (i, &p) in self.pivots.iter().enumerate() {
                let b = &self.basis[(i, f)];
                if !b.is_zero() {
                    projection[(k, p)] = -b;
                }
            }
        }
        QuotientMap { projection, section, free }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn v(x: &[i64]) -> Vec<Scalar> {
        x.iter().map(|&a| Scalar::from_int(a)).collect()
    }

    #[test]
    fn lattice_examples() {
        let x = Subspace::span(2, [v(&[1, 0]).as_slice()]).unwrap();
        let y = Subspace::span(2, [v(&[0, 1]).as_slice()]).unwrap();
        assert_eq!(x.sum(&x).unwrap(), x);
        assert_eq!(x.intersection(&x).unwrap(), x);
        assert_eq!(x.sum(&y).unwrap().dim(), 2);
        assert_eq!(x.intersection(&y).unwrap().dim(), 0);
        assert!(x.sum(&Subspace::zero(3)).is_err());
    }

    #[test]
    fn quotient_of_a_line() {
        let x = Subspace::span(3, [v(&[1, 1, 0]).as_slice()]).unwrap();
        let q = x.quotient();
        assert_eq!(q.projection.rows(), 2);
        assert_eq!(q.projection.mul(&q.section), Matrix::identity(2));
        assert!(q.projection.mul_vec(&v(&[1, 1, 0])).iter().all(Scalar::is_zero));
        assert_eq!(Subspace::kernel_of(&q.projection), x);
    }

    fn subspace(n: usize) -> impl Strategy<Value = Subspace> {
        proptest::collection::vec(proptest::collection::vec(-2i64..3, n), 0..4)
            .prop_map(move |vs| Subspace::span(n, vs.iter().map(|r| v(r)).collect::<Vec<_>>().iter().map(Vec::as_slice)).unwrap())
    }

    proptest! {
        #[test]
        fn grassmann_identity(x in subspace(4), y in subspace(4)) {
            let s = x.sum(&y).unwrap();
            let i = x.intersection(&y).unwrap();
            prop_assert_eq!(s.dim() + i.dim(), x.dim() + y.dim());
            prop_assert!(i.is_subspace_of(&x) && i.is_subspace_of(&y));
        }

        #[test]
        fn quotient_kernel_is_subspace(x in subspace(4)) {
            let q = x.quotient();
            prop_assert_eq!(q.projection.mul(&q.section), Matrix::identity(4 - x.dim()));
            prop_assert_eq!(Subspace::kernel_of(&q.projection), x);
        }
    }
}
