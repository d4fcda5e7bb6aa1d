//! Finite-dimensional unital associative algebras given by structure constants.

mod extension;
mod module;

pub use extension::{field_extension, FieldExtension, Polynomial};
pub use module::{generators, LeftModule};

use std::fmt;

use crate::error::{Error, Result};
use crate::exactlin::{axpy, kron_vec, unit_vec, zero_vec, Field, LinearSystem, Matrix, Scalar, Subspace};
use crate::report::CheckReport;

/// An algebra over a field, with basis `e_0..e_{dim-1}` and `e_i·e_j = Σ_k mult[i][j][k] e_k`.
#[derive(Clone)]
pub struct Algebra {
    name: String,
    field: Field,
    dim: usize,
    /// `mult[i * dim + j]` is the coordinate vector of `e_i·e_j`.
    mult: Vec<Vec<Scalar>>,
    unit: Vec<Scalar>,
}

impl PartialEq for Algebra {
    /// Names are labels only; algebras compare by field and structure constants.
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.dim == other.dim && self.unit == other.unit && self.mult == other.mult
    }
}

impl Eq for Algebra {}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Algebra({}, dim {}, {:?})", self.name, self.dim, self.field)
    }
}

impl Algebra {
    /// Builds an algebra from a table; validity is not checked here (see [`Algebra::check`]).
    pub fn new(
        name: impl Into<String>,
        field: Field,
        dim: usize,
        mult: Vec<Vec<Scalar>>,
        unit: Vec<Scalar>,
    ) -> Result<Self> {
        if mult.len() != dim * dim || mult.iter().any(|v| v.len() != dim) || unit.len() != dim {
            return Err(Error::Dimension(format!("structure constants do not match dimension {dim}")));
        }
        let coerce = |v: Vec<Scalar>| -> Result<Vec<Scalar>> { v.iter().map(|s| field.coerce(s)).collect() };
        let mult = mult.into_iter().map(coerce).collect::<Result<Vec<_>>>()?;
        let unit = coerce(unit)?;
        Ok(Algebra { name: name.into(), field, dim, mult, unit })
    }

    /// Builds and validates.
    pub fn checked(
        name: impl Into<String>,
        field: Field,
        dim: usize,
        mult: Vec<Vec<Scalar>>,
        unit: Vec<Scalar>,
    ) -> Result<Self> {
        let a = Self::new(name, field, dim, mult, unit)?;
        let report = a.check();
        if !report.is_valid() {
            return Err(Error::Invalid(format!("algebra {}: {:?}", a.name, report.violations)));
        }
        Ok(a)
    }

    /// The ground field as a one-dimensional algebra.
    pub fn ground(field: Field) -> Self {
        let one = field.int(1);
        Algebra { name: "k".into(), field, dim: 1, mult: vec![vec![one.clone()]], unit: vec![one] }
    }

    /// `M_n(k)` on matrix units `E_{ij}`, basis index `i * n + j`.
    pub fn matrix_algebra(field: Field, n: usize) -> Self {
        let d = n * n;
        let mut mult = vec![zero_vec(d); d * d];
        for i in 0..n {
            for j in 0..n {
                for l in 0..n {
                    // E_ij E_jl = E_il
                    mult[(i * n + j) * d + (j * n + l)][i * n + l] = field.int(1);
                }
            }
        }
        let mut unit = zero_vec(d);
        for i in 0..n {
            unit[i * n + i] = field.int(1);
        }
        Algebra { name: format!("M{n}"), field, dim: d, mult, unit }
    }

    /// `k[x]/(x^n)` on the monomial basis.
    pub fn truncated_polynomials(field: Field, n: usize) -> Self {
        let mut mult = vec![zero_vec(n); n * n];
        for i in 0..n {
            for j in 0..n {
                if i + j < n {
                    mult[i * n + j][i + j] = field.int(1);
                }
            }
        }
        Algebra { name: format!("k[x]/(x^{n})"), field, dim: n, mult, unit: unit_vec(n, 0) }
    }

    /// The group algebra `k[t]/(t^n − 1)` of the cyclic group, basis `1, t, …, t^{n-1}`.
    pub fn cyclic_group(field: Field, n: usize) -> Self {
        let mut mult = vec![zero_vec(n); n * n];
        for i in 0..n {
            for j in 0..n {
                mult[i * n + j][(i + j) % n] = field.int(1);
            }
        }
        Algebra { name: format!("kZ{n}"), field, dim: n, mult, unit: unit_vec(n, 0) }
    }

    /// `k × ... × k` on orthogonal idempotents.
    pub fn product_of_fields(field: Field, n: usize) -> Self {
        let mut mult = vec![zero_vec(n); n * n];
        let mut unit = zero_vec(n);
        for i in 0..n {
            mult[i * n + i][i] = field.int(1);
            unit[i] = field.int(1);
        }
        Algebra { name: format!("k^{n}"), field, dim: n, mult, unit }
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    /// Coordinates of `e_i·e_j`.
    pub fn basis_product(&self, i: usize, j: usize) -> &[Scalar] {
        &self.mult[i * self.dim + j]
    }

    pub fn mult_table(&self) -> &[Vec<Scalar>] {
        &self.mult
    }

    pub fn product(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let mut out = zero_vec(self.dim);
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                axpy(&mut out, &(a * b), self.basis_product(i, j));
            }
        }
        out
    }

    /// Matrix of `y ↦ x·y`.
    pub fn left_mult(&self, x: &[Scalar]) -> Matrix {
        let cols: Vec<Vec<Scalar>> = (0..self.dim).map(|j| self.product(x, &unit_vec(self.dim, j))).collect();
        Matrix::from_columns(self.dim, &cols)
    }

    /// Matrix of `y ↦ y·x`.
    pub fn right_mult(&self, x: &[Scalar]) -> Matrix {
        let cols: Vec<Vec<Scalar>> = (0..self.dim).map(|j| self.product(&unit_vec(self.dim, j), x)).collect();
        Matrix::from_columns(self.dim, &cols)
    }

    pub fn left_regular(&self) -> Vec<Matrix> {
        (0..self.dim).map(|i| self.left_mult(&unit_vec(self.dim, i))).collect()
    }

    pub fn right_regular(&self) -> Vec<Matrix> {
        (0..self.dim).map(|i| self.right_mult(&unit_vec(self.dim, i))).collect()
    }

    /// Lists every violated associativity or unit identity.
    pub fn check(&self) -> CheckReport {
        let mut report = CheckReport::default();
        let d = self.dim;
        for i in 0..d {
            let ei = unit_vec(d, i);
            if self.product(&self.unit, &ei) != ei {
                report.push("left unit", [i]);
            }
            if self.product(&ei, &self.unit) != ei {
                report.push("right unit", [i]);
            }
        }
        let support: Vec<Vec<usize>> =
            self.mult.iter().map(|v| (0..d).filter(|&k| !v[k].is_zero()).collect()).collect();
        let (mut lhs, mut rhs) = (zero_vec(d), zero_vec(d));
        for i in 0..d {
            for j in 0..d {
                for l in 0..d {
                    // (e_i e_j) e_l against e_i (e_j e_l), touching nonzero coefficients only
                    lhs.iter_mut().chain(rhs.iter_mut()).for_each(|x| *x = Scalar::zero());
                    for &m in &support[i * d + j] {
                        axpy(&mut lhs, &self.mult[i * d + j][m], &self.mult[m * d + l]);
                    }
                    for &m in &support[j * d + l] {
                        axpy(&mut rhs, &self.mult[j * d + l][m], &self.mult[i * d + m]);
                    }
                    if lhs != rhs {
                        report.push("associativity", [i, j, l]);
                    }
                }
            }
        }
        report
    }

    pub fn opposite(&self) -> Algebra {
        let d = self.dim;
        let mut mult = vec![Vec::new(); d * d];
        for i in 0..d {
            for j in 0..d {
                mult[i * d + j] = self.mult[j * d + i].clone();
            }
        }
        Algebra { name: format!("({})°", self.name), field: self.field, dim: d, mult, unit: self.unit.clone() }
    }

    /// `self ⊗_k other`, basis `e_i ⊗ f_j` at index `i * other.dim + j`.
    pub fn tensor(&self, other: &Algebra) -> Result<Algebra> {
        if self.field != other.field {
            return Err(Error::AlgebraMismatch(format!("fields {:?} and {:?}", self.field, other.field)));
        }
        let (da, db) = (self.dim, other.dim);
        let d = da * db;
        let mut mult = vec![Vec::new(); d * d];
        for i in 0..da {
            for j in 0..db {
                for k in 0..da {
                    for l in 0..db {
                        mult[(i * db + j) * d + (k * db + l)] =
                            kron_vec(self.basis_product(i, k), other.basis_product(j, l));
                    }
                }
            }
        }
        Ok(Algebra {
            name: format!("{}⊗{}", self.name, other.name),
            field: self.field,
            dim: d,
            mult,
            unit: kron_vec(&self.unit, &other.unit),
        })
    }

    /// Structure constants of the subalgebra spanned by `basis`, with its inclusion
    /// (`self.dim x sub.dim`). Fails unless the span is closed and contains 1.
    pub fn subalgebra(&self, basis: &Subspace) -> Result<(Algebra, Matrix)> {
        if basis.ambient_dim() != self.dim {
            return Err(Error::Dimension("subalgebra basis ambient".into()));
        }
        let vs = basis.basis_vectors();
        let n = vs.len();
        let unit = basis
            .coordinates(&self.unit)
            .ok_or_else(|| Error::Invalid("subspace does not contain the unit".into()))?;
        let mut mult = Vec::with_capacity(n * n);
        for x in &vs {
            for y in &vs {
                let p = self.product(x, y);
                let c = basis
                    .coordinates(&p)
                    .ok_or_else(|| Error::Invalid("subspace is not closed under multiplication".into()))?;
                mult.push(c);
            }
        }
        let inclusion = Matrix::from_columns(self.dim, &vs);
        Ok((Algebra { name: format!("sub({})", self.name), field: self.field, dim: n, mult, unit }, inclusion))
    }

    /// Solves for `e ∈ A⊗A` (index `i * dim + j`) with `(a⊗1)e = e(1⊗a)` for every
    /// basis `a` and `μ(e) = 1`. The canonical particular solution is returned.
    pub fn separability_idempotent(&self) -> Option<Vec<Scalar>> {
        let d = self.dim;
        let n = d * d;
        let id = Matrix::identity(d);
        let mut sys = LinearSystem::new(n);
        for (l, r) in self.left_regular().iter().zip(self.right_regular()) {
            let m = l.kron(&id).sub(&id.kron(&r));
            for row in 0..n {
                sys.add_dense_equation(m.row(row), &Scalar::zero());
            }
        }
        // μ: column (i, j) is e_i e_j
        for k in 0..d {
            let coeffs: Vec<Scalar> = (0..n).map(|ij| self.mult[ij][k].clone()).collect();
            sys.add_dense_equation(&coeffs, &self.unit[k]);
        }
        sys.solve().map(|s| s.particular)
    }

    pub fn is_separable(&self) -> bool {
        self.separability_idempotent().is_some()
    }

    /// Gram matrix of the trace form `(x, y) ↦ tr(L_x L_y)` on the basis.
    /// Uses `tr(L_x L_y) = tr(L_{xy})`, linear in `xy`.
    pub fn trace_form(&self) -> Matrix {
        let d = self.dim;
        let traces: Vec<Scalar> = (0..d)
            .map(|k| (0..d).fold(Scalar::zero(), |acc, m| acc.add_ref(&self.mult[k * d + m][m])))
            .collect();
        let mut g = Matrix::zeros(d, d);
        for i in 0..d {
            for j in 0..d {
                let mut t = Scalar::zero();
                for (x, tr) in self.mult[i * d + j].iter().zip(&traces) {
                    if !x.is_zero() && !tr.is_zero() {
                        t += &x.mul_ref(tr);
                    }
                }
                g[(i, j)] = t;
            }
        }
        g
    }

    /// The Jacobson radical as the radical of the trace form. Only valid in
    /// characteristic 0 or `p > dim`; other characteristics are rejected.
    pub fn radical(&self) -> Result<Subspace> {
        if let Field::Prime(p) = self.field {
            if p as usize <= self.dim {
                return Err(Error::UnsupportedCharacteristic { characteristic: p, dim: self.dim });
            }
        }
        Ok(Subspace::kernel_of(&self.trace_form()))
    }

    pub fn is_semisimple(&self) -> Result<bool> {
        Ok(self.radical()?.dim() == 0)
    }

    /// `Σ x_i · M_i` for per-basis matrices `M_i`.
    pub fn linear_combination(x: &[Scalar], mats: &[Matrix]) -> Matrix {
        let shape = mats.first().map_or((0, 0), Matrix::shape);
        let mut out = Matrix::zeros(shape.0, shape.1);
        for (c, m) in x.iter().zip(mats) {
            out.add_scaled_assign(c, m);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rationals;

    fn dual_numbers() -> Algebra {
        Algebra::truncated_polynomials(Q, 2)
    }

    #[test]
    fn trace_form_matches_products_of_regular_matrices() {
        for a in [dual_numbers(), Algebra::matrix_algebra(Q, 2), Algebra::cyclic_group(Q, 3), Algebra::truncated_polynomials(Q, 3)] {
            let ls = a.left_regular();
            let literal = Matrix::from_rows(
                (0..a.dim()).map(|i| (0..a.dim()).map(|j| ls[i].mul(&ls[j]).trace()).collect()).collect(),
            )
            .unwrap();
            assert_eq!(a.trace_form(), literal, "{}", a.name());
        }
    }

    #[test]
    fn catalog_algebras_are_valid() {
        assert!(Algebra::ground(Q).check().is_valid());
        // exhaustive E_ij E_kl = δ_jk E_il is exactly what check() enumerates
        assert!(Algebra::matrix_algebra(Q, 2).check().is_valid());
        assert!(dual_numbers().check().is_valid());
        assert!(Algebra::product_of_fields(Q, 2).check().is_valid());
    }

    #[test]
    fn broken_table_reports_the_triple() {
        // basis {1, u, v}: u·u = v but v·u = u, v·v = 0 breaks (uu)u = u(uu)
        let mut a = Algebra::truncated_polynomials(Q, 3);
        a.mult[2 * 3 + 1] = unit_vec(3, 1);
        let r = a.check();
        assert!(!r.is_valid());
        assert!(r.violations.iter().any(|v| v.identity == "associativity" && v.indices == vec![1, 1, 1]));
    }

    #[test]
    fn opposite_of_matrix_units() {
        let m2 = Algebra::matrix_algebra(Q, 2);
        let op = m2.opposite();
        // E12 ∘ E21 = E21·E12 = E22
        assert_eq!(op.basis_product(1, 2), unit_vec(4, 3).as_slice());
        assert_eq!(op.opposite(), m2);
        assert!(op.check().is_valid());
        let comm = dual_numbers();
        assert_eq!(comm.opposite(), comm);
    }

    #[test]
    fn tensor_products() {
        let m2 = Algebra::matrix_algebra(Q, 2);
        assert_eq!(m2.tensor(&Algebra::ground(Q)).unwrap(), m2);
        let t = m2.tensor(&m2).unwrap();
        assert_eq!(t.dim(), 16);
        assert!(t.check().is_valid());
        let dd = dual_numbers().tensor(&dual_numbers()).unwrap();
        assert_eq!(dd.dim(), 4);
        assert_eq!(dd.radical().unwrap().dim(), 3);
        assert!(m2.tensor(&Algebra::ground(Field::Prime(5))).is_err());
    }

    #[test]
    fn separability_idempotents() {
        assert_eq!(Algebra::ground(Q).separability_idempotent(), Some(vec![Scalar::one()]));
        let m2 = Algebra::matrix_algebra(Q, 2);
        assert!(m2.separability_idempotent().is_some());
        assert!(dual_numbers().separability_idempotent().is_none());
    }

    #[test]
    fn matrix_unit_candidate_satisfies_constraints() {
        // e = Σ_i E_i1 ⊗ E_1i (0-based: E_{i0} ⊗ E_{0i})
        let m2 = Algebra::matrix_algebra(Q, 2);
        let mut e = zero_vec(16);
        for i in 0..2 {
            e[(i * 2) * 4 + i] = Scalar::one();
        }
        let mut mu = zero_vec(4);
        for ij in 0..16 {
            axpy(&mut mu, &e[ij], &m2.mult[ij]);
        }
        assert_eq!(mu, m2.unit);
        let id = Matrix::identity(4);
        for (l, r) in m2.left_regular().iter().zip(m2.right_regular()) {
            assert_eq!(l.kron(&id).mul_vec(&e), id.kron(&r).mul_vec(&e));
        }
    }

    #[test]
    fn radicals() {
        assert_eq!(Algebra::matrix_algebra(Q, 2).radical().unwrap().dim(), 0);
        let r = dual_numbers().radical().unwrap();
        assert_eq!(r.dim(), 1);
        assert!(r.contains(&unit_vec(2, 1)));
        assert_eq!(Algebra::product_of_fields(Q, 2).radical().unwrap().dim(), 0);
        assert!(matches!(
            Algebra::matrix_algebra(Field::Prime(3), 2).radical(),
            Err(Error::UnsupportedCharacteristic { .. })
        ));
        assert_eq!(Algebra::truncated_polynomials(Field::Prime(5), 2).radical().unwrap().dim(), 1);
    }

    #[test]
    fn radical_is_an_ideal() {
        let a = Algebra::truncated_polynomials(Q, 3).tensor(&Algebra::matrix_algebra(Q, 2)).unwrap();
        let r = a.radical().unwrap();
        for x in r.basis_vectors() {
            for i in 0..a.dim() {
                let e = unit_vec(a.dim(), i);
                assert!(r.contains(&a.product(&x, &e)));
                assert!(r.contains(&a.product(&e, &x)));
            }
        }
    }

    #[test]
    fn subalgebra_of_diagonal_matrices() {
        let m2 = Algebra::matrix_algebra(Q, 2);
        let diag = Subspace::span(4, [unit_vec(4, 0).as_slice(), unit_vec(4, 3).as_slice()]).unwrap();
        let (b, inc) = m2.subalgebra(&diag).unwrap();
        assert_eq!(b, Algebra::product_of_fields(Q, 2));
        assert_eq!(inc.shape(), (4, 2));
        let upper = Subspace::span(4, [unit_vec(4, 1).as_slice()]).unwrap();
        assert!(m2.subalgebra(&upper).is_err());
    }
}
