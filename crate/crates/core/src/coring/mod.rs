//! Corings `(C, Δ, ε)` over a finite-dimensional algebra `A`.
//!
//! `Δ` is stored in the coordinates of the canonical presentation of `C ⊗_A C`
//! (see [`TensorPresentation`]); `ε` is a `dim A x dim C` matrix.

mod constructions;
mod cosep;
mod dual;
mod semisimple;
mod theorem;

pub use constructions::{base_change, opposite_coring, sweedler_coring, tensor_coring, BaseChangeIso};
pub use cosep::{coseparability, is_cointegral, solve_gamma, solve_pi, Cointegral};
pub use dual::{check_coring_hom, dual_hom, dual_ring, DualActions, DualRing, Side};
pub use semisimple::{is_semisimple_coring, SemisimpleEvidence};
pub use theorem::{default_extensions, default_test_corings, main_theorem_report, TheoremReport, DEFAULT_SIZE_LIMIT};

use std::sync::OnceLock;

use crate::algebra::Algebra;
use crate::bimodule::{check_bimodule_map, Bimodule, TensorPresentation, TriplePresentation};
use crate::error::{Error, Result};
use crate::exactlin::{Field, Matrix, Scalar};
use crate::report::CheckReport;

#[derive(Clone, Debug)]
pub struct Coring {
    name: String,
    carrier: Bimodule,
    square: TensorPresentation,
    comult: Matrix,
    counit: Matrix,
    triple: OnceLock<TriplePresentation>,
}

impl Coring {
    /// `comult` is in the coordinates of `TensorPresentation::new(carrier, carrier)`.
    pub fn new(name: impl Into<String>, carrier: Bimodule, comult: Matrix, counit: Matrix) -> Result<Self> {
        let square = TensorPresentation::new(&carrier, &carrier)?;
        Self::with_square(name, carrier, square, comult, counit)
    }

    /// As [`Coring::new`], reusing an already computed presentation of `C ⊗_A C`.
    pub fn with_square(
        name: impl Into<String>,
        carrier: Bimodule,
        square: TensorPresentation,
        comult: Matrix,
        counit: Matrix,
    ) -> Result<Self> {
        if carrier.left_algebra() != carrier.right_algebra() {
            return Err(Error::AlgebraMismatch("a coring carrier is a bimodule over one algebra".into()));
        }
        let d = carrier.dim();
        if comult.shape() != (square.dim(), d) {
            return Err(Error::Dimension(format!(
                "comultiplication must be {}x{d}, got {:?}",
                square.dim(),
                comult.shape()
            )));
        }
        if counit.shape() != (carrier.left_algebra().dim(), d) {
            return Err(Error::Dimension(format!("counit shape {:?}", counit.shape())));
        }
        Ok(Coring { name: name.into(), carrier, square, comult, counit, triple: OnceLock::new() })
    }

    /// Builds `Δ` from a lift into `C ⊗_k C` (`dim C² x dim C`, row `i * dim C + j`).
    pub fn from_lift(name: impl Into<String>, carrier: Bimodule, lift: &Matrix, counit: Matrix) -> Result<Self> {
        let square = TensorPresentation::new(&carrier, &carrier)?;
        let d = carrier.dim();
        if lift.shape() != (d * d, d) {
            return Err(Error::Dimension(format!("comultiplication lift must be {}x{d}", d * d)));
        }
        let comult = square.projection_matrix().mul(lift);
        Self::with_square(name, carrier, square, comult, counit)
    }

    /// `A` with `Δ(a) = 1 ⊗ a` and `ε = id`.
    pub fn trivial(a: &Algebra) -> Self {
        let carrier = Bimodule::regular(a);
        let square = TensorPresentation::new(&carrier, &carrier).expect("same algebra");
        let d = a.dim();
        let cols: Vec<Vec<Scalar>> =
            (0..d).map(|i| square.project_pure(a.unit(), &crate::exactlin::unit_vec(d, i))).collect();
        let comult = Matrix::from_columns(square.dim(), &cols);
        Self::with_square(format!("trivial({})", a.name()), carrier, square, comult, Matrix::identity(d))
            .expect("consistent shapes")
    }

    /// Comatrix coalgebra over `k`: basis `e_ij`, `Δe_ij = Σ_k e_ik ⊗ e_kj`, `ε(e_ij) = δ_ij`.
    pub fn comatrix(field: Field, n: usize) -> Self {
        let d = n * n;
        let mut lift = Matrix::zeros(d * d, d);
        let mut counit = Matrix::zeros(1, d);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    lift[((i * n + k) * d + (k * n + j), i * n + j)] = Scalar::one();
                }
            }
            counit[(0, i * n + i)] = Scalar::one();
        }
        Self::from_lift(format!("comatrix({n})"), Bimodule::over_ground(field, d), &lift, counit)
            .expect("consistent shapes")
    }

    /// Group-like coalgebra: `Δg = g ⊗ g`, `ε(g) = 1`.
    pub fn group_like(field: Field, n: usize) -> Self {
        let mut lift = Matrix::zeros(n * n, n);
        for g in 0..n {
            lift[(g * n + g, g)] = Scalar::one();
        }
        let counit = Matrix::from_vec(1, n, vec![Scalar::one(); n]).expect("shape");
        Self::from_lift(format!("grouplike({n})"), Bimodule::over_ground(field, n), &lift, counit)
            .expect("consistent shapes")
    }

    /// Dual coalgebra of an algebra `B` over the ground field: `Δ(e_k*) = Σ c_ij^k e_i* ⊗ e_j*`,
    /// `ε(e_k*) = (1)_k`.
    pub fn dual_coalgebra(b: &Algebra) -> Self {
        let d = b.dim();
        let mut lift = Matrix::zeros(d * d, d);
        for i in 0..d {
            for j in 0..d {
                for (k, c) in b.basis_product(i, j).iter().enumerate() {
                    lift[(i * d + j, k)] = c.clone();
                }
            }
        }
        let counit = Matrix::from_vec(1, d, b.unit().to_vec()).expect("shape");
        Self::from_lift(format!("dual({})", b.name()), Bimodule::over_ground(b.field(), d), &lift, counit)
            .expect("consistent shapes")
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn base(&self) -> &Algebra {
        self.carrier.left_algebra()
    }

    pub fn carrier(&self) -> &Bimodule {
        &self.carrier
    }

    pub fn dim(&self) -> usize {
        self.carrier.dim()
    }

    /// Presentation of `C ⊗_A C`.
    pub fn square(&self) -> &TensorPresentation {
        &self.square
    }

    pub fn comult(&self) -> &Matrix {
        &self.comult
    }

    pub fn counit(&self) -> &Matrix {
        &self.counit
    }

    /// `Δ` lifted to `C ⊗_k C` through the pure-tensor section.
    pub fn comult_lift(&self) -> Matrix {
        self.square.section_matrix().mul(&self.comult)
    }

    /// `C ⊗_A C ⊗_A C`, presented as `C ⊗_A (C ⊗_A C)` and computed once.
    pub fn triple(&self) -> Result<&TriplePresentation> {
        if let Some(t) = self.triple.get() {
            return Ok(t);
        }
        let t = TriplePresentation::from_inner(&self.carrier, self.square.clone())?;
        Ok(self.triple.get_or_init(|| t))
    }

    /// `Δ ⊗ C: C ⊗_A C → C ⊗_A C ⊗_A C`.
    pub fn delta_c(&self) -> Result<Matrix> {
        self.triple()?.induced_left(&self.square, &self.comult, &self.square)
    }

    /// `C ⊗ Δ: C ⊗_A C → C ⊗_A C ⊗_A C`.
    pub fn c_delta(&self) -> Result<Matrix> {
        let t = self.triple()?;
        TensorPresentation::induced(&Matrix::identity(self.dim()), &self.comult, &self.square, &t.outer)
    }

    /// `(Δ ⊗ C)Δ` and `(C ⊗ Δ)Δ`.
    pub fn coassociativity_sides(&self) -> Result<(Matrix, Matrix)> {
        Ok((self.delta_c()?.mul(&self.comult), self.c_delta()?.mul(&self.comult)))
    }

    /// All coring axioms; an empty report means valid.
    pub fn check(&self) -> CheckReport {
        let mut report = self.carrier.check().prefixed("carrier");
        let a = Bimodule::regular(self.base());
        report.extend(check_bimodule_map(&self.carrier, self.square.quotient(), &self.comult).prefixed("comultiplication"));
        report.extend(check_bimodule_map(&self.carrier, &a, &self.counit).prefixed("counit"));
        if !report.is_valid() {
            return report;
        }
        match self.coassociativity_sides() {
            Ok((left, right)) => {
                for c in 0..self.dim() {
                    if left.col(c) != right.col(c) {
                        report.push("coassociativity", [c]);
                    }
                }
            }
            Err(e) => report.push(format!("coassociativity undefined: {e}"), Vec::<usize>::new()),
        }
        let id = Matrix::identity(self.dim());
        let (right_counit, left_counit) = match (self.square.contract_right(&self.counit), self.square.contract_left(&self.counit)) {
            (Ok(r), Ok(l)) => (r.mul(&self.comult), l.mul(&self.comult)),
            _ => {
                report.push("counit contraction undefined", Vec::<usize>::new());
                return report;
            }
        };
        for c in 0..self.dim() {
            if right_counit.col(c) != id.col(c) {
                report.push("right counit (C⊗ε)Δ = id", [c]);
            }
            if left_counit.col(c) != id.col(c) {
                report.push("left counit (ε⊗C)Δ = id", [c]);
            }
        }
        report
    }

    pub fn is_valid(&self) -> bool {
        self.check().is_valid()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::unit_vec;

    const Q: Field = Field::Rationals;

    #[test]
    fn trivial_corings_are_valid() {
        for a in [
            Algebra::ground(Q),
            Algebra::matrix_algebra(Q, 2),
            Algebra::truncated_polynomials(Q, 2),
            Algebra::product_of_fields(Q, 2),
        ] {
            let c = Coring::trivial(&a);
            assert!(c.check().is_valid(), "{}: {:?}", a.name(), c.check());
            assert_eq!(c.square().dim(), a.dim());
        }
    }

    #[test]
    fn comatrix_is_valid() {
        for n in 1..=3 {
            let c = Coring::comatrix(Q, n);
            assert!(c.check().is_valid());
            assert_eq!(c.dim(), n * n);
        }
    }

    #[test]
    fn comatrix_with_wrong_counit_violates_the_counit_law() {
        let good = Coring::comatrix(Q, 2);
        let bad = Coring::new(
            "bad",
            good.carrier().clone(),
            good.comult().clone(),
            Matrix::from_vec(1, 4, vec![Scalar::one(); 4]).unwrap(),
        )
        .unwrap();
        let report = bad.check();
        assert!(report.has("counit"));
        assert!(!report.has("coassociativity"));
        // e_12: (C⊗ε)Δe_12 = e_11 + e_12 ≠ e_12
        assert!(report.violations.iter().any(|v| v.indices == vec![1]));
    }

    #[test]
    fn non_coassociative_map_is_reported() {
        // Δg_0 = g_0 ⊗ g_0 + g_1 ⊗ g_1, Δg_1 = g_1 ⊗ g_1
        let mut lift = Matrix::zeros(4, 2);
        lift[(0, 0)] = Scalar::one();
        lift[(3, 0)] = Scalar::one();
        lift[(3, 1)] = Scalar::one();
        let c = Coring::from_lift("bad", Bimodule::over_ground(Q, 2), &lift, Matrix::from_ints(&[&[1, 1]])).unwrap();
        let report = c.check();
        assert!(report.has("coassociativity"));
    }

    #[test]
    fn dual_coalgebras() {
        let dn = Coring::dual_coalgebra(&Algebra::truncated_polynomials(Q, 2));
        assert!(dn.check().is_valid());
        // Δx* = 1*⊗x* + x*⊗1*
        let lift = dn.comult_lift();
        assert_eq!(lift.col(1), vec![0, 1, 1, 0].into_iter().map(Scalar::from_int).collect::<Vec<_>>());
        let m2 = Coring::dual_coalgebra(&Algebra::matrix_algebra(Q, 2));
        assert!(m2.check().is_valid());
        assert_eq!(dn.counit().col(1), unit_vec(1, 0).iter().map(|_| Scalar::zero()).collect::<Vec<_>>());
    }
}
