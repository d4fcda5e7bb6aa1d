//! Entwining structures `(A, C, ψ)` and their corings `A ⊗ C`.
//!
//! Validity is decided through the induced coring: `ψ` is an entwining exactly when
//! `(a ⊗ c)·a' = a·ψ(c ⊗ a')` makes `A ⊗ C` an `A`-bimodule on which `A ⊗ Δ_C` and
//! `A·ε_C` define an `A`-coring.

use serde::Serialize;

use crate::algebra::Algebra;
use crate::bimodule::{check_bimodule_map, Bimodule, TensorPresentation};
use crate::coring::{tensor_coring, Coring};
use crate::error::{Error, Result};
use crate::exactlin::{axpy, kron_vec, unit_vec, zero_vec, Matrix, Scalar};
use crate::report::CheckReport;

/// `ψ: C ⊗ A → A ⊗ C` with `C` a coalgebra over the ground field. Column `c * dim A + a`
/// holds `ψ(c ⊗ a)` in the basis `a' ⊗ c'` at `a' * dim C + c'`.
#[derive(Clone, Debug)]
pub struct Entwining {
    pub algebra: Algebra,
    pub coalgebra: Coring,
    pub psi: Matrix,
}

impl Entwining {
    pub fn new(algebra: Algebra, coalgebra: Coring, psi: Matrix) -> Result<Self> {
        if coalgebra.base().dim() != 1 || coalgebra.base().field() != algebra.field() {
            return Err(Error::AlgebraMismatch("the coalgebra must live over the algebra's ground field".into()));
        }
        let n = algebra.dim() * coalgebra.dim();
        if psi.shape() != (n, n) {
            return Err(Error::Dimension(format!("ψ must be {n}x{n}, got {:?}", psi.shape())));
        }
        Ok(Entwining { algebra, coalgebra, psi })
    }

    /// `ψ(c ⊗ a) = a ⊗ c`.
    pub fn flip(algebra: &Algebra, coalgebra: &Coring) -> Self {
        let (da, dc) = (algebra.dim(), coalgebra.dim());
        let mut psi = Matrix::zeros(da * dc, da * dc);
        for c in 0..dc {
            for a in 0..da {
                psi[(a * dc + c, c * da + a)] = Scalar::one();
            }
        }
        Entwining { algebra: algebra.clone(), coalgebra: coalgebra.clone(), psi }
    }

    /// `ψ(g_i ⊗ a) = a ⊗ g_{i + deg a}` for an algebra graded by the cyclic group of order
    /// `n`, with homogeneous basis of the given degrees, over the group-like coalgebra
    /// of that group. Whether the grading is multiplicative is left to [`check_entwining`].
    pub fn cyclic_grading(algebra: &Algebra, degrees: &[usize], n: usize) -> Result<Self> {
        let da = algebra.dim();
        if degrees.len() != da {
            return Err(Error::Dimension("one degree per basis element".into()));
        }
        let mut psi = Matrix::zeros(da * n, da * n);
        for g in 0..n {
            for (a, deg) in degrees.iter().enumerate() {
                psi[(a * n + (g + deg) % n, g * da + a)] = Scalar::one();
            }
        }
        Entwining::new(algebra.clone(), Coring::group_like(algebra.field(), n), psi)
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim() * self.coalgebra.dim()
    }

    /// `A ⊗ C` with the canonical left action and the `ψ`-twisted right action.
    pub fn candidate_bimodule(&self) -> Result<Bimodule> {
        let (a, dc) = (&self.algebra, self.coalgebra.dim());
        let da = a.dim();
        let n = self.dim();
        let id_c = Matrix::identity(dc);
        let left_action = a.left_regular().iter().map(|l| l.kron(&id_c)).collect();
        let right_action = (0..da)
            .map(|t| {
                let cols: Vec<Vec<Scalar>> = (0..n)
                    .map(|col| {
                        let (i, c) = (col / dc, col % dc);
                        let image = self.psi.col(c * da + t);
                        let mut out = zero_vec(n);
                        for (k, x) in image.iter().enumerate() {
                            if !x.is_zero() {
                                let (j, d) = (k / dc, k % dc);
                                axpy(&mut out, x, &kron_vec(a.basis_product(i, j), &unit_vec(dc, d)));
                            }
                        }
                        out
                    })
                    .collect();
                Matrix::from_columns(n, &cols)
            })
            .collect();
        Bimodule::new(a.clone(), a.clone(), n, left_action, right_action)
    }

    /// `Δ = A ⊗ Δ_C` read in `(A ⊗ C) ⊗_A (A ⊗ C)` via `a ⊗ c ⊗ c' ↦ (a ⊗ c) ⊗ (1 ⊗ c')`,
    /// and `ε = A·ε_C`.
    fn coring_candidate(&self) -> Result<Coring> {
        let carrier = self.candidate_bimodule()?;
        let square = TensorPresentation::new(&carrier, &carrier)?;
        let (a, c) = (&self.algebra, &self.coalgebra);
        let (da, dc) = (a.dim(), c.dim());
        let n = self.dim();
        let pieces: Vec<(usize, usize)> = (0..c.square().dim()).map(|k| c.square().basis_pair(k)).collect();
        let cols: Vec<Vec<Scalar>> = (0..n)
            .map(|col| {
                let (i, x) = (col / dc, col % dc);
                let mut out = zero_vec(square.dim());
                for (k, (u, v)) in pieces.iter().enumerate() {
                    let s = &c.comult()[(k, x)];
                    if !s.is_zero() {
                        let left = unit_vec(n, i * dc + u);
                        let right = kron_vec(a.unit(), &unit_vec(dc, *v));
                        axpy(&mut out, s, &square.project_pure(&left, &right));
                    }
                }
                out
            })
            .collect();
        let comult = Matrix::from_columns(square.dim(), &cols);
        let mut counit = Matrix::zeros(da, n);
        for i in 0..da {
            for x in 0..dc {
                counit[(i, i * dc + x)] = c.counit()[(0, x)].clone();
            }
        }
        Coring::with_square(format!("{}⊗{}", a.name(), c.name()), carrier, square, comult, counit)
    }
}

/// Bimodule axioms for the `ψ`-induced actions, then the coring axioms.
pub fn check_entwining(e: &Entwining) -> CheckReport {
    let mut report = CheckReport::default();
    let bimodule = match e.candidate_bimodule() {
        Ok(b) => b,
        Err(err) => {
            report.push(format!("candidate bimodule: {err}"), Vec::<usize>::new());
            return report;
        }
    };
    report.extend(bimodule.check().prefixed("bimodule"));
    if !report.is_valid() {
        return report;
    }
    match e.coring_candidate() {
        Ok(c) => report.extend(c.check().prefixed("coring")),
        Err(err) => report.push(format!("coring candidate: {err}"), Vec::<usize>::new()),
    }
    report
}

/// The `A`-coring `A ⊗ C`.
pub fn entwined_coring(e: &Entwining) -> Result<Coring> {
    let report = check_entwining(e);
    if let Some(v) = report.violations.first() {
        return Err(Error::Invalid(format!("not an entwining: {} at {:?}", v.identity, v.indices)));
    }
    e.coring_candidate()
}

/// The reindexing `(A ⊗ C) ⊗ (B ⊗ D) → (A ⊗ B) ⊗ (C ⊗ D)` and what was verified about it.
#[derive(Clone, Debug, Serialize)]
pub struct IsoCertificate {
    #[serde(skip)]
    pub matrix: Matrix,
    pub is_permutation: bool,
    pub bimodule_map: bool,
    pub preserves_counit: bool,
    pub preserves_comult: bool,
}

impl IsoCertificate {
    pub fn holds(&self) -> bool {
        self.is_permutation && self.bimodule_map && self.preserves_counit && self.preserves_comult
    }
}

/// `p_{12}`-style middle swap `X ⊗ Y ⊗ Z ⊗ W → X ⊗ Z ⊗ Y ⊗ W` on basis indices.
fn middle_swap(x: usize, y: usize, z: usize, w: usize) -> Matrix {
    let n = x * y * z * w;
    let mut p = Matrix::zeros(n, n);
    for i in 0..x {
        for j in 0..y {
            for k in 0..z {
                for l in 0..w {
                    p[(((i * z + k) * y + j) * w + l, ((i * y + j) * z + k) * w + l)] = Scalar::one();
                }
            }
        }
    }
    p
}

/// `(A ⊗ B, C ⊗ D, ψ ⊗ φ)` with `ψ ⊗ φ = swap ∘ (ψ ⊗_k φ) ∘ swap`, and the coring isomorphism
/// between the tensor product of the entwined corings and the entwined coring of the product.
pub fn tensor_entwining(e1: &Entwining, e2: &Entwining) -> Result<(Entwining, IsoCertificate)> {
    if e1.algebra.field() != e2.algebra.field() {
        return Err(Error::AlgebraMismatch("entwinings over different fields".into()));
    }
    let (da, dc, db, dd) = (e1.algebra.dim(), e1.coalgebra.dim(), e2.algebra.dim(), e2.coalgebra.dim());
    let algebra = e1.algebra.tensor(&e2.algebra)?;
    let coalgebra = tensor_coring(&e1.coalgebra, &e2.coalgebra)?;
    // C ⊗ D ⊗ A ⊗ B → C ⊗ A ⊗ D ⊗ B → A ⊗ C ⊗ B ⊗ D → A ⊗ B ⊗ C ⊗ D
    let psi = middle_swap(da, dc, db, dd).mul(&e1.psi.kron(&e2.psi)).mul(&middle_swap(dc, dd, da, db));
    let product = Entwining::new(algebra, coalgebra, psi)?;
    let c1 = entwined_coring(e1)?;
    let c2 = entwined_coring(e2)?;
    let lhs = tensor_coring(&c1, &c2)?;
    let rhs = entwined_coring(&product).map_err(|e| Error::Inconsistent(format!("tensor entwining is invalid: {e}")))?;
    let matrix = middle_swap(da, dc, db, dd);
    let is_permutation = (0..matrix.cols()).all(|j| {
        let col = matrix.col(j);
        col.iter().filter(|x| x.is_one()).count() == 1 && col.iter().all(|x| x.is_zero() || x.is_one())
    });
    let bimodule_map = lhs.base() == rhs.base() && check_bimodule_map(lhs.carrier(), rhs.carrier(), &matrix).is_valid();
    let preserves_counit = rhs.counit().mul(&matrix) == *lhs.counit();
    let preserves_comult = bimodule_map
        && TensorPresentation::induced(&matrix, &matrix, lhs.square(), rhs.square())
            .map(|pp| pp.mul(lhs.comult()) == rhs.comult().mul(&matrix))
            .unwrap_or(false);
    Ok((product, IsoCertificate { matrix, is_permutation, bimodule_map, preserves_counit, preserves_comult }))
}

#[cfg(test)]
mod tests;
