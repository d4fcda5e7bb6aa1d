//! Bimodules, bimodule maps and balanced tensor products.
//!
//! Convention: vectors are columns, so every action is a square matrix. The right
//! action of `b` is the matrix of `m ↦ m·b`; consequently
//! `right_action(e_i)·right_action(e_j) = right_action(e_j e_i)`.

mod tensor;

pub use tensor::{shuffle_iso, TensorPresentation, TriplePresentation};

use crate::algebra::{Algebra, LeftModule};
use crate::error::{Error, Result};
use crate::exactlin::{Matrix, Scalar};
use crate::report::CheckReport;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bimodule {
    left_algebra: Algebra,
    right_algebra: Algebra,
    dim: usize,
    left_action: Vec<Matrix>,
    right_action: Vec<Matrix>,
}

impl Bimodule {
    pub fn new(
        left_algebra: Algebra,
        right_algebra: Algebra,
        dim: usize,
        left_action: Vec<Matrix>,
        right_action: Vec<Matrix>,
    ) -> Result<Self> {
        if left_algebra.field() != right_algebra.field() {
            return Err(Error::AlgebraMismatch("left and right algebras over different fields".into()));
        }
        if left_action.len() != left_algebra.dim() || right_action.len() != right_algebra.dim() {
            return Err(Error::Dimension("one action matrix per algebra basis element".into()));
        }
        if left_action.iter().chain(&right_action).any(|m| m.shape() != (dim, dim)) {
            return Err(Error::Dimension(format!("action matrices must be {dim}x{dim}")));
        }
        Ok(Bimodule { left_algebra, right_algebra, dim, left_action, right_action })
    }

    /// `k^dim` as a bimodule over the ground field on both sides.
    pub fn over_ground(field: crate::exactlin::Field, dim: usize) -> Self {
        let k = Algebra::ground(field);
        Bimodule {
            left_algebra: k.clone(),
            right_algebra: k,
            dim,
            left_action: vec![Matrix::identity(dim)],
            right_action: vec![Matrix::identity(dim)],
        }
    }

    /// `A` as an `A`-`A`-bimodule.
    pub fn regular(a: &Algebra) -> Self {
        Bimodule {
            left_algebra: a.clone(),
            right_algebra: a.clone(),
            dim: a.dim(),
            left_action: a.left_regular(),
            right_action: a.right_regular(),
        }
    }

    pub fn left_algebra(&self) -> &Algebra {
        &self.left_algebra
    }

    pub fn right_algebra(&self) -> &Algebra {
        &self.right_algebra
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn left_action(&self) -> &[Matrix] {
        &self.left_action
    }

    pub fn right_action(&self) -> &[Matrix] {
        &self.right_action
    }

    pub fn left_act(&self, a: &[Scalar]) -> Matrix {
        Algebra::linear_combination(a, &self.left_action)
    }

    pub fn right_act(&self, b: &[Scalar]) -> Matrix {
        Algebra::linear_combination(b, &self.right_action)
    }

    pub fn check(&self) -> CheckReport {
        let mut report = CheckReport::default();
        let (a, b) = (&self.left_algebra, &self.right_algebra);
        let id = Matrix::identity(self.dim);
        if self.left_act(a.unit()) != id {
            report.push("left unit", Vec::<usize>::new());
        }
        if self.right_act(b.unit()) != id {
            report.push("right unit", Vec::<usize>::new());
        }
        for i in 0..a.dim() {
            for j in 0..a.dim() {
                if self.left_action[i].mul(&self.left_action[j]) != self.left_act(a.basis_product(i, j)) {
                    report.push("left associativity", [i, j]);
                }
            }
        }
        for i in 0..b.dim() {
            for j in 0..b.dim() {
                if self.right_action[i].mul(&self.right_action[j]) != self.right_act(b.basis_product(j, i)) {
                    report.push("right associativity", [i, j]);
                }
            }
        }
        for i in 0..a.dim() {
            for j in 0..b.dim() {
                let (l, r) = (&self.left_action[i], &self.right_action[j]);
                if l.mul(r) != r.mul(l) {
                    report.push("actions commute", [i, j]);
                }
            }
        }
        report
    }

    /// `M°` over `(B°, A°)`: `b°·m·a° = a·m·b`, same underlying space.
    pub fn opposite(&self) -> Bimodule {
        Bimodule {
            left_algebra: self.right_algebra.opposite(),
            right_algebra: self.left_algebra.opposite(),
            dim: self.dim,
            left_action: self.right_action.clone(),
            right_action: self.left_action.clone(),
        }
    }

    /// `M ⊗_k L` over `(A ⊗ B, A' ⊗ B')`, basis `m_i ⊗ l_j` at `i * dim L + j`.
    pub fn ktensor(&self, other: &Bimodule) -> Result<Bimodule> {
        let left_algebra = self.left_algebra.tensor(&other.left_algebra)?;
        let right_algebra = self.right_algebra.tensor(&other.right_algebra)?;
        let kron_all = |x: &[Matrix], y: &[Matrix]| -> Vec<Matrix> {
            x.iter().flat_map(|p| y.iter().map(move |q| p.kron(q))).collect()
        };
        Ok(Bimodule {
            left_algebra,
            right_algebra,
            dim: self.dim * other.dim,
            left_action: kron_all(&self.left_action, &other.left_action),
            right_action: kron_all(&self.right_action, &other.right_action),
        })
    }

    /// Restricts the right action along an algebra map `sub → right_algebra`
    /// given by its matrix (`right_algebra.dim x sub.dim`).
    pub fn restrict_right(&self, sub: &Algebra, inclusion: &Matrix) -> Bimodule {
        let right_action = (0..sub.dim()).map(|i| self.right_act(&inclusion.col(i))).collect();
        Bimodule { right_algebra: sub.clone(), right_action, ..self.clone() }
    }

    /// Restricts the left action along an algebra map `sub → left_algebra`.
    pub fn restrict_left(&self, sub: &Algebra, inclusion: &Matrix) -> Bimodule {
        let left_action = (0..sub.dim()).map(|i| self.left_act(&inclusion.col(i))).collect();
        Bimodule { left_algebra: sub.clone(), left_action, ..self.clone() }
    }

    pub fn as_left_module(&self) -> LeftModule {
        LeftModule::new(self.left_algebra.clone(), self.dim, self.left_action.clone()).expect("validated shapes")
    }

    /// The right module structure, as a left module over the opposite algebra.
    pub fn as_right_module(&self) -> LeftModule {
        LeftModule::new(self.right_algebra.opposite(), self.dim, self.right_action.clone()).expect("validated shapes")
    }
}

/// `f` commutes with both actions, reported per basis element.
pub fn check_bimodule_map(source: &Bimodule, target: &Bimodule, f: &Matrix) -> CheckReport {
    let mut report = CheckReport::default();
    if f.shape() != (target.dim, source.dim) {
        report.push(format!("map shape {:?}, expected {:?}", f.shape(), (target.dim, source.dim)), Vec::<usize>::new());
        return report;
    }
    if source.left_algebra != target.left_algebra || source.right_algebra != target.right_algebra {
        report.push("algebras differ", Vec::<usize>::new());
        return report;
    }
    report.extend(check_left_linear(source, target, f));
    report.extend(check_right_linear(source, target, f));
    report
}

pub fn check_left_linear(source: &Bimodule, target: &Bimodule, f: &Matrix) -> CheckReport {
    let mut report = CheckReport::default();
    for (i, (s, t)) in source.left_action.iter().zip(&target.left_action).enumerate() {
        if f.mul(s) != t.mul(f) {
            report.push("left linearity", [i]);
        }
    }
    report
}

pub fn check_right_linear(source: &Bimodule, target: &Bimodule, f: &Matrix) -> CheckReport {
    let mut report = CheckReport::default();
    for (i, (s, t)) in source.right_action.iter().zip(&target.right_action).enumerate() {
        if f.mul(s) != t.mul(f) {
            report.push("right linearity", [i]);
        }
    }
    report
}

/// A matrix between two bimodules that has been checked to respect both actions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BimoduleMap {
    pub source: Bimodule,
    pub target: Bimodule,
    pub matrix: Matrix,
}

impl BimoduleMap {
    pub fn new(source: Bimodule, target: Bimodule, matrix: Matrix) -> Result<Self> {
        let report = check_bimodule_map(&source, &target, &matrix);
        if let Some(v) = report.violations.first() {
            return Err(Error::Invalid(format!("not a bimodule map: {} at {:?}", v.identity, v.indices)));
        }
        Ok(BimoduleMap { source, target, matrix })
    }

    pub fn identity(m: &Bimodule) -> Self {
        BimoduleMap { source: m.clone(), target: m.clone(), matrix: Matrix::identity(m.dim) }
    }

    /// `self ∘ first`.
    pub fn compose(&self, first: &BimoduleMap) -> Result<BimoduleMap> {
        if first.target != self.source {
            return Err(Error::Dimension("composition of non-matching maps".into()));
        }
        Ok(BimoduleMap {
            source: first.source.clone(),
            target: self.target.clone(),
            matrix: self.matrix.mul(&first.matrix),
        })
    }
}
