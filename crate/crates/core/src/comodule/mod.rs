//! Comodules and bicomodules over corings.
//!
//! A right `C`-comodule is a right `A`-module `M` with `ρ: M → M ⊗_A C`; a left one has
//! `λ: M → C ⊗_A M`. The carrier is always a [`Bimodule`]; its other side is either the
//! ground field or the algebra of a second coring (bicomodules).

mod equivalence;

pub use equivalence::{bicomodule_to_comodule, comodule_to_bicomodule, bicomodule_round_trip, comodule_round_trip, RoundTrip};

use crate::bimodule::{check_bimodule_map, Bimodule, TensorPresentation, TriplePresentation};
use crate::coring::{Coring, Side};
use crate::error::{Error, Result};
use crate::exactlin::{axpy, unit_vec, zero_vec, Matrix, Subspace};
use crate::report::CheckReport;

#[derive(Clone, Debug)]
pub struct Comodule {
    coring: Coring,
    side: Side,
    carrier: Bimodule,
    /// `M ⊗_A C` (right) or `C ⊗_A M` (left).
    presentation: TensorPresentation,
    coaction: Matrix,
}

impl Comodule {
    pub fn new(coring: &Coring, side: Side, carrier: Bimodule, coaction: Matrix) -> Result<Self> {
        let presentation = match side {
            Side::Right => TensorPresentation::new(&carrier, coring.carrier())?,
            Side::Left => TensorPresentation::new(coring.carrier(), &carrier)?,
        };
        if coaction.shape() != (presentation.dim(), carrier.dim()) {
            return Err(Error::Dimension(format!(
                "coaction must be {}x{}, got {:?}",
                presentation.dim(),
                carrier.dim(),
                coaction.shape()
            )));
        }
        Ok(Comodule { coring: coring.clone(), side, carrier, presentation, coaction })
    }

    /// `C` with coaction `Δ`.
    pub fn regular(coring: &Coring, side: Side) -> Self {
        Comodule {
            coring: coring.clone(),
            side,
            carrier: coring.carrier().clone(),
            presentation: coring.square().clone(),
            coaction: coring.comult().clone(),
        }
    }

    pub fn coring(&self) -> &Coring {
        &self.coring
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn carrier(&self) -> &Bimodule {
        &self.carrier
    }

    pub fn dim(&self) -> usize {
        self.carrier.dim()
    }

    pub fn presentation(&self) -> &TensorPresentation {
        &self.presentation
    }

    pub fn coaction(&self) -> &Matrix {
        &self.coaction
    }

    /// `(ρ ⊗ C)ρ` and `(M ⊗ Δ)ρ` for a right comodule, `(Δ ⊗ M)λ` and `(C ⊗ λ)λ` for a
    /// left one, both in the triple tensor.
    pub fn coassociativity_sides(&self) -> Result<(Matrix, Matrix)> {
        let c = &self.coring;
        let (p, x) = (&self.presentation, &self.coaction);
        match self.side {
            Side::Right => {
                let t = TriplePresentation::from_inner(&self.carrier, c.square().clone())?;
                let rho_c = t.induced_left(p, x, p)?;
                let m_delta = TensorPresentation::induced(&Matrix::identity(self.dim()), c.comult(), p, &t.outer)?;
                Ok((rho_c.mul(x), m_delta.mul(x)))
            }
            Side::Left => {
                let t = TriplePresentation::from_inner(c.carrier(), p.clone())?;
                let delta_m = t.induced_left(c.square(), c.comult(), p)?;
                let c_lambda = TensorPresentation::induced(&Matrix::identity(c.dim()), x, p, &t.outer)?;
                Ok((delta_m.mul(x), c_lambda.mul(x)))
            }
        }
    }

    /// `(M ⊗ ε)ρ` or `(ε ⊗ M)λ`; the identity for a valid comodule.
    pub fn counit_side(&self) -> Result<Matrix> {
        let contraction = match self.side {
            Side::Right => self.presentation.contract_right(self.coring.counit())?,
            Side::Left => self.presentation.contract_left(self.coring.counit())?,
        };
        Ok(contraction.mul(&self.coaction))
    }
}

/// Linearity of the coaction, coassociativity and the counit law.
pub fn check_comodule(m: &Comodule) -> CheckReport {
    let mut report =
        check_bimodule_map(&m.carrier, m.presentation.quotient(), &m.coaction).prefixed("coaction linearity");
    if !report.is_valid() {
        return report;
    }
    match m.coassociativity_sides() {
        Ok((l, r)) => {
            for j in 0..m.dim() {
                if l.col(j) != r.col(j) {
                    report.push("coassociativity", [j]);
                }
            }
        }
        Err(e) => report.push(format!("coassociativity undefined: {e}"), Vec::<usize>::new()),
    }
    match m.counit_side() {
        Ok(u) => {
            for j in 0..m.dim() {
                if u.col(j) != unit_vec(m.dim(), j) {
                    report.push("counit", [j]);
                }
            }
        }
        Err(e) => report.push(format!("counit undefined: {e}"), Vec::<usize>::new()),
    }
    report
}

/// `f: M → N` is a comodule morphism: linear for the carriers and compatible with the
/// coactions.
pub fn check_comodule_morphism(m: &Comodule, n: &Comodule, f: &Matrix) -> CheckReport {
    let mut report = check_bimodule_map(&m.carrier, &n.carrier, f).prefixed("linearity");
    if !report.is_valid() {
        return report;
    }
    if m.side != n.side || m.coring.carrier() != n.coring.carrier() || m.coring.comult() != n.coring.comult() {
        report.push("comodules over different corings or sides", Vec::<usize>::new());
        return report;
    }
    let id = Matrix::identity(m.coring.dim());
    let transported = match m.side {
        Side::Right => TensorPresentation::induced(f, &id, &m.presentation, &n.presentation),
        Side::Left => TensorPresentation::induced(&id, f, &m.presentation, &n.presentation),
    };
    match transported {
        Ok(t) => {
            let (l, r) = (n.coaction.mul(f), t.mul(&m.coaction));
            for j in 0..m.dim() {
                if l.col(j) != r.col(j) {
                    report.push("colinearity", [j]);
                }
            }
        }
        Err(e) => report.push(format!("colinearity undefined: {e}"), Vec::<usize>::new()),
    }
    report
}

/// A `C'`-`C` bicomodule: a left `C'`-comodule and a right `C`-comodule on the same
/// `(A', A)`-bimodule.
#[derive(Clone, Debug)]
pub struct Bicomodule {
    left: Comodule,
    right: Comodule,
}

impl Bicomodule {
    pub fn new(left_coring: &Coring, right_coring: &Coring, carrier: Bimodule, lambda: Matrix, rho: Matrix) -> Result<Self> {
        let left = Comodule::new(left_coring, Side::Left, carrier.clone(), lambda)?;
        let right = Comodule::new(right_coring, Side::Right, carrier, rho)?;
        Ok(Bicomodule { left, right })
    }

    /// `C` over `(C, C)` with both coactions `Δ`.
    pub fn regular(c: &Coring) -> Self {
        Bicomodule { left: Comodule::regular(c, Side::Left), right: Comodule::regular(c, Side::Right) }
    }

    /// `C ⊗_A C` over `(C, C)` with `λ = Δ ⊗ C` and `ρ = C ⊗ Δ`.
    pub fn square(c: &Coring) -> Result<Self> {
        let carrier = c.square().quotient().clone();
        // the triple tensor is presented as C ⊗ (C ⊗ C), which is already the target of λ
        let lambda = c.delta_c()?;
        let right_pres = TensorPresentation::new(&carrier, c.carrier())?;
        let (d, sq) = (c.dim(), c.square());
        let rebracket = c.triple()?.map_from_pure(right_pres.dim(), |g, s, u| {
            right_pres.project_pure(&sq.project_pure(&unit_vec(d, g), &unit_vec(d, s)), &unit_vec(d, u))
        });
        Bicomodule::new(c, c, carrier, lambda, rebracket.mul(&c.c_delta()?))
    }

    pub fn left(&self) -> &Comodule {
        &self.left
    }

    pub fn right(&self) -> &Comodule {
        &self.right
    }

    pub fn left_coring(&self) -> &Coring {
        &self.left.coring
    }

    pub fn right_coring(&self) -> &Coring {
        &self.right.coring
    }

    pub fn carrier(&self) -> &Bimodule {
        &self.left.carrier
    }

    pub fn dim(&self) -> usize {
        self.carrier().dim()
    }

    pub fn lambda(&self) -> &Matrix {
        &self.left.coaction
    }

    pub fn rho(&self) -> &Matrix {
        &self.right.coaction
    }

    /// `(C' ⊗ ρ)λ` and `(λ ⊗ C)ρ` in `C' ⊗ M ⊗ C`.
    pub fn compatibility_sides(&self) -> Result<(Matrix, Matrix)> {
        let (l, r) = (&self.left, &self.right);
        let t = TriplePresentation::from_inner(l.coring.carrier(), r.presentation.clone())?;
        let c_rho = TensorPresentation::induced(&Matrix::identity(l.coring.dim()), &r.coaction, &l.presentation, &t.outer)?;
        let lambda_c = t.induced_left(&l.presentation, &l.coaction, &r.presentation)?;
        Ok((c_rho.mul(&l.coaction), lambda_c.mul(&r.coaction)))
    }
}

/// Both comodule structures and the compatibility square.
pub fn check_bicomodule(m: &Bicomodule) -> CheckReport {
    let mut report = check_comodule(&m.left).prefixed("left");
    report.extend(check_comodule(&m.right).prefixed("right"));
    if !report.is_valid() {
        return report;
    }
    match m.compatibility_sides() {
        Ok((l, r)) => {
            for j in 0..m.dim() {
                if l.col(j) != r.col(j) {
                    report.push("compatibility", [j]);
                }
            }
        }
        Err(e) => report.push(format!("compatibility undefined: {e}"), Vec::<usize>::new()),
    }
    report
}

pub fn check_bicomodule_morphism(m: &Bicomodule, n: &Bicomodule, f: &Matrix) -> CheckReport {
    let mut report = check_comodule_morphism(&m.left, &n.left, f).prefixed("left");
    report.extend(check_comodule_morphism(&m.right, &n.right, f).prefixed("right"));
    report
}

/// `X ⊗_{A'} M` with coaction `X ⊗ ρ`, for a right `A'`-module `X` (a bimodule over
/// `(k, A')`) and a right comodule `M` whose carrier is an `(A', A)`-bimodule.
pub fn induced_comodule(x: &Bimodule, m: &Comodule) -> Result<Comodule> {
    if m.side != Side::Right {
        return Err(Error::Invalid("induced comodules are built from right comodules".into()));
    }
    let report = check_comodule(m);
    if let Some(v) = report.violations.first() {
        return Err(Error::Invalid(format!("not a comodule: {} at {:?}", v.identity, v.indices)));
    }
    let xm = TensorPresentation::new(x, &m.carrier)?;
    let carrier = xm.quotient().clone();
    let target = TensorPresentation::new(&carrier, m.coring.carrier())?;
    let (dx, dm) = (x.dim(), m.dim());
    let pieces: Vec<(usize, usize)> = (0..m.presentation.dim()).map(|k| m.presentation.basis_pair(k)).collect();
    let dc = m.coring.dim();
    // x ⊗ m_w ↦ Σ ρ(m_w)_k (x ⊗ m_u) ⊗ c_v
    let coaction = xm.map_from_pure(target.dim(), |g, w| {
        let mut out = zero_vec(target.dim());
        for (k, (u, v)) in pieces.iter().enumerate() {
            let a = &m.coaction[(k, w)];
            if !a.is_zero() {
                let inner = xm.project_pure(&unit_vec(dx, g), &unit_vec(dm, *u));
                axpy(&mut out, a, &target.project_pure(&inner, &unit_vec(dc, *v)));
            }
        }
        out
    });
    Comodule::new(&m.coring, Side::Right, carrier, coaction)
}

/// `M □_C N ⊆ M ⊗_A N`.
#[derive(Clone, Debug)]
pub struct Cotensor {
    pub presentation: TensorPresentation,
    pub subspace: Subspace,
}

/// The kernel of `ρ_M ⊗ N − M ⊗ λ_N: M ⊗_A N → M ⊗_A C ⊗_A N`.
pub fn cotensor(m: &Comodule, n: &Comodule) -> Result<Cotensor> {
    if m.side != Side::Right || n.side != Side::Left {
        return Err(Error::Invalid("cotensor needs a right and a left comodule".into()));
    }
    if m.coring.carrier() != n.coring.carrier() || m.coring.comult() != n.coring.comult() {
        return Err(Error::AlgebraMismatch("comodules over different corings".into()));
    }
    let p = TensorPresentation::new(&m.carrier, &n.carrier)?;
    let t = TriplePresentation::from_inner(&m.carrier, n.presentation.clone())?;
    let rho_n = t.induced_left(&m.presentation, &m.coaction, &p)?;
    let m_lambda = TensorPresentation::induced(&Matrix::identity(m.dim()), &n.coaction, &p, &t.outer)?;
    let subspace = Subspace::kernel_of(&rho_n.sub(&m_lambda));
    Ok(Cotensor { presentation: p, subspace })
}

#[cfg(test)]
mod tests;
