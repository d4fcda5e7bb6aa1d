//! `C`-`D°` bicomodules are the same thing as left `C ⊗_k D`-comodules.
//!
//! Convention: a bicomodule with left coring `C` (over `A`) and right coring `E = D°`
//! (over `B°`) corresponds to a left comodule over `tensor_coring(C, D)` on the same
//! space, with `(a ⊗ b)·m = a·m·b°`.

use serde::Serialize;

use super::{check_bicomodule, check_comodule, Bicomodule, Comodule};
use crate::algebra::Algebra;
use crate::bimodule::{Bimodule, TensorPresentation, TriplePresentation};
use crate::coring::{opposite_coring, tensor_coring, Coring, Side};
use crate::error::{Error, Result};
use crate::exactlin::{kron_vec, unit_vec, Matrix, Scalar};

/// `λ = iso ∘ (C ⊗ ρ) ∘ λ_M`, where `iso(c ⊗ m ⊗ d) = (c ⊗ d) ⊗ m`.
pub fn bicomodule_to_comodule(m: &Bicomodule) -> Result<Comodule> {
    let c = m.left_coring();
    let d = opposite_coring(m.right_coring())?;
    let t = tensor_coring(c, &d)?;
    let (a, b) = (c.base(), d.base());
    let x = m.carrier();
    let left_action: Vec<Matrix> = (0..a.dim())
        .flat_map(|i| (0..b.dim()).map(move |j| (i, j)))
        .map(|(i, j)| x.left_action()[i].mul(&x.right_action()[j]))
        .collect();
    let k = Algebra::ground(a.field());
    let carrier = Bimodule::new(t.base().clone(), k, x.dim(), left_action, vec![Matrix::identity(x.dim())])?;
    let target = TensorPresentation::new(t.carrier(), &carrier)?;

    let (l, r) = (m.left(), m.right());
    let triple = TriplePresentation::from_inner(c.carrier(), r.presentation().clone())?;
    let c_rho = TensorPresentation::induced(&Matrix::identity(c.dim()), m.rho(), l.presentation(), &triple.outer)?;
    let (dc, dd, dm) = (c.dim(), d.dim(), x.dim());
    let iso = triple.map_from_pure(target.dim(), |g, s, u| {
        target.project_pure(&unit_vec(dc * dd, g * dd + u), &unit_vec(dm, s))
    });
    let lambda = iso.mul(&c_rho).mul(m.lambda());
    Comodule::new(&t, Side::Left, carrier, lambda)
}

/// The inverse construction: `λ_M = (C ⊗ ε_D)λ` and `ρ_M = (ε_C ⊗ D)λ`, each read
/// through the identification `(C ⊗ D) ⊗ M ≅ C ⊗ M ⊗ D`.
pub fn comodule_to_bicomodule(n: &Comodule, c: &Coring, d: &Coring) -> Result<Bicomodule> {
    if n.side() != Side::Left {
        return Err(Error::Invalid("expected a left comodule".into()));
    }
    let t = tensor_coring(c, d)?;
    if n.coring().carrier() != t.carrier() || n.coring().comult() != t.comult() {
        return Err(Error::AlgebraMismatch(format!("comodule is not over {}", t.name())));
    }
    let e = opposite_coring(d)?;
    let (a, b) = (c.base(), d.base());
    let y = n.carrier();
    let act = |x: &[Scalar], z: &[Scalar]| y.left_act(&kron_vec(x, z));
    let left_action = (0..a.dim()).map(|i| act(&unit_vec(a.dim(), i), b.unit())).collect();
    let right_action = (0..b.dim()).map(|j| act(a.unit(), &unit_vec(b.dim(), j))).collect();
    let carrier = Bimodule::new(a.clone(), e.base().clone(), y.dim(), left_action, right_action)?;
    let left_pres = TensorPresentation::new(c.carrier(), &carrier)?;
    let right_pres = TensorPresentation::new(&carrier, e.carrier())?;
    let (dc, dd) = (c.dim(), d.dim());
    let p = n.presentation();
    let to_left = p.map_from_pure(left_pres.dim(), |u, s| {
        let (g, v) = (u / dd, u % dd);
        let m = act(a.unit(), &d.counit().col(v)).col(s);
        left_pres.project_pure(&unit_vec(dc, g), &m)
    });
    let to_right = p.map_from_pure(right_pres.dim(), |u, s| {
        let (g, v) = (u / dd, u % dd);
        let m = act(&c.counit().col(g), b.unit()).col(s);
        right_pres.project_pure(&m, &unit_vec(dd, v))
    });
    Bicomodule::new(c, &e, carrier, to_left.mul(n.coaction()), to_right.mul(n.coaction()))
}

/// Outcome of a round trip through the equivalence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RoundTrip {
    /// Every intermediate object passed its axiom check.
    pub stages_valid: bool,
    /// Same actions on the same space.
    pub carrier_identical: bool,
    /// Same coaction matrices.
    pub structure_identical: bool,
}

impl RoundTrip {
    pub fn passes(&self) -> bool {
        self.stages_valid && self.carrier_identical && self.structure_identical
    }
}

/// bicomodule → comodule → bicomodule.
pub fn bicomodule_round_trip(m: &Bicomodule) -> Result<RoundTrip> {
    let n = bicomodule_to_comodule(m)?;
    let d = opposite_coring(m.right_coring())?;
    let back = comodule_to_bicomodule(&n, m.left_coring(), &d)?;
    Ok(RoundTrip {
        stages_valid: check_bicomodule(m).is_valid() && check_comodule(&n).is_valid() && check_bicomodule(&back).is_valid(),
        carrier_identical: back.carrier() == m.carrier(),
        structure_identical: back.lambda() == m.lambda() && back.rho() == m.rho(),
    })
}

/// comodule → bicomodule → comodule, for a left comodule over `tensor_coring(c, d)`.
pub fn comodule_round_trip(n: &Comodule, c: &Coring, d: &Coring) -> Result<RoundTrip> {
    let m = comodule_to_bicomodule(n, c, d)?;
    let back = bicomodule_to_comodule(&m)?;
    Ok(RoundTrip {
        stages_valid: check_comodule(n).is_valid() && check_bicomodule(&m).is_valid() && check_comodule(&back).is_valid(),
        carrier_identical: back.carrier() == n.carrier(),
        structure_identical: back.coaction() == n.coaction(),
    })
}
