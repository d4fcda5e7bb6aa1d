//! Coseparability, decided along two independent routes.
//!
//! * γ-route: an `A`-bimodule map `γ: C ⊗_A C → A` with `γΔ = ε` and
//!   `(C ⊗ γ)(Δ ⊗ C) = (γ ⊗ C)(C ⊗ Δ)`.
//! * π-route: a `C`-bicolinear `π: C ⊗_A C → C` with `πΔ = id`.
//!
//! Both are linear systems over the space of bimodule maps out of `C ⊗_A C`; their
//! solvability must agree.

use super::Coring;
use crate::bimodule::{Bimodule, TensorPresentation};
use crate::error::{Error, Result};
use crate::exactlin::{axpy, unit_vec, zero_vec, Matrix, Scalar};
use crate::linear_maps::{flatten, intertwiner_basis, solve_from_images};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cointegral {
    /// `γ = επ`, `dim A x dim(C ⊗_A C)`.
    pub gamma: Matrix,
    /// The canonical solution of the π-system, `dim C x dim(C ⊗_A C)`.
    pub pi: Matrix,
    /// The canonical solution of the γ-system, found independently of `π`.
    pub gamma_independent: Matrix,
}

struct Shared {
    /// `Δ ⊗ C`
    delta_c: Matrix,
    /// `C ⊗ Δ`
    c_delta: Matrix,
    /// For each basis triple `e_g ⊗ e_s ⊗ e_t` of the triple tensor: `[e_g ⊗ e_s]` and `t`.
    split: Vec<(Vec<Scalar>, usize)>,
}

fn shared(c: &Coring) -> Result<Shared> {
    let t = c.triple()?;
    let d = c.dim();
    let split = (0..t.dim())
        .map(|k| {
            let (g, s, u) = t.basis_triple(k);
            (c.square().project_pure(&unit_vec(d, g), &unit_vec(d, s)), u)
        })
        .collect();
    Ok(Shared { delta_c: c.delta_c()?, c_delta: c.c_delta()?, split })
}

/// `γ ⊗ C` on the triple tensor.
fn gamma_c(c: &Coring, s: &Shared, gamma: &Matrix) -> Matrix {
    let cols: Vec<Vec<Scalar>> = s
        .split
        .iter()
        .map(|(x, u)| {
            let a = gamma.mul_vec(x);
            let mut out = zero_vec(c.dim());
            for (i, l) in c.carrier().left_action().iter().enumerate() {
                if !a[i].is_zero() {
                    axpy(&mut out, &a[i], &l.col(*u));
                }
            }
            out
        })
        .collect();
    Matrix::from_columns(c.dim(), &cols)
}

/// `π ⊗ C` on the triple tensor.
fn pi_c(c: &Coring, s: &Shared, pi: &Matrix) -> Matrix {
    let d = c.dim();
    let cols: Vec<Vec<Scalar>> =
        s.split.iter().map(|(x, u)| c.square().project_pure(&pi.mul_vec(x), &unit_vec(d, *u))).collect();
    Matrix::from_columns(c.square().dim(), &cols)
}

fn bimodule_maps_out_of_square(c: &Coring, target: &Bimodule) -> Vec<Matrix> {
    let q = c.square().quotient();
    let pairs: Vec<(&Matrix, &Matrix)> = q
        .left_action()
        .iter()
        .zip(target.left_action())
        .chain(q.right_action().iter().zip(target.right_action()))
        .collect();
    intertwiner_basis(q.dim(), target.dim(), &pairs)
}

/// The γ-route: canonical solution or `None`.
pub fn solve_gamma(c: &Coring) -> Result<Option<Matrix>> {
    let s = shared(c)?;
    solve_gamma_with(c, &s)
}

fn solve_gamma_with(c: &Coring, s: &Shared) -> Result<Option<Matrix>> {
    let t = c.triple()?;
    let a = Bimodule::regular(c.base());
    let q = c.square().dim();
    let basis = bimodule_maps_out_of_square(c, &a);
    let mut failure = None;
    let op = |g: &Matrix| -> Matrix {
        let first = g.mul(c.comult());
        match t.outer.contract_right(g) {
            Ok(l) => flatten(&[&first, &l.mul(&s.delta_c).sub(&gamma_c(c, s, g).mul(&s.c_delta))]),
            Err(e) => {
                failure.get_or_insert(e.to_string());
                flatten(&[&first, &Matrix::zeros(c.dim(), q)])
            }
        }
    };
    let rhs = flatten(&[c.counit(), &Matrix::zeros(c.dim(), q)]);
    let images: Vec<Matrix> = basis.iter().map(op).collect();
    if let Some(e) = failure {
        return Err(Error::Invalid(format!("γ constraint undefined: {e}")));
    }
    Ok(solve_from_images(&basis, (a.dim(), q), &images, &rhs).map(|(g, _)| g))
}

/// The π-route: canonical solution or `None`.
pub fn solve_pi(c: &Coring) -> Result<Option<Matrix>> {
    let s = shared(c)?;
    solve_pi_with(c, &s)
}

fn solve_pi_with(c: &Coring, s: &Shared) -> Result<Option<Matrix>> {
    let t = c.triple()?;
    let (d, q) = (c.dim(), c.square().dim());
    let basis = bimodule_maps_out_of_square(c, c.carrier());
    let id = Matrix::identity(d);
    let mut failure = None;
    let op = |p: &Matrix| -> Matrix {
        let split = p.mul(c.comult());
        let dp = c.comult().mul(p);
        match TensorPresentation::induced(&id, p, &t.outer, c.square()) {
            Ok(cp) => {
                let pc = pi_c(c, s, p);
                flatten(&[&split, &dp.sub(&cp.mul(&s.delta_c)), &dp.sub(&pc.mul(&s.c_delta))])
            }
            Err(e) => {
                failure.get_or_insert(e.to_string());
                flatten(&[&split, &Matrix::zeros(2 * q, q)])
            }
        }
    };
    let images: Vec<Matrix> = basis.iter().map(op).collect();
    if let Some(e) = failure {
        return Err(Error::Invalid(format!("π constraint undefined: {e}")));
    }
    let rhs = flatten(&[&id, &Matrix::zeros(2 * q, q)]);
    Ok(solve_from_images(&basis, (d, q), &images, &rhs).map(|(p, _)| p))
}

/// Decides coseparability by both routes. Returns `Err(Inconsistent)` if the routes
/// disagree or the returned witnesses fail `γ = επ`, `πΔ = id` or
/// `π = (C ⊗ γ)(Δ ⊗ C)`.
pub fn coseparability(c: &Coring) -> Result<Option<Cointegral>> {
    let s = shared(c)?;
    let gamma = solve_gamma_with(c, &s)?;
    let pi = solve_pi_with(c, &s)?;
    match (gamma, pi) {
        (None, None) => Ok(None),
        (Some(_), None) | (None, Some(_)) => Err(Error::Inconsistent(format!(
            "{}: γ-system and π-system disagree on solvability",
            c.name()
        ))),
        (Some(gamma_independent), Some(pi)) => {
            let gamma = c.counit().mul(&pi);
            if pi.mul(c.comult()) != Matrix::identity(c.dim()) {
                return Err(Error::Inconsistent("πΔ ≠ id".into()));
            }
            let t = c.triple()?;
            let rebuilt = t.outer.contract_right(&gamma)?.mul(&s.delta_c);
            if rebuilt != pi {
                return Err(Error::Inconsistent("π ≠ (C⊗γ)(Δ⊗C) for γ = επ".into()));
            }
            if gamma.mul(c.comult()) != *c.counit() {
                return Err(Error::Inconsistent("επΔ ≠ ε".into()));
            }
            Ok(Some(Cointegral { gamma, pi, gamma_independent }))
        }
    }
}

/// Checks the γ-route identities for a given candidate.
pub fn is_cointegral(c: &Coring, gamma: &Matrix) -> Result<bool> {
    let s = shared(c)?;
    let t = c.triple()?;
    let a = Bimodule::regular(c.base());
    if !crate::bimodule::check_bimodule_map(c.square().quotient(), &a, gamma).is_valid() {
        return Ok(false);
    }
    if gamma.mul(c.comult()) != *c.counit() {
        return Ok(false);
    }
    let lhs = t.outer.contract_right(gamma)?.mul(&s.delta_c);
    let rhs = gamma_c(c, &s, gamma).mul(&s.c_delta);
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Algebra;
    use crate::exactlin::Field;

    const Q: Field = Field::Rationals;

    #[test]
    fn trivial_corings_are_coseparable() {
        for a in [Algebra::ground(Q), Algebra::matrix_algebra(Q, 2), Algebra::truncated_polynomials(Q, 2)] {
            let c = Coring::trivial(&a);
            let w = coseparability(&c).unwrap().expect("coseparable");
            assert!(is_cointegral(&c, &w.gamma).unwrap());
            assert!(is_cointegral(&c, &w.gamma_independent).unwrap());
        }
    }

    #[test]
    fn comatrix_half_weighted_cointegral() {
        let c = Coring::comatrix(Q, 2);
        // γ(e_ab ⊗ e_cd) = ½ δ_bc δ_ad, written on the pure basis of C ⊗_k C = C ⊗_A C
        let sq = c.square();
        let gamma = sq.map_from_pure(1, |x, y| {
            let (a, b, cc, d) = (x / 2, x % 2, y / 2, y % 2);
            vec![if b == cc && a == d { Scalar::ratio(1, 2) } else { Scalar::zero() }]
        });
        assert_eq!(gamma.mul(c.comult()), *c.counit());
        assert!(is_cointegral(&c, &gamma).unwrap());
        assert!(coseparability(&c).unwrap().is_some());
    }

    #[test]
    fn dual_of_dual_numbers_is_not_coseparable() {
        let c = Coring::dual_coalgebra(&Algebra::truncated_polynomials(Q, 2));
        assert!(solve_gamma(&c).unwrap().is_none());
        assert!(solve_pi(&c).unwrap().is_none());
        assert!(coseparability(&c).unwrap().is_none());
    }

    #[test]
    fn group_like_is_coseparable() {
        let c = Coring::group_like(Q, 3);
        let w = coseparability(&c).unwrap().unwrap();
        assert_eq!(w.pi.mul(c.comult()), Matrix::identity(3));
    }
}
