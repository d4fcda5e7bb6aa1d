//! Spaces of linear maps cut out by linear constraints.
//!
//! Most decision procedures here have the same shape: find a matrix `X` that
//! intertwines some actions, then impose further linear conditions on it. The
//! first step produces a basis of the intertwiner space; the second evaluates the
//! (linear) condition on each basis element and solves for coefficients.

use crate::exactlin::{LinearSystem, Matrix, Scalar};

/// Appends the equations `X·source = target·X` for an unknown `X` of shape
/// `target.rows() x source.rows()`, unknown index `r * cols + c`.
pub fn add_intertwining_equations(sys: &mut LinearSystem, source: &Matrix, target: &Matrix) {
    let rows = target.rows();
    let cols = source.rows();
    debug_assert_eq!(sys.unknowns(), rows * cols);
    // nonzeros of each column of `source` and each row of `target`
    let src_cols: Vec<Vec<(usize, Scalar)>> = (0..cols)
        .map(|c2| (0..cols).filter(|&c| !source[(c, c2)].is_zero()).map(|c| (c, source[(c, c2)].clone())).collect())
        .collect();
    let tgt_rows: Vec<Vec<(usize, Scalar)>> = (0..rows)
        .map(|r| (0..rows).filter(|&s| !target[(r, s)].is_zero()).map(|s| (s, target[(r, s)].clone())).collect())
        .collect();
    let zero = Scalar::zero();
    for r in 0..rows {
        for c2 in 0..cols {
            let mut terms: Vec<(usize, Scalar)> = Vec::new();
            for (c, v) in &src_cols[c2] {
                terms.push((r * cols + c, v.clone()));
            }
            for (s, v) in &tgt_rows[r] {
                terms.push((s * cols + c2, -v));
            }
            if !terms.is_empty() {
                sys.add_equation(&terms, &zero);
            }
        }
    }
}

/// Basis of `{X : X·S_i = T_i·X for all i}` as `target_dim x source_dim` matrices.
pub fn intertwiner_basis(source_dim: usize, target_dim: usize, pairs: &[(&Matrix, &Matrix)]) -> Vec<Matrix> {
    let mut sys = LinearSystem::new(source_dim * target_dim);
    for (s, t) in pairs {
        add_intertwining_equations(&mut sys, s, t);
    }
    let sol = sys.solve().expect("homogeneous systems are consistent");
    sol.kernel
        .into_iter()
        .map(|v| Matrix::from_vec(target_dim, source_dim, v).expect("shape"))
        .collect()
}

/// Finds `X = Σ y_b B_b` with `op(X) = rhs`, for a linear `op`. Returns the canonical
/// particular solution (free coefficients zero) or `None` when inconsistent.
pub fn solve_in_span(
    basis: &[Matrix],
    shape: (usize, usize),
    op: impl Fn(&Matrix) -> Matrix,
    rhs: &Matrix,
) -> Option<(Matrix, Vec<Scalar>)> {
    let images: Vec<Matrix> = basis.iter().map(&op).collect();
    solve_from_images(basis, shape, &images, rhs)
}

/// Same as [`solve_in_span`] with the images already evaluated.
pub fn solve_from_images(
    basis: &[Matrix],
    shape: (usize, usize),
    images: &[Matrix],
    rhs: &Matrix,
) -> Option<(Matrix, Vec<Scalar>)> {
    let n = basis.len();
    let mut sys = LinearSystem::new(n);
    let len = rhs.rows() * rhs.cols();
    for e in 0..len {
        let terms: Vec<(usize, Scalar)> = images
            .iter()
            .enumerate()
            .filter(|(_, m)| !m.data()[e].is_zero())
            .map(|(b, m)| (b, m.data()[e].clone()))
            .collect();
        let r = &rhs.data()[e];
        if terms.is_empty() && r.is_zero() {
            continue;
        }
        sys.add_equation(&terms, r);
        if sys.is_inconsistent() {
            return None;
        }
    }
    let sol = sys.solve()?;
    Some((combine(basis, &sol.particular, shape), sol.particular))
}

/// Concatenates the entries of several matrices into one column, so that constraints
/// of different shapes can be fed to [`solve_from_images`] together.
pub fn flatten(parts: &[&Matrix]) -> Matrix {
    let data: Vec<Scalar> = parts.iter().flat_map(|m| m.data().iter().cloned()).collect();
    let n = data.len();
    Matrix::from_vec(n, 1, data).expect("shape")
}

/// `Σ coeffs[b] · basis[b]`.
pub fn combine(basis: &[Matrix], coeffs: &[Scalar], shape: (usize, usize)) -> Matrix {
    let mut out = Matrix::zeros(shape.0, shape.1);
    for (b, c) in basis.iter().zip(coeffs) {
        out.add_scaled_assign(c, b);
    }
    out
}
