//! Balanced tensor products `M ⊗_A N` by finite presentation.
//!
//! Instead of quotienting the (large) space `M ⊗_k N`, `M` is presented by right
//! module generators `g_1..g_r`: with `φ: A^r → M` and `K = ker φ`, right exactness
//! gives `M ⊗_A N = N^r / {(k_j · n)_j : k ∈ K, n ∈ N}`. Coset representatives sit on
//! the non-pivot coordinates of that relation space, so every basis element of the
//! quotient is a pure tensor `g_j ⊗ n_t`.

use std::sync::OnceLock;

use super::{check_left_linear, check_right_linear, Bimodule};
use crate::algebra::generators;
use crate::error::{Error, Result};
use crate::exactlin::{axpy, inverse, kron_vec, right_inverse, unit_vec, zero_vec, Matrix, RowReducer, Scalar, Subspace};

/// `k^n / R` with coordinates on the non-pivot columns of the RREF of `R`.
#[derive(Clone, Debug)]
struct SparseQuotient {
    free: Vec<usize>,
    /// For each relation row: its pivot column and its entries at free positions.
    rows: Vec<(usize, Vec<(usize, Scalar)>)>,
}

impl SparseQuotient {
    fn new(red: &RowReducer) -> Self {
        let width = red.width();
        let mut free_pos = vec![None; width];
        let mut free = Vec::new();
        for c in 0..width {
            if !red.has_pivot(c) {
                free_pos[c] = Some(free.len());
                free.push(c);
            }
        }
        let rows = red
            .sorted_rows()
            .into_iter()
            .map(|row| {
                let pivot = row[0].0;
                let entries = row.iter().filter_map(|(c, v)| free_pos[*c].map(|k| (k, v.clone()))).collect();
                (pivot, entries)
            })
            .collect();
        SparseQuotient { free, rows }
    }

    /// `w − Σ w[p_i] r_i`, read at the free columns.
    fn project(&self, w: &[Scalar]) -> Vec<Scalar> {
        let mut out: Vec<Scalar> = self.free.iter().map(|&f| w[f].clone()).collect();
        for (p, entries) in &self.rows {
            let x = &w[*p];
            if x.is_zero() {
                continue;
            }
            for (k, b) in entries {
                out[*k] -= &b.mul_ref(x);
            }
        }
        out
    }
}

#[derive(Clone, Debug)]
pub struct TensorPresentation {
    left: Bimodule,
    right: Bimodule,
    gens: Vec<usize>,
    /// Column `i`: coefficients `(a_j)` with `m_i = Σ g_j · a_j`, row `j * dim A + t`.
    decomposition: Matrix,
    relations: RowReducer,
    quotient_map: SparseQuotient,
    quotient: OnceLock<Bimodule>,
}

impl TensorPresentation {
    /// Presents `m ⊗_A n` for `m` over `(A', A)` and `n` over `(A, A'')`.
    pub fn new(m: &Bimodule, n: &Bimodule) -> Result<Self> {
        if m.right_algebra() != n.left_algebra() {
            return Err(Error::AlgebraMismatch(format!(
                "cannot tensor over {} and {}",
                m.right_algebra().name(),
                n.left_algebra().name()
            )));
        }
        let a = m.right_algebra();
        let (da, dm, dn) = (a.dim(), m.dim(), n.dim());
        let gens = generators(dm, m.right_action());
        let r = gens.len();
        let phi_cols: Vec<Vec<Scalar>> =
            gens.iter().flat_map(|&g| (0..da).map(move |t| m.right_action()[t].col(g))).collect();
        let phi = Matrix::from_columns(dm, &phi_cols);
        let decomposition = if dm == 0 {
            Matrix::zeros(r * da, 0)
        } else {
            right_inverse(&phi).expect("generators span the module")
        };
        let kernel = crate::exactlin::kernel(&phi);
        let mut relation_vectors = Vec::with_capacity(kernel.len() * dn);
        for k in &kernel {
            let blocks: Vec<Matrix> = (0..r).map(|j| n.left_act(&k[j * da..(j + 1) * da])).collect();
            for t in 0..dn {
                let mut w = Vec::with_capacity(r * dn);
                for b in &blocks {
                    w.extend(b.col(t));
                }
                relation_vectors.push(w);
            }
        }
        let mut relations = RowReducer::new(r * dn);
        for w in &relation_vectors {
            relations.insert_dense(w);
        }
        let quotient_map = SparseQuotient::new(&relations);
        Ok(TensorPresentation {
            left: m.clone(),
            right: n.clone(),
            gens,
            decomposition,
            relations,
            quotient_map,
            quotient: OnceLock::new(),
        })
    }

    fn build_quotient(&self) -> Bimodule {
        let (m, n) = (&self.left, &self.right);
        let q = self.dim();
        let dn = n.dim();
        let left_action = m
            .left_action()
            .iter()
            .map(|act| {
                self.map_from_pure(q, |g, t| self.project_pure(&act.col(g), &unit_vec(dn, t)))
            })
            .collect();
        let right_action = n
            .right_action()
            .iter()
            .map(|act| {
                let cols: Vec<Vec<Scalar>> = (0..q)
                    .map(|k| {
                        let f = self.quotient_map.free[k];
                        let (j, t) = (f / dn, f % dn);
                        let mut w = zero_vec(self.gens.len() * dn);
                        w[j * dn..(j + 1) * dn].clone_from_slice(&act.col(t));
                        self.quotient_map.project(&w)
                    })
                    .collect();
                Matrix::from_columns(q, &cols)
            })
            .collect();
        Bimodule::new(m.left_algebra().clone(), n.right_algebra().clone(), q, left_action, right_action)
            .expect("shapes are consistent")
    }

    pub fn left(&self) -> &Bimodule {
        &self.left
    }

    pub fn right(&self) -> &Bimodule {
        &self.right
    }

    /// `M ⊗_A N` with its induced outer actions.
    pub fn quotient(&self) -> &Bimodule {
        self.quotient.get_or_init(|| self.build_quotient())
    }

    pub fn dim(&self) -> usize {
        self.quotient_map.free.len()
    }

    /// Basis indices of `M` used as right module generators.
    pub fn generators(&self) -> &[usize] {
        &self.gens
    }

    /// Relations inside `N^r`.
    pub fn generator_relations(&self) -> Subspace {
        Subspace::from_reducer(&self.relations)
    }

    /// Quotient basis element `k` is the pure tensor `m_g ⊗ n_t`; returns `(g, t)`.
    pub fn basis_pair(&self, k: usize) -> (usize, usize) {
        let f = self.quotient_map.free[k];
        let dn = self.right.dim();
        (self.gens[f / dn], f % dn)
    }

    /// Image of `m ⊗ n` in the quotient.
    pub fn project_pure(&self, m: &[Scalar], n: &[Scalar]) -> Vec<Scalar> {
        self.project_lifted(&self.lift_pure(m, n))
    }

    /// `m ⊗ n` written in `N^r`.
    fn lift_pure(&self, m: &[Scalar], n: &[Scalar]) -> Vec<Scalar> {
        let da = self.left.right_algebra().dim();
        let dn = self.right.dim();
        let coeffs = self.decomposition.mul_vec(m);
        let support: Vec<(usize, &Scalar)> = n.iter().enumerate().filter(|(_, x)| !x.is_zero()).collect();
        let images: Vec<Vec<Scalar>> = self
            .right
            .left_action()
            .iter()
            .map(|l| {
                let mut out = zero_vec(dn);
                for (s, x) in &support {
                    for (i, o) in out.iter_mut().enumerate() {
                        let a = &l[(i, *s)];
                        if !a.is_zero() {
                            *o += &a.mul_ref(x);
                        }
                    }
                }
                out
            })
            .collect();
        let mut w = zero_vec(self.gens.len() * dn);
        for (j, block) in w.chunks_mut(dn).enumerate() {
            for t in 0..da {
                let c = &coeffs[j * da + t];
                if !c.is_zero() {
                    axpy(block, c, &images[t]);
                }
            }
        }
        w
    }

    fn project_lifted(&self, w: &[Scalar]) -> Vec<Scalar> {
        self.quotient_map.project(w)
    }

    /// `M ⊗_k N → M ⊗_A N`, column `i * dim N + t` is the class of `m_i ⊗ n_t`.
    pub fn projection_matrix(&self) -> Matrix {
        let (dm, dn) = (self.left.dim(), self.right.dim());
        let cols: Vec<Vec<Scalar>> = (0..dm * dn)
            .map(|c| self.project_pure(&unit_vec(dm, c / dn), &unit_vec(dn, c % dn)))
            .collect();
        Matrix::from_columns(self.dim(), &cols)
    }

    /// `M ⊗_A N → M ⊗_k N` sending each basis element to its pure representative.
    pub fn section_matrix(&self) -> Matrix {
        let (dm, dn) = (self.left.dim(), self.right.dim());
        let cols: Vec<Vec<Scalar>> = (0..self.dim())
            .map(|k| {
                let (g, t) = self.basis_pair(k);
                kron_vec(&unit_vec(dm, g), &unit_vec(dn, t))
            })
            .collect();
        Matrix::from_columns(dm * dn, &cols)
    }

    /// `span{(m·a) ⊗ n − m ⊗ (a·n)}` inside `M ⊗_k N`, computed literally.
    /// Only meant for small inputs; the presentation never needs it.
    pub fn literal_relation_space(m: &Bimodule, n: &Bimodule) -> Result<Subspace> {
        let (dm, dn) = (m.dim(), n.dim());
        let mut vectors = Vec::new();
        for (ra, la) in m.right_action().iter().zip(n.left_action()) {
            for i in 0..dm {
                for t in 0..dn {
                    let mut v = kron_vec(&ra.col(i), &unit_vec(dn, t));
                    let w = kron_vec(&unit_vec(dm, i), &la.col(t));
                    axpy(&mut v, &-Scalar::one(), &w);
                    vectors.push(v);
                }
            }
        }
        Subspace::span(dm * dn, vectors.iter().map(Vec::as_slice))
    }

    /// Builds a map out of the quotient from its values on the pure basis tensors.
    pub fn map_from_pure(&self, target_dim: usize, f: impl Fn(usize, usize) -> Vec<Scalar>) -> Matrix {
        let cols: Vec<Vec<Scalar>> = (0..self.dim())
            .map(|k| {
                let (g, t) = self.basis_pair(k);
                f(g, t)
            })
            .collect();
        Matrix::from_columns(target_dim, &cols)
    }

    /// `f ⊗_A g: M ⊗_A N → M' ⊗_A N'` for `f` right `A`-linear and `g` left `A`-linear.
    pub fn induced(f: &Matrix, g: &Matrix, src: &TensorPresentation, dst: &TensorPresentation) -> Result<Matrix> {
        if f.shape() != (dst.left.dim(), src.left.dim()) || g.shape() != (dst.right.dim(), src.right.dim()) {
            return Err(Error::Dimension("induced map: factor shapes do not match the presentations".into()));
        }
        let rf = check_right_linear(&src.left, &dst.left, f);
        let lg = check_left_linear(&src.right, &dst.right, g);
        if let Some(v) = rf.violations.first().or(lg.violations.first()) {
            return Err(Error::NotBalanced(format!("{} fails at {:?}", v.identity, v.indices)));
        }
        Ok(src.map_from_pure(dst.dim(), |m, t| dst.project_pure(&f.col(m), &g.col(t))))
    }

    /// `M ⊗_A N → M`, `m ⊗ n ↦ m · h(n)`, for a left `A`-linear `h: N → A`.
    pub fn contract_right(&self, h: &Matrix) -> Result<Matrix> {
        let a = Bimodule::regular(self.left.right_algebra());
        if h.shape() != (a.dim(), self.right.dim()) {
            return Err(Error::Dimension("contraction shape".into()));
        }
        let rep = check_left_linear(&self.right, &a, h);
        if let Some(v) = rep.violations.first() {
            return Err(Error::NotBalanced(format!("contraction: {} fails at {:?}", v.identity, v.indices)));
        }
        let dm = self.left.dim();
        Ok(self.map_from_pure(dm, |g, t| {
            let mut out = zero_vec(dm);
            for (s, r) in self.left.right_action().iter().enumerate() {
                let c = &h[(s, t)];
                if !c.is_zero() {
                    axpy(&mut out, c, &r.col(g));
                }
            }
            out
        }))
    }

    /// `M ⊗_A N → N`, `m ⊗ n ↦ h(m) · n`, for a right `A`-linear `h: M → A`.
    pub fn contract_left(&self, h: &Matrix) -> Result<Matrix> {
        let a = Bimodule::regular(self.left.right_algebra());
        if h.shape() != (a.dim(), self.left.dim()) {
            return Err(Error::Dimension("contraction shape".into()));
        }
        let rep = check_right_linear(&self.left, &a, h);
        if let Some(v) = rep.violations.first() {
            return Err(Error::NotBalanced(format!("contraction: {} fails at {:?}", v.identity, v.indices)));
        }
        let dn = self.right.dim();
        Ok(self.map_from_pure(dn, |g, t| {
            let mut out = zero_vec(dn);
            for (s, l) in self.right.left_action().iter().enumerate() {
                let c = &h[(s, g)];
                if !c.is_zero() {
                    axpy(&mut out, c, &l.col(t));
                }
            }
            out
        }))
    }
}

/// The triple tensor `M ⊗_A N ⊗_A P`, canonically presented as `M ⊗_A (N ⊗_A P)`.
/// Every basis element is a pure tensor `m_g ⊗ n_s ⊗ p_t`, so maps out of it can be
/// given on pure triples regardless of bracketing.
#[derive(Clone, Debug)]
pub struct TriplePresentation {
    /// `N ⊗ P`
    pub inner: TensorPresentation,
    /// `M ⊗ (N ⊗ P)`
    pub outer: TensorPresentation,
}

impl TriplePresentation {
    pub fn new(m: &Bimodule, n: &Bimodule, p: &Bimodule) -> Result<Self> {
        Self::from_inner(m, TensorPresentation::new(n, p)?)
    }

    /// Reuses an existing presentation of `N ⊗ P`.
    pub fn from_inner(m: &Bimodule, inner: TensorPresentation) -> Result<Self> {
        let outer = TensorPresentation::new(m, inner.quotient())?;
        Ok(TriplePresentation { inner, outer })
    }

    pub fn dim(&self) -> usize {
        self.outer.dim()
    }

    /// Basis element `k` is `m_g ⊗ n_s ⊗ p_t`; returns `(g, s, t)`.
    pub fn basis_triple(&self, k: usize) -> (usize, usize, usize) {
        let (g, w) = self.outer.basis_pair(k);
        let (s, t) = self.inner.basis_pair(w);
        (g, s, t)
    }

    /// Class of `m ⊗ n ⊗ p`.
    pub fn project_pure(&self, m: &[Scalar], n: &[Scalar], p: &[Scalar]) -> Vec<Scalar> {
        self.outer.project_pure(m, &self.inner.project_pure(n, p))
    }

    /// Builds a map out of the triple tensor from its values on pure basis triples.
    pub fn map_from_pure(&self, target_dim: usize, f: impl Fn(usize, usize, usize) -> Vec<Scalar>) -> Matrix {
        let cols: Vec<Vec<Scalar>> = (0..self.dim())
            .map(|k| {
                let (g, s, t) = self.basis_triple(k);
                f(g, s, t)
            })
            .collect();
        Matrix::from_columns(target_dim, &cols)
    }

    /// `f ⊗_A P: X ⊗_A P → M ⊗_A N ⊗_A P` for a right `A`-linear `f: X → M ⊗_A N`,
    /// where `mn` presents `M ⊗_A N` and `src` presents `X ⊗_A P`.
    pub fn induced_left(&self, mn: &TensorPresentation, f: &Matrix, src: &TensorPresentation) -> Result<Matrix> {
        if f.shape() != (mn.dim(), src.left().dim()) || src.right().dim() != self.inner.right().dim() {
            return Err(Error::Dimension("left-induced map: shapes do not match".into()));
        }
        let rf = check_right_linear(src.left(), mn.quotient(), f);
        if let Some(v) = rf.violations.first() {
            return Err(Error::NotBalanced(format!("{} fails at {:?}", v.identity, v.indices)));
        }
        let (dm, dn, dp) = (mn.left().dim(), mn.right().dim(), self.inner.right().dim());
        let pieces: Vec<(usize, usize)> = (0..mn.dim()).map(|k| mn.basis_pair(k)).collect();
        Ok(src.map_from_pure(self.dim(), |x, t| {
            let mut out = zero_vec(self.dim());
            for (k, (u, v)) in pieces.iter().enumerate() {
                let c = &f[(k, x)];
                if !c.is_zero() {
                    axpy(&mut out, c, &self.project_pure(&unit_vec(dm, *u), &unit_vec(dn, *v), &unit_vec(dp, t)));
                }
            }
            out
        }))
    }

    /// The comparison map `(M ⊗ N) ⊗ P → M ⊗ (N ⊗ P)` from a presentation `mn` of
    /// `M ⊗ N`, with the left-nested presentation it is defined on.
    pub fn bracket_comparison(&self, mn: &TensorPresentation) -> Result<(TensorPresentation, Matrix)> {
        let left_nested = TensorPresentation::new(mn.quotient(), self.inner.right())?;
        let (dm, dn, dp) = (mn.left().dim(), mn.right().dim(), self.inner.right().dim());
        let map = left_nested.map_from_pure(self.dim(), |u, t| {
            let (g, s) = mn.basis_pair(u);
            self.project_pure(&unit_vec(dm, g), &unit_vec(dn, s), &unit_vec(dp, t))
        });
        inverse(&map).map_err(|_| Error::Invalid("bracket comparison is not invertible".into()))?;
        Ok((left_nested, map))
    }
}

/// The natural isomorphism
/// `(M ⊗_A N) ⊗_k (L ⊗_B P) → (M ⊗_k L) ⊗_{A ⊗ B} (N ⊗_k P)`,
/// induced by `(m ⊗ n) ⊗ (l ⊗ p) ↦ (m ⊗ l) ⊗ (n ⊗ p)`. Returns the matrix together
/// with the source and target presentations it refers to.
pub fn shuffle_iso(
    m: &Bimodule,
    n: &Bimodule,
    l: &Bimodule,
    p: &Bimodule,
) -> Result<(Matrix, TensorPresentation, TensorPresentation, TensorPresentation)> {
    let mn = TensorPresentation::new(m, n)?;
    let lp = TensorPresentation::new(l, p)?;
    let target = TensorPresentation::new(&m.ktensor(l)?, &n.ktensor(p)?)?;
    let q2 = lp.dim();
    let cols: Vec<Vec<Scalar>> = (0..mn.dim() * q2)
        .map(|c| {
            let (g, s) = mn.basis_pair(c / q2);
            let (h, t) = lp.basis_pair(c % q2);
            target.project_pure(
                &kron_vec(&unit_vec(m.dim(), g), &unit_vec(l.dim(), h)),
                &kron_vec(&unit_vec(n.dim(), s), &unit_vec(p.dim(), t)),
            )
        })
        .collect();
    let iso = Matrix::from_columns(target.dim(), &cols);
    if !iso.is_square() || crate::exactlin::rank(&iso) != iso.rows() {
        return Err(Error::Invalid(format!("shuffle map of shape {:?} is not invertible", iso.shape())));
    }
    Ok((iso, mn, lp, target))
}
