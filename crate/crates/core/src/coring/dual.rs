//! The dual rings `*C = Hom_A(_A C, _A A)` and `C* = Hom_A(C_A, A_A)`.

use serde::{Deserialize, Serialize};

use super::Coring;
use crate::algebra::Algebra;
use crate::bimodule::check_bimodule_map;
use crate::error::{Error, Result};
use crate::exactlin::{Matrix, RowReducer, Scalar, Subspace};
use crate::linear_maps::intertwiner_basis;
use crate::report::CheckReport;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    /// `*C`, left `A`-linear maps, `gf = g(C ⊗ f)Δ`.
    Left,
    /// `C*`, right `A`-linear maps, `gf = f(g ⊗ C)Δ`.
    Right,
}

#[derive(Clone, Debug)]
pub struct DualRing {
    pub side: Side,
    /// Structure constants on the basis `maps`.
    pub algebra: Algebra,
    /// Basis of the one-sided linear maps `C → A`, each `dim A x dim C`.
    pub maps: Vec<Matrix>,
    /// `A° → dual`, `a ↦ ε(−)a` (left) or `a ↦ aε(−)` (right); `dim x dim A`.
    pub embedding: Matrix,
    /// Action of each basis map on `C`: `(C ⊗ f)Δ` on the left dual, `(f ⊗ C)Δ` on the right.
    pub actions: Vec<Matrix>,
    space: Subspace,
}

impl DualRing {
    pub fn dim(&self) -> usize {
        self.maps.len()
    }

    /// Coordinates of a map `C → A` in the basis, if it lies in the dual.
    pub fn coordinates(&self, f: &Matrix) -> Option<Vec<Scalar>> {
        self.space.coordinates(f.data())
    }

    pub fn map_of(&self, coords: &[Scalar]) -> Matrix {
        let shape = self.maps.first().map(Matrix::shape).unwrap_or((0, 0));
        crate::linear_maps::combine(&self.maps, coords, shape)
    }
}

/// Builds `*C` or `C*` with its convolution product; associativity and the unit `ε`
/// are verified on the structure constants.
/// `(C ⊗ f)Δ` (left dual) or `(f ⊗ C)Δ` (right dual), read off the nonzero terms of `Δ`.
/// `f` is one-sided linear by construction, so the contraction is well defined.
fn convolution_action(c: &Coring, side: Side, f: &Matrix) -> Matrix {
    let (dc, sq) = (c.dim(), c.square());
    let (lc, rc) = (c.carrier().left_action(), c.carrier().right_action());
    let mut out = Matrix::zeros(dc, dc);
    for (k, x, s) in c.comult().nonzero_entries() {
        let (g, t) = sq.basis_pair(k);
        for a in 0..f.rows() {
            // left dual: e_g · f(e_t); right dual: f(e_g) · e_t
            let (coef, action, v) = match side {
                Side::Left => (&f[(a, t)], &rc[a], g),
                Side::Right => (&f[(a, g)], &lc[a], t),
            };
            if coef.is_zero() {
                continue;
            }
            let w = s.mul_ref(coef);
            for y in 0..dc {
                let m = &action[(y, v)];
                if !m.is_zero() {
                    out[(y, x)] += &w.mul_ref(m);
                }
            }
        }
    }
    out
}

pub fn dual_ring(c: &Coring, side: Side) -> Result<DualRing> {
    let a = c.base();
    let (da, dc) = (a.dim(), c.dim());
    let (lc, la, rc, ra) = (c.carrier().left_action(), a.left_regular(), c.carrier().right_action(), a.right_regular());
    let pairs: Vec<(&Matrix, &Matrix)> = match side {
        Side::Left => lc.iter().zip(la.iter()).collect(),
        Side::Right => rc.iter().zip(ra.iter()).collect(),
    };
    let raw = intertwiner_basis(dc, da, &pairs);
    let space = Subspace::span(da * dc, raw.iter().map(Matrix::data))?;
    let maps: Vec<Matrix> =
        space.basis_vectors().into_iter().map(|v| Matrix::from_vec(da, dc, v).expect("shape")).collect();
    let d = maps.len();
    let actions: Vec<Matrix> = maps.iter().map(|f| convolution_action(c, side, f)).collect();
    let coords = |f: &Matrix| -> Result<Vec<Scalar>> {
        space.coordinates(f.data()).ok_or_else(|| Error::Invalid("convolution left the dual space".into()))
    };
    let mut mult = Vec::with_capacity(d * d);
    for i in 0..d {
        for j in 0..d {
            let prod = match side {
                Side::Left => maps[i].mul(&actions[j]),
                Side::Right => maps[j].mul(&actions[i]),
            };
            mult.push(coords(&prod)?);
        }
    }
    let unit = coords(c.counit())?;
    let name = match side {
        Side::Left => format!("*({})", c.name()),
        Side::Right => format!("({})*", c.name()),
    };
    let algebra = Algebra::checked(name, a.field(), d, mult, unit)?;
    let emb_cols = (0..da)
        .map(|t| {
            let f = match side {
                Side::Left => ra[t].mul(c.counit()),
                Side::Right => la[t].mul(c.counit()),
            };
            coords(&f)
        })
        .collect::<Result<Vec<_>>>()?;
    let embedding = Matrix::from_columns(d, &emb_cols);
    Ok(DualRing { side, algebra, maps, embedding, actions, space })
}

/// `C` as a `*C`-`C*`-bimodule, plus the closure operation for subbicomodules.
#[derive(Clone, Debug)]
pub struct DualActions {
    pub left_dual: DualRing,
    pub right_dual: DualRing,
}

impl DualActions {
    pub fn new(c: &Coring) -> Result<Self> {
        Ok(DualActions { left_dual: dual_ring(c, Side::Left)?, right_dual: dual_ring(c, Side::Right)? })
    }

    /// Left action of the `i`-th basis element of `*C`.
    pub fn left_action(&self, i: usize) -> &Matrix {
        &self.left_dual.actions[i]
    }

    /// Right action of the `i`-th basis element of `C*`.
    pub fn right_action(&self, i: usize) -> &Matrix {
        &self.right_dual.actions[i]
    }

    /// Smallest subspace containing `seeds` and stable under both dual actions and
    /// both `A`-actions: the subbicomodule generated by the seeds.
    pub fn generated_subbicomodule(&self, c: &Coring, seeds: &[Vec<Scalar>]) -> Subspace {
        let n = c.dim();
        let ops: Vec<&Matrix> = self
            .left_dual
            .actions
            .iter()
            .chain(&self.right_dual.actions)
            .chain(c.carrier().left_action())
            .chain(c.carrier().right_action())
            .collect();
        let mut span = RowReducer::new(n);
        let mut queue: Vec<Vec<Scalar>> = Vec::new();
        for s in seeds {
            if span.insert_dense(s).is_some() {
                queue.push(s.clone());
            }
        }
        while let Some(v) = queue.pop() {
            for op in &ops {
                let w = op.mul_vec(&v);
                if span.insert_dense(&w).is_some() {
                    queue.push(w);
                }
            }
        }
        Subspace::from_reducer(&span)
    }
}

/// `f: C → D` is a bimodule map with `Δ_D f = (f ⊗ f)Δ_C` and `ε_D f = ε_C`.
pub fn check_coring_hom(f: &Matrix, c: &Coring, d: &Coring) -> CheckReport {
    let mut report = CheckReport::default();
    if c.base() != d.base() {
        report.push("corings over different algebras", Vec::<usize>::new());
        return report;
    }
    report.extend(check_bimodule_map(c.carrier(), d.carrier(), f));
    if !report.is_valid() {
        return report;
    }
    match crate::bimodule::TensorPresentation::induced(f, f, c.square(), d.square()) {
        Ok(ff) => {
            let lhs = d.comult().mul(f);
            let rhs = ff.mul(c.comult());
            for col in 0..c.dim() {
                if lhs.col(col) != rhs.col(col) {
                    report.push("comultiplication compatibility", [col]);
                }
            }
        }
        Err(e) => report.push(format!("f ⊗ f undefined: {e}"), Vec::<usize>::new()),
    }
    let lhs = d.counit().mul(f);
    for col in 0..c.dim() {
        if lhs.col(col) != c.counit().col(col) {
            report.push("counit compatibility", [col]);
        }
    }
    report
}

/// Precomposition with a coring map `f: C → D`, as an algebra map between duals of
/// the same side (`D* → C*`). Multiplicativity and the unit are verified.
pub fn dual_hom(f: &Matrix, source_dual: &DualRing, target_dual: &DualRing) -> Result<Matrix> {
    if source_dual.side != target_dual.side {
        return Err(Error::Invalid("dual rings of different sides".into()));
    }
    let cols = target_dual
        .maps
        .iter()
        .map(|phi| {
            source_dual
                .coordinates(&phi.mul(f))
                .ok_or_else(|| Error::Invalid("precomposition is not one-sided linear".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let h = Matrix::from_columns(source_dual.dim(), &cols);
    let (ad, ac) = (&target_dual.algebra, &source_dual.algebra);
    if h.mul_vec(ad.unit()) != ac.unit() {
        return Err(Error::Invalid("dual map is not unital".into()));
    }
    for i in 0..ad.dim() {
        for j in 0..ad.dim() {
            if h.mul_vec(ad.basis_product(i, j)) != ac.product(&h.col(i), &h.col(j)) {
                return Err(Error::Invalid(format!("dual map is not multiplicative at [{i}, {j}]")));
            }
        }
    }
    Ok(h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::{unit_vec, Field};

    const Q: Field = Field::Rationals;

    /// Oracle: an explicit algebra isomorphism, checked on all basis products.
    fn is_iso_via(f: &Matrix, x: &Algebra, y: &Algebra) -> bool {
        crate::exactlin::rank(f) == x.dim()
            && f.mul_vec(x.unit()) == y.unit()
            && (0..x.dim()).all(|i| {
                (0..x.dim()).all(|j| f.mul_vec(x.basis_product(i, j)) == y.product(&f.col(i), &f.col(j)))
            })
    }

    #[test]
    fn trivial_coring_duals_are_the_opposite_algebra() {
        for a in [Algebra::matrix_algebra(Q, 2), Algebra::truncated_polynomials(Q, 2)] {
            let c = Coring::trivial(&a);
            for side in [Side::Left, Side::Right] {
                let d = dual_ring(&c, side).unwrap();
                assert_eq!(d.dim(), a.dim());
                // the embedding of A° is onto, hence an isomorphism
                assert!(is_iso_via(&d.embedding, &a.opposite(), &d.algebra), "{side:?}");
            }
        }
    }

    #[test]
    fn comatrix_dual_is_the_matrix_algebra() {
        let c = Coring::comatrix(Q, 2);
        let d = dual_ring(&c, Side::Right).unwrap();
        assert_eq!(d.dim(), 4);
        assert_eq!(d.algebra.radical().unwrap().dim(), 0);
        // e_ij* ↦ E_ij or E_ji, depending on the side convention
        let m2 = Algebra::matrix_algebra(Q, 2);
        let pick = |transpose: bool| {
            let cols: Vec<Vec<Scalar>> = (0..4)
                .map(|ij| {
                    let src = if transpose { (ij % 2) * 2 + ij / 2 } else { ij };
                    let mut f = Matrix::zeros(1, 4);
                    f[(0, src)] = Scalar::one();
                    d.coordinates(&f).unwrap()
                })
                .collect();
            Matrix::from_columns(4, &cols)
        };
        assert!(is_iso_via(&pick(false), &m2, &d.algebra) || is_iso_via(&pick(true), &m2, &d.algebra));
    }

    #[test]
    fn group_like_dual_is_a_product_of_fields() {
        let c = Coring::group_like(Q, 2);
        let d = dual_ring(&c, Side::Left).unwrap();
        // the dual basis g_i* consists of orthogonal idempotents
        let prod = Algebra::product_of_fields(Q, 2);
        let cols: Vec<Vec<Scalar>> = (0..2)
            .map(|i| {
                let mut f = Matrix::zeros(1, 2);
                f[(0, i)] = Scalar::one();
                d.coordinates(&f).unwrap()
            })
            .collect();
        assert!(is_iso_via(&Matrix::from_columns(2, &cols), &prod, &d.algebra));
    }

    #[test]
    fn generated_subbicomodules() {
        let c = Coring::comatrix(Q, 2);
        let acts = DualActions::new(&c).unwrap();
        assert_eq!(acts.generated_subbicomodule(&c, &[unit_vec(4, 0)]).dim(), 4);
        let t = Coring::trivial(&Algebra::product_of_fields(Q, 2));
        let acts = DualActions::new(&t).unwrap();
        assert_eq!(acts.generated_subbicomodule(&t, &[unit_vec(2, 0)]).dim(), 1);
        let g = Coring::group_like(Q, 3);
        let acts = DualActions::new(&g).unwrap();
        assert_eq!(acts.generated_subbicomodule(&g, &[unit_vec(3, 1)]).dim(), 1);
        let all: Vec<Vec<Scalar>> = (0..3).map(|i| unit_vec(3, i)).collect();
        assert_eq!(acts.generated_subbicomodule(&g, &all).dim(), 3);
    }

    #[test]
    fn dual_actions_are_actions() {
        let c = Coring::comatrix(Q, 2);
        let acts = DualActions::new(&c).unwrap();
        let (l, r) = (&acts.left_dual, &acts.right_dual);
        for i in 0..4 {
            for j in 0..4 {
                let lij = l.map_of(l.algebra.basis_product(i, j));
                let combo = Algebra::linear_combination(l.algebra.basis_product(i, j), &l.actions);
                assert_eq!(l.maps[i].mul(&l.actions[j]), lij);
                // left action: (gf).c = g.(f.c)
                assert_eq!(combo, l.actions[i].mul(&l.actions[j]));
                // right action: c.(gf) = (c.g).f
                let combo = Algebra::linear_combination(r.algebra.basis_product(i, j), &r.actions);
                assert_eq!(combo, r.actions[j].mul(&r.actions[i]));
            }
        }
    }

    #[test]
    fn coring_homs() {
        let c = Coring::comatrix(Q, 2);
        let id = Matrix::identity(4);
        assert!(check_coring_hom(&id, &c, &c).is_valid());
        let d = dual_ring(&c, Side::Right).unwrap();
        assert_eq!(dual_hom(&id, &d, &d).unwrap(), Matrix::identity(4));
        // ε: C → trivial coring over k
        let k = Coring::trivial(&Algebra::ground(Q));
        assert!(check_coring_hom(c.counit(), &c, &k).is_valid());
        let dk = dual_ring(&k, Side::Right).unwrap();
        let h = dual_hom(c.counit(), &d, &dk).unwrap();
        // precomposing the unit map of k with ε is the embedding of k° into C*
        assert_eq!(h, d.embedding.scale(&dk.embedding[(0, 0)].inv()));
        // a map that breaks the counit
        let bad = Matrix::from_ints(&[&[0, 1, 0, 0], &[1, 0, 0, 0], &[0, 0, 0, 1], &[0, 0, 1, 0]]);
        assert!(check_coring_hom(&bad, &c, &c).has("counit"));
    }
}
