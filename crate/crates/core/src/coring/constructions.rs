//! New corings from old: tensor products, opposites, base change, Sweedler corings.

use super::{dual_ring, Coring, DualRing, Side};
use crate::algebra::{Algebra, FieldExtension};
use crate::bimodule::{shuffle_iso, Bimodule, TensorPresentation};
use crate::error::{Error, Result};
use crate::exactlin::{inverse, unit_vec, Matrix, Scalar, Subspace};

/// `C ⊗_k D` over `A ⊗_k B`, with `Δ = shuffle ∘ (Δ_C ⊗ Δ_D)` and `ε = ε_C ⊗ ε_D`.
pub fn tensor_coring(c: &Coring, d: &Coring) -> Result<Coring> {
    if c.base().field() != d.base().field() {
        return Err(Error::AlgebraMismatch("corings over different fields".into()));
    }
    let (shuffle, _, _, square) = shuffle_iso(c.carrier(), c.carrier(), d.carrier(), d.carrier())?;
    let comult = shuffle.mul(&c.comult().kron(d.comult()));
    let counit = c.counit().kron(d.counit());
    let carrier = square.left().clone();
    Coring::with_square(format!("{}⊗{}", c.name(), d.name()), carrier, square, comult, counit)
}

/// `C°` over `A°`, with `Δ° = τΔ` where `τ(x ⊗_A y) = y ⊗_{A°} x`, and `ε° = ε`.
pub fn opposite_coring(c: &Coring) -> Result<Coring> {
    let carrier = c.carrier().opposite();
    let square = TensorPresentation::new(&carrier, &carrier)?;
    let d = c.dim();
    let tau = c.square().map_from_pure(square.dim(), |g, t| square.project_pure(&unit_vec(d, t), &unit_vec(d, g)));
    let comult = tau.mul(c.comult());
    Coring::with_square(format!("({})°", c.name()), carrier, square, comult, c.counit().clone())
}

/// Sweedler's canonical coring `A ⊗_B A` for the subalgebra `B` spanned by `b_basis`:
/// `Δ(a ⊗ a') = (a ⊗ 1) ⊗_A (1 ⊗ a')`, `ε(a ⊗ a') = aa'`.
pub fn sweedler_coring(a: &Algebra, b_basis: &Subspace) -> Result<Coring> {
    let (b, inclusion) = a.subalgebra(b_basis)?;
    let reg = Bimodule::regular(a);
    let over_b = TensorPresentation::new(&reg.restrict_right(&b, &inclusion), &reg.restrict_left(&b, &inclusion))?;
    let carrier = over_b.quotient().clone();
    let square = TensorPresentation::new(&carrier, &carrier)?;
    let comult = over_b.map_from_pure(square.dim(), |g, t| {
        let x = unit_vec(a.dim(), g);
        let y = unit_vec(a.dim(), t);
        square.project_pure(&over_b.project_pure(&x, a.unit()), &over_b.project_pure(a.unit(), &y))
    });
    let counit = over_b.map_from_pure(a.dim(), |g, t| a.basis_product(g, t).to_vec());
    Coring::with_square(format!("{}⊗_{}{}", a.name(), b.name(), a.name()), carrier, square, comult, counit)
}

/// `C ⊗_k K` over `A ⊗_k K`.
pub fn base_change(c: &Coring, k: &FieldExtension) -> Result<Coring> {
    let trivial = Coring::trivial(&k.algebra);
    Ok(tensor_coring(c, &trivial)?.with_name(format!("{}⊗{}", c.name(), k.algebra.name())))
}

/// `Ψ: *C ⊗_k K → *(C ⊗_k K)`, `Ψ(f ⊗ α)(x ⊗ β) = f(x) ⊗ αβ`, and its inverse `Φ`
/// built from a dual basis of the projective module `_A C`.
#[derive(Clone, Debug)]
pub struct BaseChangeIso {
    pub extended: Coring,
    /// `*C`
    pub dual: DualRing,
    /// `*(C ⊗ K)`
    pub extended_dual: DualRing,
    /// The algebra `*C ⊗_k K`, basis `f_i ⊗ x^j` at `i * deg K + j`.
    pub dual_tensor_k: Algebra,
    pub psi: Matrix,
    pub phi: Matrix,
}

impl BaseChangeIso {
    pub fn new(c: &Coring, k: &FieldExtension) -> Result<Self> {
        let extended = base_change(c, k)?;
        let dual = dual_ring(c, Side::Left)?;
        let extended_dual = dual_ring(&extended, Side::Left)?;
        let dual_tensor_k = dual.algebra.tensor(&k.algebra)?;
        let (da, dc, dk) = (c.base().dim(), c.dim(), k.degree());
        let lk = k.algebra.left_regular();
        let mut psi_cols = Vec::with_capacity(dual.dim() * dk);
        for f in &dual.maps {
            for alpha in &lk {
                let image = f.kron(alpha);
                psi_cols.push(
                    extended_dual
                        .coordinates(&image)
                        .ok_or_else(|| Error::Invalid("Ψ(f ⊗ α) is not A⊗K-linear".into()))?,
                );
            }
        }
        let psi = Matrix::from_columns(extended_dual.dim(), &psi_cols);

        let (gens, section) = c
            .carrier()
            .as_left_module()
            .splitting()
            .ok_or_else(|| Error::Invalid("_A C is not projective; no dual basis".into()))?;
        // dual basis: c = Σ_j φ_j(c) x_j with x_j = m_{g_j}, φ_j = rows j*dA.. of the section
        let ra = c.base().right_regular();
        let one_k = k.algebra.unit();
        let mut phi_cols = Vec::with_capacity(extended_dual.dim());
        for big_f in &extended_dual.maps {
            let mut coords = vec![Scalar::zero(); dual.dim() * dk];
            for beta in 0..dk {
                let mut m = Matrix::zeros(da, dc);
                for (j, &g) in gens.iter().enumerate() {
                    let phi_j = Matrix::from_rows((0..da).map(|t| section.row(j * da + t).to_vec()).collect())?;
                    // F(x_j ⊗ 1) = Σ_β a_{jβ} ⊗ β
                    let value = big_f.mul_vec(&crate::exactlin::kron_vec(&unit_vec(dc, g), one_k));
                    let a_jb: Vec<Scalar> = (0..da).map(|t| value[t * dk + beta].clone()).collect();
                    m = m.add(&Algebra::linear_combination(&a_jb, &ra).mul(&phi_j));
                }
                let cf = dual.coordinates(&m).ok_or_else(|| Error::Invalid("Φ component not in *C".into()))?;
                for (i, x) in cf.into_iter().enumerate() {
                    coords[i * dk + beta] = x;
                }
            }
            phi_cols.push(coords);
        }
        let phi = Matrix::from_columns(dual.dim() * dk, &phi_cols);
        Ok(BaseChangeIso { extended, dual, extended_dual, dual_tensor_k, psi, phi })
    }

    pub fn is_unital(&self) -> bool {
        self.psi.mul_vec(self.dual_tensor_k.unit()) == self.extended_dual.algebra.unit()
    }

    /// Basis pairs `(i, j)` where `Ψ(x_i x_j) ≠ Ψ(x_i)Ψ(x_j)`.
    pub fn multiplicativity_failures(&self) -> Vec<(usize, usize)> {
        let (x, y) = (&self.dual_tensor_k, &self.extended_dual.algebra);
        let mut out = Vec::new();
        for i in 0..x.dim() {
            for j in 0..x.dim() {
                if self.psi.mul_vec(x.basis_product(i, j)) != y.product(&self.psi.col(i), &self.psi.col(j)) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn is_bijective(&self) -> bool {
        self.psi.is_square() && inverse(&self.psi).is_ok()
    }

    /// `ΦΨ = id` and `ΨΦ = id`.
    pub fn inverse_holds(&self) -> bool {
        let n = self.psi.cols();
        let m = self.psi.rows();
        self.phi.shape() == (n, m)
            && self.phi.mul(&self.psi) == Matrix::identity(n)
            && self.psi.mul(&self.phi) == Matrix::identity(m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{field_extension, Polynomial};
    use crate::exactlin::Field;

    const Q: Field = Field::Rationals;

    #[test]
    fn tensor_corings_are_valid() {
        let c = Coring::comatrix(Q, 2);
        let cc = tensor_coring(&c, &c).unwrap();
        assert_eq!(cc.dim(), 16);
        assert!(cc.check().is_valid());
        let t = tensor_coring(&Coring::trivial(&Algebra::truncated_polynomials(Q, 2)), &Coring::trivial(&Algebra::matrix_algebra(Q, 2)))
            .unwrap();
        assert!(t.check().is_valid());
        assert_eq!(t.base().dim(), 8);
        // C ⊗ trivial_k has the structure maps of C under the reindexing c ⊗ 1 = c
        let ck = tensor_coring(&c, &Coring::trivial(&Algebra::ground(Q))).unwrap();
        assert_eq!(ck.comult(), c.comult());
        assert_eq!(ck.counit(), c.counit());
    }

    #[test]
    fn opposite_corings() {
        let c = Coring::comatrix(Q, 2);
        let o = opposite_coring(&c).unwrap();
        assert!(o.check().is_valid());
        // Δ°(e_ij) = Σ_k e_kj ⊗ e_ik
        let lift = o.comult_lift();
        for (i, j) in [(0, 1), (1, 0)] {
            let mut expected = vec![Scalar::zero(); 16];
            for k in 0..2 {
                expected[(k * 2 + j) * 4 + (i * 2 + k)] = Scalar::one();
            }
            assert_eq!(lift.col(i * 2 + j), expected);
        }
        let oo = opposite_coring(&o).unwrap();
        assert_eq!(oo.comult(), c.comult());
        assert_eq!(oo.carrier(), c.carrier());
        let t = opposite_coring(&Coring::trivial(&Algebra::matrix_algebra(Q, 2))).unwrap();
        assert!(t.check().is_valid());
    }

    #[test]
    fn sweedler_corings() {
        let m2 = Algebra::matrix_algebra(Q, 2);
        let scalars = Subspace::span(4, [m2.unit()]).unwrap();
        let s = sweedler_coring(&m2, &scalars).unwrap();
        assert_eq!(s.dim(), 16);
        assert!(s.check().is_valid());
        let whole = sweedler_coring(&m2, &Subspace::full(4)).unwrap();
        assert_eq!(whole.dim(), 4);
        assert!(whole.check().is_valid());
        let dn = Algebra::truncated_polynomials(Q, 2);
        let s = sweedler_coring(&dn, &Subspace::span(2, [dn.unit()]).unwrap()).unwrap();
        assert_eq!(s.dim(), 4);
        assert!(s.check().is_valid());
        // a span that is not a subalgebra
        let x = Subspace::span(2, [unit_vec(2, 1).as_slice()]).unwrap();
        assert!(sweedler_coring(&dn, &x).is_err());
    }

    #[test]
    fn base_change_iso() {
        let k = field_extension(&Polynomial::from_ints(&[1, 0, 1]), false).unwrap();
        let g = Coring::group_like(Q, 2);
        let iso = BaseChangeIso::new(&g, &k).unwrap();
        assert!(iso.extended.check().is_valid());
        assert_eq!(iso.psi.shape(), (4, 4));
        assert!(iso.is_unital() && iso.is_bijective() && iso.inverse_holds());
        assert!(iso.multiplicativity_failures().is_empty());

        let r2 = field_extension(&Polynomial::from_ints(&[-2, 0, 1]), false).unwrap();
        let iso = BaseChangeIso::new(&Coring::comatrix(Q, 2), &r2).unwrap();
        assert!(iso.is_unital() && iso.is_bijective() && iso.inverse_holds());
        assert!(iso.multiplicativity_failures().is_empty());

        let q = field_extension(&Polynomial::from_ints(&[0, 1]), false).unwrap();
        let iso = BaseChangeIso::new(&Coring::comatrix(Q, 2), &q).unwrap();
        assert_eq!(iso.psi, Matrix::identity(4));
    }

    #[test]
    fn base_change_over_a_noncommutative_base() {
        let k = field_extension(&Polynomial::from_ints(&[-2, 0, 0, 1]), false).unwrap();
        let c = Coring::trivial(&Algebra::matrix_algebra(Q, 2));
        let iso = BaseChangeIso::new(&c, &k).unwrap();
        assert!(iso.extended.check().is_valid());
        assert!(iso.is_unital() && iso.inverse_holds());
        assert!(iso.multiplicativity_failures().is_empty());
    }
}
