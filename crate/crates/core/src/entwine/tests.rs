use super::*;
use crate::exactlin::Field;

const Q: Field = Field::Rationals;

/// `ℚ[t]/(t² − 1)` graded by `Z2` with `t` odd: `ψ(g ⊗ 1) = 1 ⊗ g`, `ψ(g ⊗ t) = t ⊗ g·g_1`.
fn doi_koppinen() -> Entwining {
    let a = Algebra::cyclic_group(Q, 2);
    let e = Entwining::cyclic_grading(&a, &[0, 1], 2).unwrap();
    // written out by hand: column c * 2 + a, row a' * 2 + c'
    let mut psi = Matrix::zeros(4, 4);
    for g in 0..2 {
        psi[(g, g * 2)] = Scalar::one();
        psi[(2 + (g + 1) % 2, g * 2 + 1)] = Scalar::one();
    }
    assert_eq!(e.psi, psi);
    e
}

#[test]
fn flips_are_entwinings() {
    for a in [Algebra::ground(Q), Algebra::matrix_algebra(Q, 2), Algebra::truncated_polynomials(Q, 2)] {
        for c in [Coring::group_like(Q, 2), Coring::comatrix(Q, 2), Coring::dual_coalgebra(&Algebra::truncated_polynomials(Q, 2))] {
            let e = Entwining::flip(&a, &c);
            assert!(check_entwining(&e).is_valid(), "{} {}", a.name(), c.name());
            let k = entwined_coring(&e).unwrap();
            assert_eq!(k.dim(), a.dim() * c.dim());
            assert!(k.is_valid());
        }
    }
}

#[test]
fn over_the_ground_field_the_coring_is_the_coalgebra() {
    let c = Coring::group_like(Q, 2);
    let k = entwined_coring(&Entwining::flip(&Algebra::ground(Q), &c)).unwrap();
    assert_eq!(k.carrier(), c.carrier());
    assert_eq!(k.comult(), c.comult());
    assert_eq!(k.counit(), c.counit());
}

#[test]
fn sizes() {
    let m2 = Algebra::matrix_algebra(Q, 2);
    let k = entwined_coring(&Entwining::flip(&m2, &Coring::group_like(Q, 2))).unwrap();
    assert_eq!((k.base().dim(), k.dim()), (4, 8));
    let dn = Algebra::truncated_polynomials(Q, 2);
    let k = entwined_coring(&Entwining::flip(&dn, &Coring::comatrix(Q, 2))).unwrap();
    assert_eq!((k.base().dim(), k.dim()), (2, 8));
}

#[test]
fn broken_unit_is_reported() {
    let e = Entwining::flip(&Algebra::matrix_algebra(Q, 2), &Coring::group_like(Q, 2));
    let broken = Entwining::new(e.algebra.clone(), e.coalgebra.clone(), e.psi.scale(&Scalar::from_int(2))).unwrap();
    let report = check_entwining(&broken);
    assert!(report.has("bimodule: right unit"), "{report:?}");
    assert!(entwined_coring(&broken).is_err());
}

#[test]
fn doi_koppinen_entwining() {
    let e = doi_koppinen();
    assert!(check_entwining(&e).is_valid(), "{:?}", check_entwining(&e));
    assert_ne!(e.psi, Entwining::flip(&e.algebra, &e.coalgebra).psi);
    // collapsing both grades of t onto g breaks it
    let mut bad = e.psi.clone();
    bad[(2, 3)] = Scalar::zero();
    bad[(3, 3)] = Scalar::one();
    let bad = Entwining::new(e.algebra.clone(), e.coalgebra.clone(), bad).unwrap();
    assert!(!check_entwining(&bad).is_valid());
    // t² = 1 forces 2·deg t = 0, which fails in Z3; x² = 0 imposes nothing
    let wrong = Entwining::cyclic_grading(&Algebra::cyclic_group(Q, 2), &[0, 1], 3).unwrap();
    assert!(!check_entwining(&wrong).is_valid());
    let dual_numbers = Entwining::cyclic_grading(&Algebra::truncated_polynomials(Q, 2), &[0, 1], 3).unwrap();
    assert!(check_entwining(&dual_numbers).is_valid());
}

#[test]
fn tensor_of_flips_is_the_flip() {
    let (a, c) = (Algebra::truncated_polynomials(Q, 2), Coring::group_like(Q, 2));
    let (b, d) = (Algebra::ground(Q), Coring::comatrix(Q, 2));
    let (t, cert) = tensor_entwining(&Entwining::flip(&a, &c), &Entwining::flip(&b, &d)).unwrap();
    assert_eq!(t.psi, Entwining::flip(&t.algebra, &t.coalgebra).psi);
    assert!(cert.holds(), "{cert:?}");
}

#[test]
fn tensor_entwining_certificate() {
    let e1 = Entwining::flip(&Algebra::ground(Q), &Coring::group_like(Q, 2));
    let e2 = Entwining::flip(&Algebra::matrix_algebra(Q, 2), &Coring::group_like(Q, 2));
    let (t, cert) = tensor_entwining(&e1, &e2).unwrap();
    assert_eq!(t.dim(), 16);
    assert!(cert.holds());
    // the reindexing is not the identity: it moves the coalgebra factor of the first entwining
    assert_ne!(cert.matrix, Matrix::identity(16));
}

#[test]
fn tensor_of_noncommutative_entwinings() {
    let m2 = Algebra::matrix_algebra(Q, 2);
    let e1 = Entwining::flip(&m2, &Coring::group_like(Q, 2));
    let e2 = Entwining::flip(&m2, &Coring::group_like(Q, 1));
    let (t, cert) = tensor_entwining(&e1, &e2).unwrap();
    assert!(check_entwining(&t).is_valid());
    assert!(cert.holds());
}

#[test]
fn tensor_with_a_nontrivial_entwining() {
    let (t, cert) = tensor_entwining(&doi_koppinen(), &Entwining::flip(&Algebra::ground(Q), &Coring::comatrix(Q, 2))).unwrap();
    assert!(check_entwining(&t).is_valid());
    assert!(cert.holds());
}
