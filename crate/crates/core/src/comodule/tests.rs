use super::*;
use crate::algebra::Algebra;
use crate::coring::{opposite_coring, tensor_coring};
use crate::exactlin::{rank, Field, Scalar};

const Q: Field = Field::Rationals;

fn sample_corings() -> Vec<Coring> {
    vec![
        Coring::trivial(&Algebra::ground(Q)),
        Coring::trivial(&Algebra::matrix_algebra(Q, 2)),
        Coring::trivial(&Algebra::truncated_polynomials(Q, 2)),
        Coring::comatrix(Q, 2),
        Coring::group_like(Q, 2),
        Coring::dual_coalgebra(&Algebra::truncated_polynomials(Q, 2)),
    ]
}

/// A right module over `a`, seen as a bimodule over `(k, a)`.
fn right_module(a: &Algebra, dim: usize, action: Vec<Matrix>) -> Bimodule {
    Bimodule::new(Algebra::ground(a.field()), a.clone(), dim, vec![Matrix::identity(dim)], action).unwrap()
}

/// Span of `e_11, e_12` in the comatrix coalgebra, `ρ(e_1j) = Σ_k e_1k ⊗ e_kj`.
fn first_row(c: &Coring) -> Comodule {
    let carrier = Bimodule::over_ground(Q, 2);
    let pres = TensorPresentation::new(&carrier, c.carrier()).unwrap();
    let cols: Vec<Vec<Scalar>> = (0..2)
        .map(|j| {
            let mut v = zero_vec(pres.dim());
            for k in 0..2 {
                axpy(&mut v, &Scalar::one(), &pres.project_pure(&unit_vec(2, k), &unit_vec(4, k * 2 + j)));
            }
            v
        })
        .collect();
    Comodule::new(c, Side::Right, carrier, Matrix::from_columns(pres.dim(), &cols)).unwrap()
}

#[test]
fn regular_comodules_are_valid() {
    for c in sample_corings() {
        for side in [Side::Left, Side::Right] {
            let m = Comodule::regular(&c, side);
            assert!(check_comodule(&m).is_valid(), "{} {side:?}: {:?}", c.name(), check_comodule(&m));
            // split by the counit, hence injective
            assert_eq!(rank(m.coaction()), m.dim());
        }
    }
}

#[test]
fn comatrix_row_is_a_subcomodule() {
    let c = Coring::comatrix(Q, 2);
    let m = first_row(&c);
    assert!(check_comodule(&m).is_valid());
    // the inclusion into C is colinear
    let mut inc = Matrix::zeros(4, 2);
    inc[(0, 0)] = Scalar::one();
    inc[(1, 1)] = Scalar::one();
    let reg = Comodule::regular(&c, Side::Right);
    assert!(check_comodule_morphism(&m, &reg, &inc).is_valid());
    // the inclusion as the second row is not
    let mut bad = Matrix::zeros(4, 2);
    bad[(2, 0)] = Scalar::one();
    bad[(1, 1)] = Scalar::one();
    assert!(check_comodule_morphism(&m, &reg, &bad).has("colinearity"));
}

#[test]
fn broken_counit_is_reported() {
    let c = Coring::group_like(Q, 2);
    let reg = Comodule::regular(&c, Side::Right);
    let doubled = reg.coaction().scale(&Scalar::from_int(2));
    let m = Comodule::new(&c, Side::Right, reg.carrier().clone(), doubled).unwrap();
    let report = check_comodule(&m);
    assert!(report.has("counit"));
}

#[test]
fn bicomodules() {
    for c in sample_corings() {
        let r = Bicomodule::regular(&c);
        assert!(check_bicomodule(&r).is_valid(), "{}", c.name());
        let s = Bicomodule::square(&c).unwrap();
        assert!(check_bicomodule(&s).is_valid(), "{}: {:?}", c.name(), check_bicomodule(&s));
        assert_eq!(s.dim(), c.square().dim());
    }
}

#[test]
fn broken_bicomodule_is_reported() {
    let c = Coring::comatrix(Q, 2);
    let r = Bicomodule::regular(&c);
    // corrupt ρ by exchanging e_11 ⊗ e_11 and e_22 ⊗ e_22
    let mut p = Matrix::identity(16);
    for (x, y) in [(0, 15), (15, 0)] {
        p[(x, x)] = Scalar::zero();
        p[(x, y)] = Scalar::one();
    }
    let rho = c.square().projection_matrix().mul(&p).mul(&c.square().section_matrix()).mul(r.rho());
    let b = Bicomodule::new(&c, &c, c.carrier().clone(), r.lambda().clone(), rho).unwrap();
    let report = check_bicomodule(&b);
    assert!(!report.is_valid());
    assert!(report.has("right"));
}

#[test]
fn induced_comodules() {
    let a = Algebra::matrix_algebra(Q, 2);
    let m = Comodule::regular(&Coring::trivial(&a), Side::Right);
    // X = A
    let x = right_module(&a, 4, a.right_regular());
    let xm = induced_comodule(&x, &m).unwrap();
    assert_eq!(xm.dim(), 4);
    assert!(check_comodule(&xm).is_valid());
    // X = A ⊕ A
    let sum: Vec<Matrix> = a
        .right_regular()
        .iter()
        .map(|r| {
            let mut big = Matrix::zeros(8, 8);
            for i in 0..4 {
                for j in 0..4 {
                    big[(i, j)] = r[(i, j)].clone();
                    big[(4 + i, 4 + j)] = r[(i, j)].clone();
                }
            }
            big
        })
        .collect();
    let xm = induced_comodule(&right_module(&a, 8, sum), &m).unwrap();
    assert_eq!(xm.dim(), 8);
    assert!(check_comodule(&xm).is_valid());
    // X = row vectors: e_k · E_ij = δ_ki e_j
    let rows: Vec<Matrix> = (0..4)
        .map(|t| {
            let (i, j) = (t / 2, t % 2);
            let mut r = Matrix::zeros(2, 2);
            r[(j, i)] = Scalar::one();
            r
        })
        .collect();
    let xm = induced_comodule(&right_module(&a, 2, rows), &m).unwrap();
    assert_eq!(xm.dim(), 2);
    assert!(check_comodule(&xm).is_valid());
}

#[test]
fn cotensor_with_the_regular_comodule() {
    for c in sample_corings() {
        let m = Comodule::regular(&c, Side::Right);
        let n = Comodule::regular(&c, Side::Left);
        let ct = cotensor(&m, &n).unwrap();
        assert_eq!(ct.subspace.dim(), c.dim(), "{}", c.name());
        // ρ lands in the cotensor and is injective: an isomorphism onto it
        for j in 0..c.dim() {
            assert!(ct.subspace.contains(&m.coaction().col(j)));
        }
    }
    let c = Coring::comatrix(Q, 2);
    let ct = cotensor(&first_row(&c), &Comodule::regular(&c, Side::Left)).unwrap();
    assert_eq!((ct.presentation.dim(), ct.subspace.dim()), (8, 2));
}

#[test]
fn cotensor_over_a_trivial_coring_is_everything() {
    let a = Algebra::truncated_polynomials(Q, 2);
    let c = Coring::trivial(&a);
    let ct = cotensor(&Comodule::regular(&c, Side::Right), &Comodule::regular(&c, Side::Left)).unwrap();
    assert_eq!(ct.subspace.dim(), ct.presentation.dim());
}

fn sample_bicomodules() -> Vec<Bicomodule> {
    let mut out: Vec<Bicomodule> = sample_corings().iter().map(Bicomodule::regular).collect();
    out.push(Bicomodule::square(&Coring::comatrix(Q, 2)).unwrap());
    out.push(Bicomodule::square(&Coring::group_like(Q, 2)).unwrap());
    out
}

#[test]
fn round_trips() {
    for m in sample_bicomodules() {
        let r = bicomodule_round_trip(&m).unwrap();
        assert!(r.passes(), "{}: {r:?}", m.left_coring().name());
        let n = bicomodule_to_comodule(&m).unwrap();
        let d = opposite_coring(m.right_coring()).unwrap();
        assert!(comodule_round_trip(&n, m.left_coring(), &d).unwrap().passes());
    }
}

#[test]
fn regular_comodule_of_a_tensor_coring() {
    let c = Coring::comatrix(Q, 2);
    let d = opposite_coring(&c).unwrap();
    let t = tensor_coring(&c, &d).unwrap();
    let n = Comodule::regular(&t, Side::Left);
    let m = comodule_to_bicomodule(&n, &c, &d).unwrap();
    assert!(check_bicomodule(&m).is_valid());
    assert_eq!(m.dim(), 16);
    assert!(comodule_round_trip(&n, &c, &d).unwrap().passes());
}

#[test]
fn ground_field_round_trip_is_canonical() {
    let k = Coring::trivial(&Algebra::ground(Q));
    let v = Bimodule::over_ground(Q, 3);
    let id = Matrix::identity(3);
    let m = Bicomodule::new(&k, &k, v, id.clone(), id.clone()).unwrap();
    assert!(check_bicomodule(&m).is_valid());
    let n = bicomodule_to_comodule(&m).unwrap();
    assert_eq!(*n.coaction(), id);
    assert!(bicomodule_round_trip(&m).unwrap().passes());
}

#[test]
fn coring_over_the_ground_field_recovers_the_regular_comodule() {
    let c = Coring::comatrix(Q, 2);
    let k = Coring::trivial(&Algebra::ground(Q));
    // C over (C, k) with ρ(c) = c ⊗ 1
    let rho = Matrix::identity(4);
    let m = Bicomodule::new(&c, &k, c.carrier().clone(), c.comult().clone(), rho).unwrap();
    assert!(check_bicomodule(&m).is_valid());
    let n = bicomodule_to_comodule(&m).unwrap();
    assert_eq!(n.coaction(), n.coring().comult());
}

#[test]
fn morphisms_transport_both_ways() {
    let c = Coring::group_like(Q, 2);
    let m = Bicomodule::regular(&c);
    let n = bicomodule_to_comodule(&m).unwrap();
    let diag = Matrix::from_ints(&[&[2, 0], &[0, 3]]);
    let swap = Matrix::from_ints(&[&[0, 1], &[1, 0]]);
    for (f, expected) in [(diag, true), (swap, false)] {
        assert_eq!(check_bicomodule_morphism(&m, &m, &f).is_valid(), expected);
        assert_eq!(check_comodule_morphism(&n, &n, &f).is_valid(), expected);
    }
}
