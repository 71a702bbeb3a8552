use baxter_core::chain::*;
use baxter_core::reflection::{evaluation_boundary, BoundarySolution};
use baxter_core::rep::{build_bmw, build_gl_hecke, AChoice, Family, Representation};
use baxter_core::{Matrix, Poly, Scalar};

fn s(p: i64, q: i64) -> Scalar {
    Scalar::from_frac(p, q)
}

fn gl2() -> Representation {
    build_gl_hecke(2, &s(2, 1), AChoice::PlusQ).unwrap()
}

fn generic_l() -> Matrix {
    Matrix::from_fracs(&[2], &[&[(0, 1), (2, 1)], &[(5, 3), (-7, 2)]]).unwrap()
}

fn right_two_case(rep: &Representation, l: Matrix, xi2: Scalar) -> RightBoundary {
    let b_half = baxter_core::reflection::sqrt_b(rep.b()).unwrap();
    RightBoundary::Conjugated { solution: BoundarySolution::rational(l, xi2), b_half }
}

fn zs() -> Vec<Scalar> {
    vec![s(2, 3), s(3, 5), s(7, 9)]
}

#[test]
fn free_chain_spectrum() {
    let rep = gl2();
    let chain = ChainModel::new(rep, 2, BoundarySolution::trivial(&[2]), RightBoundary::Trivial).unwrap();
    let h = chain.hamiltonian(HamiltonianKind::H1).unwrap();
    let sp = exact_spectrum(&h);
    let expect = Poly::from_roots(&[s(2, 1), s(2, 1), s(2, 1), s(-1, 2)]);
    assert_eq!(sp.char_poly, expect);
    assert_eq!(sp.rational_roots, vec![(s(-1, 2), 1), (s(2, 1), 3)]);
    assert_eq!(sp.remainder.degree(), Some(0));
}

#[test]
fn trivial_boundary_regularity() {
    let rep = gl2();
    let lam = rep.lambda().clone();
    let tr_d = rep.d_op().trace();
    let chain = ChainModel::new(rep, 3, BoundarySolution::trivial(&[2]), RightBoundary::Trivial).unwrap();
    let t1 = chain.tau(&s(1, 1)).unwrap();
    assert_eq!(t1.scalar_multiple_of_identity(), Some(&lam.pow(6).unwrap() * &tr_d));
    assert!(chain.check_h_commutes(HamiltonianKind::H1, &zs()).unwrap());
    assert!(chain.check_h_commutes(HamiltonianKind::H0, &zs()).unwrap());
}

#[test]
fn evaluation_boundary_chain() {
    let rep = gl2();
    let ev = evaluation_boundary(2, &s(2, 1)).unwrap();
    let left = BoundarySolution::rational(ev.l, s(1, 1));
    let chain = ChainModel::new(rep, 3, left, RightBoundary::Trivial).unwrap();
    assert!(chain.transfer_commutator(&s(2, 3), &s(5, 7)).unwrap().is_zero());
    assert!(chain.check_h_commutes(HamiltonianKind::H2, &zs()).unwrap());
    assert!(chain.dressed_re_residual(2, &s(2, 5), &s(3, 7)).unwrap().is_zero());
}

#[test]
fn two_sided_hecke_chain() {
    let rep = gl2();
    let left = BoundarySolution::rational(generic_l(), s(4, 5));
    let right = right_two_case(&rep, generic_l(), s(1, 1));
    let chain = ChainModel::new(rep, 3, left, right).unwrap();
    assert!(chain.transfer_commutator(&s(3, 5), &s(4, 9)).unwrap().is_zero());
    assert!(chain.check_h_commutes(HamiltonianKind::H3, &zs()).unwrap());
    assert!(chain.check_h_commutes(HamiltonianKind::H0, &zs()).unwrap());
    assert!(chain.hamiltonian(HamiltonianKind::H1).is_err());
    for k in [2, 3] {
        assert!(chain.dressed_re_residual(k, &s(2, 5), &s(3, 7)).unwrap().is_zero());
    }
}

#[test]
fn bmw_chains() {
    let q = s(2, 1);
    let rep = build_bmw(Family::Sp, 2, &q, AChoice::MinusInvQ).unwrap();
    assert_eq!(bmw_bond_coefficient(&rep.with_a_choice(AChoice::PlusQ).unwrap()).unwrap(), s(-1, 10));
    let free = ChainModel::new(rep.clone(), 2, BoundarySolution::trivial(&[2]), RightBoundary::Trivial).unwrap();
    assert!(free.check_h_commutes(HamiltonianKind::H5, &zs()).unwrap());
    let l = Matrix::from_fracs(&[2], &[&[(0, 1), (1, 1)], &[(1, 1), (1, 1)]]).unwrap();
    let left = BoundarySolution::rational(l.clone(), s(1, 1));
    let one_sided = ChainModel::new(rep.clone(), 2, left.clone(), RightBoundary::Trivial).unwrap();
    assert!(one_sided.check_h_commutes(HamiltonianKind::H4, &zs()).unwrap());
    let right = right_two_case(&rep, l, s(1, 1));
    let chain = ChainModel::new(rep, 2, left, right).unwrap();
    assert!(chain.transfer_commutator(&s(2, 7), &s(3, 8)).unwrap().is_zero());
    assert!(chain.check_h_commutes(HamiltonianKind::H7, &zs()).unwrap());
    assert!(chain.check_h_commutes(HamiltonianKind::H6, &zs()).unwrap());
    assert!(chain.hamiltonian(HamiltonianKind::H3).is_err());
}

#[test]
fn sp2_identity_boundary_a_equals_q() {
    let rep = build_bmw(Family::Sp, 2, &s(2, 1), AChoice::PlusQ).unwrap();
    let left = BoundarySolution::rational(Matrix::identity(&[2]), s(1, 2));
    let chain = ChainModel::new(rep, 2, left, RightBoundary::Trivial).unwrap();
    assert!(chain.transfer_commutator(&s(2, 7), &s(3, 8)).unwrap().is_zero());
    assert!(chain.check_h_commutes(HamiltonianKind::H4, &zs()).unwrap());
}

#[test]
fn zero_sites_rejected() {
    assert!(ChainModel::new(gl2(), 0, BoundarySolution::trivial(&[2]), RightBoundary::Trivial).is_err());
}

#[test]
fn missing_boundary_term_breaks_commutation() {
    let rep = gl2();
    let left = BoundarySolution::rational(generic_l(), s(4, 5));
    let chain = ChainModel::new(rep.clone(), 3, left, RightBoundary::Trivial).unwrap();
    let shape = chain.shape(3);
    let mut bulk = Matrix::zeros(&shape);
    for m in 1..3 {
        bulk = &bulk + &baxter_core::linalg::embed(rep.r(), m, &shape).unwrap();
    }
    let t = chain.t_full(&s(2, 3)).unwrap();
    assert!(!(&(&bulk * &t) - &(&t * &bulk)).is_zero());
}
