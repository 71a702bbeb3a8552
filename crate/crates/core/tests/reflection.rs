use baxter_core::linalg::{inverse, minimal_polynomial};
use baxter_core::reflection::*;
use baxter_core::rep::{build_bmw, build_gl_hecke, AChoice, Family, Representation};
use baxter_core::sample::Sampler;
use baxter_core::{Matrix, Scalar};

fn s(p: i64, q: i64) -> Scalar {
    Scalar::from_frac(p, q)
}

fn gl2() -> Representation {
    build_gl_hecke(2, &s(2, 1), AChoice::PlusQ).unwrap()
}

fn sp2(ac: AChoice) -> Representation {
    build_bmw(Family::Sp, 2, &s(2, 1), ac).unwrap()
}

fn pairs(seed: u64, count: usize) -> Vec<(Scalar, Scalar)> {
    let ex = [s(0, 1), s(1, 1), s(-1, 1)];
    let mut smp = Sampler::new(seed, 5, &ex).unwrap();
    (0..count).map(|_| (smp.next_point().unwrap(), smp.next_point().unwrap())).collect()
}

fn re_holds(rep: &Representation, sol: &BoundarySolution, seed: u64) {
    let mut checked = 0;
    for (x, z) in pairs(seed, 6) {
        match re_residual(rep, &|t| sol.k(t), &x, &z) {
            Ok(res) => assert!(res.is_zero(), "RE fails at x = {x}, z = {z}: {res:?}"),
            Err(baxter_core::Error::Pole(_)) => continue,
            Err(e) => panic!("{e}"),
        }
        checked += 1;
    }
    assert!(checked >= 3);
}

fn sp2_numeric_l() -> Matrix {
    Matrix::from_fracs(&[2], &[&[(0, 1), (1, 1)], &[(1, 1), (1, 1)]]).unwrap()
}

#[test]
fn rational_solution_for_identity_and_evaluation() {
    let rep = gl2();
    let ev = evaluation_boundary(2, &s(2, 1)).unwrap();
    for xi in [s(1, 1), s(3, 2)] {
        re_holds(&rep, &BoundarySolution::rational(Matrix::identity(&[2]), xi.clone()), 1);
        re_holds(&rep, &BoundarySolution::rational(ev.l.clone(), xi), 2);
    }
}

#[test]
fn rational_solution_for_generic_constant_solution() {
    let rep = gl2();
    let l = Matrix::from_fracs(&[2], &[&[(0, 1), (2, 1)], &[(5, 3), (-7, 2)]]).unwrap();
    assert!(check_constant_re(&rep, &l).unwrap());
    re_holds(&rep, &BoundarySolution::rational(l, s(4, 5)), 3);
}

#[test]
fn polynomial_matches_rational() {
    let ev = evaluation_boundary(2, &s(2, 1)).unwrap();
    let xi = s(3, 2);
    let poly = BoundarySolution::polynomial(ev.l.clone(), xi.clone());
    assert_eq!(poly.alpha.len(), 2);
    for (x, _) in pairs(9, 5) {
        let rat = rational_boundary(&ev.l, &xi, &x).unwrap();
        assert_eq!(poly.k(&x).unwrap(), rat);
        let quad = quadratic_k(&ev.l, &poly.alpha[0], &poly.alpha[1], &xi, &x).unwrap();
        assert_eq!(quad, rat);
        let b = polynomial_coefficients(&poly.alpha, &xi, &x).unwrap();
        assert_eq!(polynomial_k_expanded(&ev.l, &poly.alpha, &xi, &b, &x).unwrap(), rat);
    }
}

#[test]
fn cubic_forms_agree() {
    let l = Matrix::diag(&[s(2, 1), s(-1, 3), s(5, 1)]);
    let mp = minimal_polynomial(&l);
    let alpha = mp.coeffs()[..3].to_vec();
    let xi = s(7, 5);
    for (x, _) in pairs(4, 4) {
        let (first, second) = cubic_k_forms(&l, &alpha, &xi, &x).unwrap();
        let b = polynomial_coefficients(&alpha, &xi, &x).unwrap();
        let k = polynomial_k(&l, &xi, &b, &x);
        assert_eq!(first, k);
        assert_eq!(second, k);
        assert_eq!(k, rational_boundary(&l, &xi, &x).unwrap());
    }
}

#[test]
fn small_solution() {
    let rep = gl2();
    let beta = s(3, 1);
    let l = Matrix::diag(&[s(0, 1), beta.clone()]);
    let sol = BoundarySolution::small(l, vec![-beta], s(1, 1)).unwrap();
    assert!(sol.k(&s(1, 1)).unwrap().is_identity());
    re_holds(&rep, &sol, 5);
    let bad = Matrix::diag(&[s(1, 1), s(3, 1)]);
    assert!(BoundarySolution::small(bad, vec![s(-3, 1)], s(1, 1)).is_err());
}

#[test]
fn sp2_identity_branch_a_equals_q() {
    let rep = sp2(AChoice::PlusQ);
    let c = bmw_constants(&rep, &Matrix::identity(&[2]), 3).unwrap().c;
    let xi = bmw_xi(&rep, &c, false).unwrap();
    assert_eq!(xi, s(1, 2));
    re_holds(&rep, &BoundarySolution::rational(Matrix::identity(&[2]), xi), 6);
}

#[test]
fn sp2_numeric_l_a_minus_inverse_q() {
    let rep = sp2(AChoice::MinusInvQ);
    let l = sp2_numeric_l();
    assert!(check_constant_re(&rep, &l).unwrap());
    let k = bmw_constants(&rep, &l, 3).unwrap();
    assert_eq!(k.c, k.c_reversed);
    assert!(bmw_constants_residual(&rep, &k).unwrap().is_zero());
    assert_eq!(bmw_xi(&rep, &k.c, false).unwrap(), s(1, 1));
    re_holds(&rep, &BoundarySolution::rational(l.clone(), s(1, 1)), 7);
    re_holds(&rep, &BoundarySolution::rational(l.clone(), s(-1, 1)), 8);
    let wrong = BoundarySolution::rational(l, s(7, 3));
    let (x, z) = (s(2, 3), s(5, 7));
    assert!(!re_residual(&rep, &|t| wrong.k(t), &x, &z).unwrap().is_zero());
}

#[test]
fn sp2_generic_constants() {
    let rep = sp2(AChoice::PlusQ);
    let l = Matrix::from_fracs(&[2], &[&[(0, 1), (3, 1)], &[(2, 5), (-1, 7)]]).unwrap();
    assert!(check_constant_re(&rep, &l).unwrap());
    let k = bmw_constants(&rep, &l, 3).unwrap();
    assert_eq!(k.c, s(-3, 10));
    assert_eq!(k.q[0], s(-17, 4));
    assert_eq!(k.q[1], s(4, 7));
    assert!(bmw_constants_residual(&rep, &k).unwrap().is_zero());
    let d = Matrix::diag(&[s(2, 1), s(3, 1)]);
    assert!(bmw_constants(&rep, &d, 2).is_err() || !check_constant_re(&rep, &d).unwrap());
}

#[test]
fn bmw_degree_two_case_free_q() {
    let rep = sp2(AChoice::PlusQ);
    let l = Matrix::from_fracs(&[2], &[&[(0, 1), (3, 1)], &[(2, 5), (-1, 7)]]).unwrap();
    let sol = bmw_deg2_boundary(&rep, &l, Deg2Case::FreeQ, &s(5, 3)).unwrap();
    re_holds(&rep, &sol, 10);
    assert!(!sol.is_regular());
    let c = sol.c.clone().unwrap();
    if let Ok(xi) = bmw_xi(&rep, &c, false) {
        let special = deg2_special_a(&rep, &c, &xi).unwrap();
        let sp = bmw_deg2_boundary(&rep, &l, Deg2Case::FreeQ, &special).unwrap();
        let x = s(5, 11);
        let rat = rational_boundary(&l, &xi, &x).unwrap();
        assert!(rat.ratio_to(&sp.k(&x).unwrap()).is_some());
    }
}

#[test]
fn bmw_degree_two_case_free_alpha0() {
    let rep = sp2(AChoice::PlusQ);
    let l = Matrix::from_fracs(&[2], &[&[(0, 1), (1, 1)], &[(-1, 1), (-17, 4)]]).unwrap();
    let sol = bmw_deg2_boundary(&rep, &l, Deg2Case::FreeAlpha0, &s(-2, 9)).unwrap();
    assert_eq!(sol.c, Some(s(1, 4)));
    re_holds(&rep, &sol, 11);
    let xi = bmw_xi(&rep, &s(1, 4), false).unwrap();
    assert_eq!(xi, s(2, 1));
    let a_special = &xi + &sol.alpha[0].try_div(&xi).unwrap();
    let sp = bmw_deg2_boundary(&rep, &l, Deg2Case::FreeAlpha0, &a_special).unwrap();
    let x = s(3, 7);
    let rat = rational_boundary(&l, &xi, &x).unwrap();
    assert!(rat.ratio_to(&sp.k(&x).unwrap()).is_some());
}

#[test]
fn conjugated_solutions() {
    let rep = gl2();
    let lt = Matrix::from_fracs(&[2], &[&[(0, 1), (2, 1)], &[(5, 3), (-7, 2)]]).unwrap();
    let xi2 = s(2, 5);
    let b = rep.b().clone();
    let bh = sqrt_b(&b).unwrap();
    assert_eq!(bh, s(4, 1));
    let base = BoundarySolution::rational(lt.clone(), xi2.clone());
    for (x, z) in pairs(12, 3) {
        let kt = |t: &Scalar| two_case_boundary(&lt, &xi2, &bh, t);
        assert!(check_conjugated_re(&rep, &kt, &x, &z).unwrap());
        let refl = |t: &Scalar| conjugate_boundary(&|u| base.k(u), &b, ConjugateVariant::Reflect, t);
        assert_eq!(refl(&x).unwrap(), kt(&x).unwrap());
        assert!(check_conjugated_re(&rep, &refl, &x, &z).unwrap());
        let inv = |t: &Scalar| conjugate_boundary(&|u| base.k(u), &b, ConjugateVariant::Invert, t);
        assert!(check_conjugated_re(&rep, &inv, &x, &z).unwrap());
    }
}

#[test]
fn derivative_term_matches_resolvent() {
    let l = Matrix::from_fracs(&[2], &[&[(0, 1), (2, 1)], &[(5, 3), (-7, 2)]]).unwrap();
    let xi = s(4, 5);
    let lam = s(3, 2);
    let sol = BoundarySolution::rational(l.clone(), xi.clone());
    let term = sol.boundary_derivative_term(&lam).unwrap();
    let inv = inverse(&l.shift(&-xi.clone())).unwrap();
    assert_eq!(term, inv.scale(&(&lam * &xi)));
}

#[test]
fn locality() {
    let rep = gl2();
    let l = Matrix::from_fracs(&[2], &[&[(0, 1), (2, 1)], &[(5, 3), (-7, 2)]]).unwrap();
    let k = rational_boundary(&l, &s(1, 1), &s(3, 5)).unwrap();
    assert!(locality_residual(&rep, &k, 4).unwrap().is_zero());
}

#[test]
fn double_braid_boundary_matches_evaluation() {
    let rep = gl2();
    let ev = evaluation_boundary(2, &s(2, 1)).unwrap();
    assert_eq!(double_braid_boundary(&rep), ev.l.scale(&s(2, 1)));
    let sp = sp2(AChoice::PlusQ);
    let l = double_braid_boundary(&sp);
    assert!(check_constant_re(&sp, &l).unwrap());
    assert_eq!(bmw_constants(&sp, &l, 1).unwrap().c, s(1, 64));
}
