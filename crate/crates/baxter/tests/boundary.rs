use baxter::boundary::{default_l, left_branches, right_data, wrong_xi, LeftSpec, RightSpec, XiSpec};
use baxter_core::reflection::check_constant_re;
use baxter_core::rep::{by_name, AChoice, REGISTRY};
use baxter_core::Scalar;

#[test]
fn names_round_trip() {
    for name in ["trivial", "rational", "evaluation", "poly", "small", "prop2", "bmw2", "bmw4", "rational:xi=3/2"] {
        assert_eq!(LeftSpec::parse(name).unwrap().name(), name);
    }
    assert_eq!(LeftSpec::parse("rational:xi=-2").unwrap(), LeftSpec::Rational(Some(Scalar::from_int(-2))));
    assert!(LeftSpec::parse("rational:xi=x").is_err());
    assert_eq!(RightSpec::parse("2case").unwrap(), RightSpec::Conjugated);
    assert!(RightSpec::parse("left").is_err());
}

#[test]
fn default_l_solves_the_constant_equation() {
    let q = Scalar::from_int(2);
    for name in REGISTRY {
        for ac in [AChoice::PlusQ, AChoice::MinusInvQ] {
            let rep = by_name(name, &q, ac).unwrap();
            let l = default_l(&rep);
            assert!(check_constant_re(&rep, &l).unwrap(), "{name}");
            if rep.n() <= 3 {
                assert!(!l.is_identity(), "{name}");
            }
        }
    }
}

#[test]
fn wrong_xi_avoids_the_roots() {
    let seven_thirds = Scalar::from_frac(7, 3);
    assert_eq!(wrong_xi(None), seven_thirds);
    assert_ne!(wrong_xi(Some(&seven_thirds)), seven_thirds);
    assert_ne!(wrong_xi(Some(&-seven_thirds.clone())), seven_thirds);
}

#[test]
fn bmw_branches() {
    let q = Scalar::from_int(2);
    let sp2 = by_name("sp2", &q, AChoice::PlusQ).unwrap();
    let b = left_branches(&sp2, &LeftSpec::Prop2, &XiSpec::Auto).unwrap();
    let xis: Vec<String> = b.iter().map(|(_, s)| s.xi.to_string()).collect();
    assert_eq!(xis, ["1/2", "-1/2"]);
    assert!(left_branches(&sp2, &LeftSpec::Bmw4, &XiSpec::Auto).is_err());
    let (_, xi2, b_half) = right_data(&sp2, None).unwrap();
    assert_eq!(b_half, Scalar::from_int(16));
    assert_eq!(xi2, Scalar::from_frac(1, 2));
    let gl2 = by_name("gl2", &q, AChoice::PlusQ).unwrap();
    assert!(left_branches(&gl2, &LeftSpec::Prop2, &XiSpec::Auto).is_err());
}
