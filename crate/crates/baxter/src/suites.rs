//! Verification suites: each produces independent jobs yielding check records.

use baxter_core::baxter::{cross_unitarity_residual, domain_exclusions, forms_residual, unitarity_residual, ybe_residual};
use baxter_core::check::{compare, compare_scalar, Residual};
use baxter_core::linalg::{minimal_polynomial, rank};
use baxter_core::reflection::{
    bmw_constants, bmw_constants_residual, chart1_failure, check_constant_re, constant_re_residual,
    conjugate_boundary, conjugated_re_residual, deg2_constraints, deg4_alphas, evaluation_boundary, extend_q,
    locality_residual, polynomial_coefficients, polynomial_k, q0_formula, quadratic_k, rational_boundary,
    re_residual, two_case_boundary, BoundaryKind, BoundarySolution, ConjugateVariant, Deg2Case,
};
use baxter_core::rep::{antisymmetrizer, Kind, Representation};
use baxter_core::sample::Sampler;
use baxter_core::{Error as CoreError, Matrix, Result as CoreResult, Scalar};
use serde_json::json;

use crate::boundary::{
    bmw_candidates, default_l, evaluation_l, left_branches, prop2_all, right_data, small_l, Branches, LeftSpec, XiSpec,
};
use crate::config::{Setup, Suite};
use crate::json;
use crate::report::{timed, Record};
use crate::runner::Job;

const BIT_BOUND: u32 = 5;

type BoundaryFn<'a> = Box<dyn Fn(&Scalar) -> CoreResult<Matrix> + 'a>;
const MAX_RETRIES: usize = 64;
const MAX_TOWER_DIM: usize = 1024;

/// Parameters common to every record about `rep`.
pub fn base(name: &str, anchor: &str, rep: &Representation) -> Record {
    Record::new(name, anchor).param("rep", rep.name()).param("q", rep.q()).param("a", rep.a_choice().name())
}

pub fn sampler(rep: &Representation, seed: u64) -> Sampler {
    let mut ex = domain_exclusions(rep);
    ex.extend([Scalar::one(), -Scalar::one()]);
    Sampler::new(seed, BIT_BOUND, &ex).expect("valid bit bound")
}

/// Draws `arity` points and evaluates `f`, redrawing when `f` hits a pole.
pub fn draw<T>(
    smp: &mut Sampler,
    arity: usize,
    mut f: impl FnMut(&[Scalar]) -> CoreResult<T>,
) -> CoreResult<(Vec<Scalar>, T)> {
    let mut last = None;
    for _ in 0..MAX_RETRIES {
        let pts = smp.points(arity)?;
        match f(&pts) {
            Err(CoreError::Pole(p)) => last = Some(p),
            other => return other.map(|v| (pts, v)),
        }
    }
    Err(CoreError::Pole(last.unwrap_or_default()))
}

/// Record for one sampled residual check.
fn sampled(
    rec: Record,
    smp: &mut Sampler,
    names: &[&str],
    f: impl FnMut(&[Scalar]) -> CoreResult<Residual>,
) -> Record {
    match draw(smp, names.len(), f) {
        Ok((pts, res)) => {
            let mut r = rec;
            for (n, p) in names.iter().zip(&pts) {
                r = r.param(n, p);
            }
            r.residual(&res)
        }
        Err(e) => rec.error(e),
    }
}

fn seed_for(seed: u64, salt: u64) -> u64 {
    seed.wrapping_mul(0x9e37_79b9_7f4a_7c15).wrapping_add(salt)
}

/// Builds all jobs for a suite.
pub fn jobs(setup: &Setup, suite: Suite) -> Vec<Job> {
    let mut out = Vec::new();
    let suites: &[Suite] = match suite {
        Suite::All => &[
            Suite::Ybe,
            Suite::Unitarity,
            Suite::CrossUnitarity,
            Suite::ConstantRe,
            Suite::Re,
            Suite::ConjugatedRe,
            Suite::BmwConstants,
            Suite::Antisymmetrizers,
        ],
        other => std::slice::from_ref(match other {
            Suite::Ybe => &Suite::Ybe,
            Suite::Unitarity => &Suite::Unitarity,
            Suite::CrossUnitarity => &Suite::CrossUnitarity,
            Suite::ConstantRe => &Suite::ConstantRe,
            Suite::Re => &Suite::Re,
            Suite::ConjugatedRe => &Suite::ConjugatedRe,
            Suite::BmwConstants => &Suite::BmwConstants,
            _ => &Suite::Antisymmetrizers,
        }),
    };
    for &s in suites {
        for rep in &setup.reps {
            match s {
                Suite::Ybe => ybe_jobs(setup, rep, &mut out),
                Suite::Unitarity => unitarity_jobs(setup, rep, &mut out),
                Suite::CrossUnitarity => cross_unitarity_jobs(setup, rep, &mut out),
                Suite::ConstantRe => constant_re_jobs(rep, &mut out),
                Suite::Re => re_jobs(setup, rep, &mut out),
                Suite::ConjugatedRe => conjugated_jobs(setup, rep, &mut out),
                Suite::BmwConstants => bmw_jobs(rep, &mut out),
                Suite::Antisymmetrizers => antisymmetrizer_jobs(rep, &mut out),
                Suite::All => unreachable!(),
            }
        }
    }
    out
}

fn relation_record(rep: &Representation) -> Record {
    let r = rep.r();
    let id = Matrix::identity(r.factors());
    match rep.kind() {
        Kind::Hecke => {
            let lhs = &(r * r) - &r.scale(rep.lambda());
            base("hecke-relation", "Hecke relation R̂² = λR̂ + 1", rep).residual(&compare(&lhs, &id).expect("same shape"))
        }
        Kind::Bmw => {
            let q = rep.q();
            let nu = rep.nu().expect("BMW has ν");
            let cubic = &(&r.shift(&-q) * &r.shift(&q.inv().expect("q ≠ 0"))) * &r.shift(&-nu.clone());
            base("bmw-cubic", "BMW cubic (R̂ − q)(R̂ + q⁻¹)(R̂ − ν) = 0", rep)
                .residual(&compare(&cubic, &Matrix::zeros(r.factors())).expect("same shape"))
        }
    }
}

fn b_record(rep: &Representation) -> Record {
    let rec = base("b-constant", "cross-unitarity constant b", rep).data(json!({
        "b": json::scalar(rep.b()),
        "d_trace": json::scalar(&rep.d_op().trace()),
    }));
    match rep.kind() {
        Kind::Hecke => {
            let n = rep.n() as i32;
            let expect = rep.q().pow(2 * n).expect("q ≠ 0");
            let formula = (Scalar::one() - rep.lambda() * &rep.d_op().trace()).inv();
            match formula {
                Ok(f) => rec.residual(&compare_scalar(&f, &expect).and(compare_scalar(rep.b(), &expect))),
                Err(e) => rec.error(e),
            }
        }
        Kind::Bmw => {
            let nu = rep.nu().expect("BMW has ν");
            let expect = (rep.a() * rep.a()).try_div(&(nu * nu)).expect("ν ≠ 0");
            let mut r = rec.residual(&compare_scalar(rep.b(), &expect));
            if let Some(ratio) = rep.trace_ratio() {
                r = r.param("kappa_trace_ratio", ratio);
            }
            r
        }
    }
}

fn ybe_jobs(setup: &Setup, rep: &Representation, out: &mut Vec<Job>) {
    let r = rep.clone();
    out.push(Box::new(move || vec![timed(|| relation_record(&r)), timed(|| b_record(&r))]));
    for &seed in &setup.seeds {
        let rep = rep.clone();
        let n = setup.samples;
        out.push(Box::new(move || {
            let mut smp = sampler(&rep, seed);
            (0..n)
                .map(|i| {
                    timed(|| {
                        let rec = base("ybe", "Yang–Baxter equation for the baxterized R̂(x)", &rep)
                            .param("seed", seed)
                            .param("sample", i);
                        sampled(rec, &mut smp, &["x", "y"], |p| ybe_residual(&rep, &p[0], &p[1]))
                    })
                })
                .collect()
        }));
    }
}

fn unitarity_jobs(setup: &Setup, rep: &Representation, out: &mut Vec<Job>) {
    for &seed in &setup.seeds {
        let rep = rep.clone();
        let n = setup.samples;
        out.push(Box::new(move || {
            let mut smp = sampler(&rep, seed_for(seed, 1));
            let mut recs = Vec::new();
            for i in 0..n {
                recs.push(timed(|| {
                    let rec = base("unitarity", "unitarity σ̃(x)σ̃(1/x) = 1", &rep).param("seed", seed).param("sample", i);
                    sampled(rec, &mut smp, &["x"], |p| unitarity_residual(&rep, &p[0]))
                }));
                recs.push(timed(|| {
                    let rec = base("baxterization-forms", "agreement of the closed forms of R̂(x)", &rep)
                        .param("seed", seed)
                        .param("sample", i);
                    sampled(rec, &mut smp, &["x"], |p| forms_residual(&rep, &p[0]))
                }));
            }
            recs
        }));
    }
}

/// A random operator on `k` copies of `V` with small rational entries.
pub fn random_operator(rep: &Representation, k: usize, seed: u64) -> Matrix {
    let shape = rep.shape(k);
    let mut smp = Sampler::new(seed, 3, &[]).expect("valid bit bound");
    Matrix::from_fn(&shape, |_, _| smp.next_point().expect("sample space is large"))
}

fn cross_unitarity_jobs(setup: &Setup, rep: &Representation, out: &mut Vec<Job>) {
    for &seed in &setup.seeds {
        for k in [1usize, 2] {
            let rep = rep.clone();
            let n = setup.samples;
            out.push(Box::new(move || {
                let mut smp = sampler(&rep, seed_for(seed, 10 + k as u64));
                (0..n)
                    .map(|i| {
                        timed(|| {
                            let y = random_operator(&rep, k, seed_for(seed, 100 * k as u64 + i as u64));
                            let rec = base("cross-unitarity", "cross-unitarity of the quantum trace", &rep)
                                .param("seed", seed)
                                .param("sample", i)
                                .param("y_sites", k);
                            sampled(rec, &mut smp, &["x"], |p| cross_unitarity_residual(&rep, &y, &p[0]))
                        })
                    })
                    .collect()
            }));
        }
    }
}

fn constant_re_candidates(rep: &Representation) -> Vec<(String, Matrix)> {
    let n = rep.n();
    let mut out = vec![("identity".to_string(), Matrix::identity(&[n]))];
    let d = default_l(rep);
    if !d.is_identity() {
        out.push(("numeric".into(), d));
    }
    if let Ok(l) = evaluation_l(rep) {
        out.push(("evaluation".into(), l));
    }
    if rep.kind() == Kind::Hecke {
        out.push(("small".into(), small_l(rep)));
    }
    out
}

fn constant_re_jobs(rep: &Representation, out: &mut Vec<Job>) {
    let rep = rep.clone();
    out.push(Box::new(move || {
        let mut recs = Vec::new();
        for (label, l) in constant_re_candidates(&rep) {
            recs.push(timed(|| {
                let rec = base("constant-re", "constant reflection equation R̂L₁R̂L₁ = L₁R̂L₁R̂", &rep).param("l", &label);
                match constant_re_residual(&rep, &l) {
                    Ok(res) => rec.residual(&res),
                    Err(e) => rec.error(e),
                }
            }));
        }
        recs.push(timed(|| {
            let n = rep.n();
            let d: Vec<Scalar> = (0..n).map(|i| Scalar::from_frac(3 + i as i64, 1 + i as i64)).collect();
            let rec = base("constant-re-negative-control", "constant reflection equation, diagonal control", &rep)
                .param("l", format!("diag({})", d.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(", ")));
            match constant_re_residual(&rep, &Matrix::diag(&d)) {
                Ok(res) => rec.expect_nonzero(&res),
                Err(e) => rec.error(e),
            }
        }));
        if rep.kind() == Kind::Hecke {
            recs.push(timed(|| {
                let rec = base("evaluation-frt", "FRT and intertwining relations of the evaluation L^±", &rep);
                match evaluation_boundary(rep.n(), rep.q()) {
                    Ok(ev) => rec.data(json!({ "L": json::matrix(&ev.l) })),
                    Err(e) => rec.error(e),
                }
            }));
        }
        recs
    }));
}

/// The boundaries exercised by the `re` suite.
fn re_boundaries(setup: &Setup, rep: &Representation) -> Vec<(String, Branches)> {
    if let Some(spec) = &setup.left {
        if *spec == LeftSpec::Prop2 {
            return prop2_all(rep, &setup.xi);
        }
        return vec![(spec.name(), left_branches(rep, spec, &setup.xi))];
    }
    let specs: Vec<LeftSpec> = match rep.kind() {
        Kind::Hecke => vec![LeftSpec::Rational(None), LeftSpec::Evaluation, LeftSpec::Poly, LeftSpec::Small],
        Kind::Bmw => vec![LeftSpec::Bmw2],
    };
    let mut out: Vec<(String, Branches)> = Vec::new();
    if rep.kind() == Kind::Hecke {
        let ident = setup_identity_branches(rep, &setup.xi);
        out.push(("identity".into(), ident));
    } else {
        out.extend(prop2_all(rep, &setup.xi));
    }
    for spec in specs {
        out.push((spec.name(), left_branches(rep, &spec, &setup.xi)));
    }
    out
}

fn setup_identity_branches(rep: &Representation, xi: &XiSpec) -> Branches {
    let xis = match xi {
        XiSpec::Value(v) => vec![v.clone()],
        XiSpec::Wrong => vec![crate::boundary::wrong_xi(None)],
        XiSpec::Auto => vec![Scalar::one(), Scalar::from_frac(3, 2)],
    };
    Ok(xis
        .into_iter()
        .map(|x| (format!("identity xi={x}"), BoundarySolution::rational(Matrix::identity(&[rep.n()]), x)))
        .collect())
}

fn boundary_params(rec: Record, label: &str, sol: &BoundarySolution) -> Record {
    let mut r = rec.param("boundary", label).param("kind", sol.kind.name());
    if sol.kind != BoundaryKind::Trivial && sol.kind != BoundaryKind::Small && sol.kind != BoundaryKind::BmwDeg2 {
        r = r.param("xi", &sol.xi);
    }
    r
}

fn re_jobs(setup: &Setup, rep: &Representation, out: &mut Vec<Job>) {
    for (family, branches) in re_boundaries(setup, rep) {
        let branches = match branches {
            Ok(b) => b,
            Err(why) => {
                let rec = base("re", "reflection equation", rep).param("boundary", &family).skipped(why);
                out.push(Box::new(move || vec![rec]));
                continue;
            }
        };
        for (label, sol) in branches {
            for &seed in &setup.seeds {
                let rep = rep.clone();
                let sol = sol.clone();
                let label = label.clone();
                let n = setup.samples;
                out.push(Box::new(move || re_records(&rep, &label, &sol, seed, n)));
            }
        }
    }
}

fn re_records(rep: &Representation, label: &str, sol: &BoundarySolution, seed: u64, n: usize) -> Vec<Record> {
    let mut smp = sampler(rep, seed_for(seed, 20));
    let mut recs = Vec::new();
    let k = |t: &Scalar| sol.k(t);
    for i in 0..n {
        recs.push(timed(|| {
            let rec = boundary_params(base("re", "reflection equation", rep), label, sol).param("seed", seed).param("sample", i);
            sampled(rec, &mut smp, &["x", "z"], |p| re_residual(rep, &k, &p[0], &p[1]))
        }));
    }
    let regular_rational = matches!(
        sol.kind,
        BoundaryKind::Rational | BoundaryKind::Evaluation | BoundaryKind::Polynomial
    );
    if sol.is_regular() {
        recs.push(timed(|| {
            let rec = boundary_params(base("boundary-regularity", "regularity K(1) = 1", rep), label, sol).param("seed", seed);
            match sol.k(&Scalar::one()) {
                Ok(m) => rec.residual(&compare(&m, &Matrix::identity(m.factors())).expect("same shape")),
                Err(CoreError::Pole(why)) => rec.skipped(format!("ξ is an eigenvalue of L, K(x) is not normalized at x = 1: {why}")),
                Err(e) => rec.error(e),
            }
        }));
    }
    if regular_rational {
        for i in 0..n {
            recs.push(timed(|| {
                let rec = boundary_params(base("boundary-unitarity", "boundary unitarity K(x)K(1/x) = 1", rep), label, sol)
                    .param("seed", seed)
                    .param("sample", i);
                sampled(rec, &mut smp, &["x"], |p| {
                    let prod = &sol.k(&p[0])? * &sol.k(&p[0].inv()?)?;
                    compare(&prod, &Matrix::identity(prod.factors()))
                })
            }));
            recs.push(timed(|| {
                let rec = boundary_params(base("polynomial-form", "polynomial form of the rational solution", rep), label, sol)
                    .param("seed", seed)
                    .param("sample", i);
                sampled(rec, &mut smp, &["x"], |p| polynomial_agreement(sol, &p[0]))
            }));
        }
    }
    if sol.factors() == [rep.n()] {
        recs.push(timed(|| {
            let rec = boundary_params(base("boundary-locality", "locality [K₁(x), R̂_m] = 0 for m ≥ 2", rep), label, sol)
                .param("seed", seed);
            sampled(rec, &mut smp, &["x"], |p| locality_residual(rep, &sol.k(&p[0])?, 3))
        }));
    }
    recs
}

/// Rational, expanded polynomial and (for quadratic `L`) two-term forms agree.
fn polynomial_agreement(sol: &BoundarySolution, x: &Scalar) -> CoreResult<Residual> {
    let rat = rational_boundary(&sol.l, &sol.xi, x)?;
    let mp = minimal_polynomial(&sol.l);
    let m = mp.degree().unwrap_or(0);
    let alpha = &mp.coeffs()[..m];
    let b = polynomial_coefficients(alpha, &sol.xi, x)?;
    let mut res = compare(&polynomial_k(&sol.l, &sol.xi, &b, x), &rat)?;
    if m == 2 && !sol.xi.is_zero() {
        res = res.and(compare(&quadratic_k(&sol.l, &alpha[0], &alpha[1], &sol.xi, x)?, &rat)?);
    }
    Ok(res)
}

fn conjugated_jobs(setup: &Setup, rep: &Representation, out: &mut Vec<Job>) {
    let (l, xi2, b_half) = match right_data(rep, setup.xi2.as_ref()) {
        Ok(d) => d,
        Err(why) => {
            let rec = base("conjugated-re", "conjugated reflection equation", rep).skipped(why);
            out.push(Box::new(move || vec![rec]));
            return;
        }
    };
    for &seed in &setup.seeds {
        let rep = rep.clone();
        let (l, xi2, b_half) = (l.clone(), xi2.clone(), b_half.clone());
        let n = setup.samples;
        out.push(Box::new(move || {
            let mut smp = sampler(&rep, seed_for(seed, 30));
            let base_sol = BoundarySolution::rational(l.clone(), xi2.clone());
            let b = rep.b().clone();
            let mut recs = Vec::new();
            for i in 0..n {
                let variants: [(&str, BoundaryFn); 3] = [
                    ("two-case", Box::new(|t: &Scalar| two_case_boundary(&l, &xi2, &b_half, t))),
                    ("reflect", Box::new(|t: &Scalar| conjugate_boundary(&|u| base_sol.k(u), &b, ConjugateVariant::Reflect, t))),
                    ("invert", Box::new(|t: &Scalar| conjugate_boundary(&|u| base_sol.k(u), &b, ConjugateVariant::Invert, t))),
                ];
                for (vname, kt) in &variants {
                    recs.push(timed(|| {
                        let rec = base("conjugated-re", "conjugated reflection equation", &rep)
                            .param("variant", vname)
                            .param("xi2", &xi2)
                            .param("b_half", &b_half)
                            .param("seed", seed)
                            .param("sample", i);
                        sampled(rec, &mut smp, &["x", "z"], |p| conjugated_re_residual(&rep, kt.as_ref(), &p[0], &p[1]))
                    }));
                }
            }
            recs
        }));
    }
}

fn bmw_jobs(rep: &Representation, out: &mut Vec<Job>) {
    if rep.kind() != Kind::Bmw {
        let rec = base("bmw-constants", "BMW boundary constants", rep).skipped("not a BMW representation");
        out.push(Box::new(move || vec![rec]));
        return;
    }
    for (label, l) in bmw_candidates(rep) {
        let rep = rep.clone();
        out.push(Box::new(move || bmw_records(&rep, label, &l)));
    }
    let rep = rep.clone();
    out.push(Box::new(move || {
        vec![
            timed(|| deg4_chart_record(&rep)),
            base("bmw4-instance", "degree-4 BMW boundary", &rep)
                .skipped("no constant solution with a quartic minimal polynomial is available"),
        ]
    }));
}

fn bmw_records(rep: &Representation, label: &str, l: &Matrix) -> Vec<Record> {
    let mk = |name: &str, anchor: &str| base(name, anchor, rep).param("l", label);
    if !check_constant_re(rep, l).unwrap_or(false) {
        return vec![mk("bmw-constants", "BMW boundary constants").skipped("L does not solve the constant reflection equation")];
    }
    let k = match bmw_constants(rep, l, 3) {
        Ok(k) => k,
        Err(e) => return vec![mk("bmw-constants", "BMW boundary constants").error(e)],
    };
    let mut recs = Vec::new();
    recs.push(
        mk("bmw-c", "central element c from K̂·L₁R̂L₁R̂ = cK̂")
            .param("c", &k.c)
            .param("c_reversed", &k.c_reversed)
            .param("orderings_agree", k.c == k.c_reversed)
            .data(json!({ "Q": k.q.iter().map(json::scalar).collect::<Vec<_>>() })),
    );
    let q0 = q0_formula(rep).map(|f| compare_scalar(&k.q[0], &f));
    recs.push(match q0 {
        Ok(res) => mk("bmw-q0", "Q⁽⁰⁾ = (ν⁻¹ + λ − ν)/λ").param("q0", &k.q[0]).residual(&res),
        Err(e) => mk("bmw-q0", "Q⁽⁰⁾ = (ν⁻¹ + λ − ν)/λ").error(e),
    });
    let neg = mk("bmw-negative-powers", "Q⁽⁻ⁿ⁾ from positive powers, n ≤ 3");
    recs.push(if k.q_negative.is_empty() {
        neg.skipped("L is singular")
    } else {
        match bmw_constants_residual(rep, &k) {
            Ok(res) => neg.residual(&res),
            Err(e) => neg.error(e),
        }
    });
    let xi_rec = mk("bmw-xi", "ξ² = −ac/ν");
    recs.push(match baxter_core::reflection::bmw_xi(rep, &k.c, true) {
        Ok(x) => xi_rec.param("xi", &x),
        Err(e) => xi_rec.skipped(format!("not realizable: {e}")),
    });
    if minimal_polynomial(l).degree() == Some(2) {
        for (case, cname) in [(Deg2Case::FreeQ, "1a"), (Deg2Case::FreeAlpha0, "1b")] {
            match deg2_constraints(rep, l, case) {
                Ok(r) => {
                    if case == Deg2Case::FreeQ {
                        recs.push(mk("bmw-nnww", "degree-2 relation between α₁, α₀ and Q⁽¹⁾").residual(&r.nnww));
                    }
                    // the case constraints describe which family L belongs to; a mismatch is informational
                    recs.push(
                        mk("bmw-deg2-case", "degree-2 case constraints")
                            .param("case", cname)
                            .param("holds", r.case.is_zero()),
                    );
                }
                Err(e) => recs.push(mk("bmw-deg2-case", "degree-2 case constraints").param("case", cname).error(e)),
            }
        }
    }
    recs
}

/// Consistency of the degree-4 relations on synthetic `Q⁽¹⁾..Q⁽³⁾`.
fn deg4_chart_record(rep: &Representation) -> Record {
    let rec = base("bmw-deg4-consistency", "degree-4 BMW constraints on synthetic Q", rep).param("c", "1/64");
    let c = Scalar::from_frac(1, 64);
    let qs = [Scalar::from_int(3), Scalar::from_frac(5, 7), Scalar::from_frac(2, 9)];
    let run = || -> CoreResult<(Option<usize>, [Scalar; 4])> {
        let alpha = deg4_alphas(rep, &c, &qs)?;
        let q0 = q0_formula(rep)?;
        let table = extend_q(rep, &c, &alpha, &[q0, qs[0].clone(), qs[1].clone(), qs[2].clone()])?;
        Ok((chart1_failure(&alpha, &table)?, alpha))
    };
    match run() {
        Ok((None, alpha)) => rec.data(json!({ "alpha": alpha.iter().map(json::scalar).collect::<Vec<_>>() })),
        Ok((Some(r), _)) => rec.error(format!("relation fails at r = {r}")),
        Err(e) => rec.error(e),
    }
}

fn antisymmetrizer_jobs(rep: &Representation, out: &mut Vec<Job>) {
    if rep.a_choice() != baxter_core::rep::AChoice::PlusQ {
        return;
    }
    let rep = rep.clone();
    out.push(Box::new(move || vec![timed(|| height_record(&rep))]));
}

fn height_record(rep: &Representation) -> Record {
    let rec = base("height", "antisymmetrizer tower and height", rep);
    let n = rep.n();
    let mut ranks = Vec::new();
    let mut vanish = None;
    let mut note = None;
    for k in 1..=n + 1 {
        if n.pow(k as u32) > MAX_TOWER_DIM {
            note = Some(format!("stopped before A_{{1→{k}}}: dimension {} exceeds {MAX_TOWER_DIM}", n.pow(k as u32)));
            break;
        }
        match antisymmetrizer(rep, k) {
            Ok(a) => {
                let r = rank(&a);
                ranks.push(json!({ "k": k, "rank": r }));
                if a.is_zero() {
                    vanish = Some(k);
                    break;
                }
            }
            Err(e) => {
                note = Some(format!("A_{{1→{k}}}: {e}"));
                break;
            }
        }
    }
    let data = json!({ "ranks": ranks });
    match rep.kind() {
        Kind::Hecke => {
            let top = ranks.get(n - 1).and_then(|v| v["rank"].as_u64());
            if vanish == Some(n + 1) && top == Some(1) {
                rec.param("height", n).data(data)
            } else {
                rec.data(data).error(format!("expected A_{{1→{}}} = 0 with rank A_{{1→{n}}} = 1", n + 1))
            }
        }
        Kind::Bmw => {
            let mut r = rec.data(data);
            if let Some(k) = vanish {
                r = r.param("vanishes_at", k);
            }
            if let Some(msg) = note {
                r = r.param("stopped", msg);
            }
            r
        }
    }
}
