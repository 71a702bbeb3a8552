//! The `chain` and `spectrum` commands.

use baxter_core::chain::{exact_spectrum, ChainModel, ExactSpectrum, HamiltonianKind, RightBoundary};
use baxter_core::reflection::{BoundaryKind, BoundarySolution};
use baxter_core::rep::{Kind, Representation};
use baxter_core::{Error as CoreError, Matrix, Poly, Scalar};
use nalgebra::DMatrix;
use serde_json::json;

use crate::boundary::{left_branches, right_data, LeftSpec, RightSpec};
use crate::config::Setup;
use crate::error::{CliError, Result};
use crate::json;
use crate::report::{timed, Record};
use crate::runner::Job;
use crate::suites::{base, draw, sampler};

const MIN_PAIRS: usize = 3;

/// A chain to be checked, or the reason it cannot be built.
#[derive(Clone)]
struct Built {
    label: String,
    right: String,
    outcome: std::result::Result<ChainModel, String>,
}

fn distinct_reps(setup: &Setup) -> Vec<Representation> {
    // Hecke chains do not depend on the choice of a
    let mut out: Vec<Representation> = Vec::new();
    for rep in &setup.reps {
        if rep.kind() == Kind::Bmw || out.is_empty() {
            out.push(rep.clone());
        }
    }
    out
}

fn right_boundary(setup: &Setup, rep: &Representation) -> std::result::Result<(String, RightBoundary), String> {
    match setup.right.unwrap_or(RightSpec::Trivial) {
        RightSpec::Trivial => Ok(("trivial".into(), RightBoundary::Trivial)),
        RightSpec::Conjugated => {
            let (l, xi2, b_half) = right_data(rep, setup.xi2.as_ref())?;
            let label = format!("conjugated xi2={xi2}");
            Ok((label, RightBoundary::Conjugated { solution: BoundarySolution::rational(l, xi2), b_half }))
        }
    }
}

fn build(setup: &Setup, sites: usize) -> Vec<(Representation, Built)> {
    let left = setup.left.clone().unwrap_or(LeftSpec::Trivial);
    let mut out = Vec::new();
    for rep in distinct_reps(setup) {
        let right = right_boundary(setup, &rep);
        let branches = left_branches(&rep, &left, &setup.xi);
        match (branches, right) {
            (Err(why), right) => {
                let r = right.map(|(l, _)| l).unwrap_or_else(|_| "conjugated".into());
                out.push((rep, Built { label: left.name(), right: r, outcome: Err(why) }));
            }
            (Ok(_), Err(why)) => {
                out.push((rep, Built { label: left.name(), right: "conjugated".into(), outcome: Err(why) }));
            }
            (Ok(branches), Ok((rlabel, right))) => {
                for (label, sol) in branches {
                    let outcome = ChainModel::new(rep.clone(), sites, sol, right.clone()).map_err(|e| e.to_string());
                    out.push((rep.clone(), Built { label, right: rlabel.clone(), outcome }));
                }
            }
        }
    }
    out
}

fn chain_base(name: &str, anchor: &str, rep: &Representation, b: &Built, sites: usize) -> Record {
    base(name, anchor, rep).param("left", &b.label).param("right", &b.right).param("sites", sites)
}

fn requested_kind(setup: &Setup) -> Result<Option<HamiltonianKind>> {
    match setup.config.kind.as_deref() {
        None => Ok(None),
        Some(s) => HamiltonianKind::parse(s)
            .map(Some)
            .ok_or_else(|| CliError::Config(format!("unknown Hamiltonian kind {s:?}; expected H0..H7"))),
    }
}

/// The general kind plus the one matching the boundaries.
fn kinds_for(chain: &ChainModel) -> Vec<HamiltonianKind> {
    let general = match chain.rep().kind() {
        Kind::Hecke => HamiltonianKind::H0,
        Kind::Bmw => HamiltonianKind::H6,
    };
    let mut ks = vec![general, default_kind(chain)];
    ks.dedup();
    ks
}

/// The natural kind for a chain's boundaries.
fn default_kind(chain: &ChainModel) -> HamiltonianKind {
    use HamiltonianKind::*;
    let hecke = chain.rep().kind() == Kind::Hecke;
    let left = chain.left().kind;
    let rational = matches!(left, BoundaryKind::Rational | BoundaryKind::Evaluation | BoundaryKind::Polynomial);
    let pick = |h, b| if hecke { h } else { b };
    match (left, rational, chain.right().is_trivial()) {
        (BoundaryKind::Trivial, _, true) => pick(H1, H5),
        (_, true, true) => pick(H2, H4),
        (_, true, false) => pick(H3, H7),
        _ => pick(H0, H6),
    }
}

pub fn chain_jobs(setup: &Setup) -> Result<Vec<Job>> {
    let sites = setup.config.sites.unwrap_or(2);
    let kind = requested_kind(setup)?;
    let mut jobs: Vec<Job> = Vec::new();
    for (rep, built) in build(setup, sites) {
        let chain = match &built.outcome {
            Ok(c) => c.clone(),
            Err(why) => {
                let rec = chain_base("chain", "open chain construction", &rep, &built, sites).skipped(why);
                jobs.push(Box::new(move || vec![rec]));
                continue;
            }
        };
        for &seed in &setup.seeds {
            let (chain, built, rep) = (chain.clone(), built.clone(), rep.clone());
            let pairs = setup.samples.max(MIN_PAIRS);
            jobs.push(Box::new(move || chain_records(&chain, &rep, &built, sites, seed, pairs, kind)));
        }
    }
    Ok(jobs)
}

fn chain_records(
    chain: &ChainModel,
    rep: &Representation,
    b: &Built,
    sites: usize,
    seed: u64,
    pairs: usize,
    kind: Option<HamiltonianKind>,
) -> Vec<Record> {
    let mut smp = sampler(rep, seed.wrapping_add(40));
    let mut recs = Vec::new();
    let mk = |name: &str, anchor: &str| chain_base(name, anchor, rep, b, sites).param("seed", seed);
    for i in 0..pairs {
        recs.push(timed(|| {
            let rec = mk("tau-commute", "[τ(x), τ(z)] = 0").param("sample", i);
            match draw(&mut smp, 2, |p| {
                let (tx, tz) = (chain.tau(&p[0])?, chain.tau(&p[1])?);
                baxter_core::check::compare(&(&tx * &tz), &(&tz * &tx))
            }) {
                Ok((p, res)) => rec.param("x", &p[0]).param("z", &p[1]).residual(&res),
                Err(e) => rec.error(e),
            }
        }));
        recs.push(timed(|| {
            let rec = mk("t-commute", "[t(x), t(z)] = 0").param("sample", i);
            match draw(&mut smp, 2, |p| chain.transfer_commutator(&p[0], &p[1])) {
                Ok((p, res)) => rec.param("x", &p[0]).param("z", &p[1]).residual(&res),
                Err(e) => rec.error(e),
            }
        }));
    }
    for k in [2usize, 3] {
        recs.push(timed(|| {
            let rec = mk("dressed-re", "reflection equation for the dressed boundary").param("level", k);
            match draw(&mut smp, 2, |p| chain.dressed_re_residual(k, &p[0], &p[1])) {
                Ok((p, res)) => rec.param("x", &p[0]).param("z", &p[1]).residual(&res),
                Err(e) => rec.error(e),
            }
        }));
    }
    if chain.left().is_regular() {
        recs.push(timed(|| {
            let rec = mk("transfer-regularity", "τ(1) = λ^{2(n−1)} Tr 𝒟");
            let run = || -> baxter_core::Result<_> {
                let tau = chain.tau(&Scalar::one())?;
                let f = &rep.lambda().pow(2 * sites as i32)? * &rep.d_op().trace();
                let expect = Matrix::identity(&chain.shape(sites)).scale(&f);
                baxter_core::check::compare(&tau, &expect)
            };
            match run() {
                Ok(res) => rec.residual(&res),
                Err(e) => rec.error(e),
            }
        }));
    }
    let kinds = match kind {
        Some(k) => vec![k],
        None => kinds_for(chain),
    };
    for k in kinds {
        recs.push(timed(|| {
            let rec = mk("hamiltonian-commute", "[H, t(z)] = 0").param("kind", k.name());
            let zs = match smp.points(MIN_PAIRS) {
                Ok(z) => z,
                Err(e) => return rec.error(e),
            };
            let mut res = chain.h_commutator(k, &zs);
            let mut tries = 0;
            let mut zs = zs;
            while matches!(res, Err(CoreError::Pole(_))) && tries < 16 {
                zs = match smp.points(MIN_PAIRS) {
                    Ok(z) => z,
                    Err(e) => return rec.error(e),
                };
                res = chain.h_commutator(k, &zs);
                tries += 1;
            }
            let zstr = zs.iter().map(|z| z.to_string()).collect::<Vec<_>>().join(", ");
            match res {
                Ok(r) => rec.param("z", zstr).residual(&r),
                Err(CoreError::Unsupported(why)) if kind.is_none() => rec.skipped(format!("{} unavailable: {why}", k.name())),
                Err(e) => rec.error(e),
            }
        }));
    }
    recs
}

/// `(t − r)^m` factors followed by the irreducible-over-ℚ cofactor.
pub fn factored(spec: &ExactSpectrum) -> String {
    let mut roots = spec.rational_roots.clone();
    roots.sort_by(|a, b| b.0.to_f64().total_cmp(&a.0.to_f64()));
    let mut parts: Vec<String> = roots
        .iter()
        .map(|(r, m)| {
            let lin = if r.is_zero() {
                "t".to_string()
            } else if r.signum() < 0 {
                format!("(t + {})", -r.clone())
            } else {
                format!("(t - {r})")
            };
            if *m > 1 {
                format!("{lin}^{m}")
            } else {
                lin
            }
        })
        .collect();
    for (f, m) in &spec.remainder_factors {
        let body = format!("({f})");
        parts.push(if *m > 1 { format!("{body}^{m}") } else { body });
    }
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join(" ")
    }
}

/// Floating-point roots of `p` from its companion matrix, sorted.
pub fn approximate_roots(p: &Poly) -> Vec<(f64, f64)> {
    let d = match p.degree() {
        Some(d) if d > 0 => d,
        _ => return Vec::new(),
    };
    let c = p.to_f64();
    let lead = c[d];
    let comp = DMatrix::from_fn(d, d, |i, j| {
        if j == d - 1 {
            -c[i] / lead
        } else if i == j + 1 {
            1.0
        } else {
            0.0
        }
    });
    let mut roots: Vec<(f64, f64)> = comp.complex_eigenvalues().iter().map(|z| (z.re, z.im)).collect();
    roots.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.total_cmp(&b.1)));
    roots
}

fn fmt_f(v: f64) -> String {
    let s = format!("{v:.12}");
    if s.trim_start_matches('-').chars().all(|c| c == '0' || c == '.') {
        format!("{:.12}", 0.0)
    } else {
        s
    }
}

fn fmt_complex((re, im): (f64, f64)) -> String {
    if im.abs() < 1e-12 {
        fmt_f(re)
    } else if im < 0.0 {
        format!("{}{}i", fmt_f(re), fmt_f(im))
    } else {
        format!("{}+{}i", fmt_f(re), fmt_f(im))
    }
}

fn spectrum_data(h: &Matrix) -> serde_json::Value {
    let spec = exact_spectrum(h);
    let approx: Vec<serde_json::Value> = spec
        .remainder_factors
        .iter()
        .flat_map(|(f, m)| approximate_roots(f).into_iter().map(move |z| json!({ "root": fmt_complex(z), "multiplicity": m })))
        .collect();
    json!({
        "dimension": h.dim(),
        "char_poly": json::poly(&spec.char_poly),
        "factored": factored(&spec),
        "rational_roots": spec.rational_roots.iter().map(|(r, m)| json!({"root": json::scalar(r), "multiplicity": m})).collect::<Vec<_>>(),
        "remainder": json::poly(&spec.remainder),
        "remainder_factors": spec.remainder_factors.iter().map(|(f, m)| json!({"factor": json::poly(f), "multiplicity": m})).collect::<Vec<_>>(),
        "approximate_roots": approx,
    })
}

pub fn spectrum_jobs(setup: &Setup) -> Result<Vec<Job>> {
    let sites = setup.config.sites.unwrap_or(2);
    let kind = requested_kind(setup)?;
    let mut jobs: Vec<Job> = Vec::new();
    for (rep, built) in build(setup, sites) {
        let rec = chain_base("spectrum", "spectrum of the local Hamiltonian", &rep, &built, sites);
        let chain = match built.outcome {
            Ok(c) => c,
            Err(why) => {
                let rec = rec.skipped(why);
                jobs.push(Box::new(move || vec![rec]));
                continue;
            }
        };
        jobs.push(Box::new(move || {
            vec![timed(|| {
                let k = kind.unwrap_or_else(|| default_kind(&chain));
                let rec = rec.param("kind", k.name());
                match chain.hamiltonian(k) {
                    Ok(h) => rec.data(spectrum_data(&h)),
                    Err(e) => rec.error(format!("{} unavailable: {e}", k.name())),
                }
            })]
        }));
    }
    Ok(jobs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quadratic_roots() {
        // t² − 2
        let p = Poly::new(vec![Scalar::from_int(-2), Scalar::zero(), Scalar::one()]);
        let r = approximate_roots(&p);
        assert!((r[0].0 + 2f64.sqrt()).abs() < 1e-9);
        assert!((r[1].0 - 2f64.sqrt()).abs() < 1e-9);
    }
}
