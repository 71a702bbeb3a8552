//! End-to-end acceptance run: one line per criterion, non-zero exit on failure.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use baxter::config::Cli;
use baxter::{execute, Record, Report, Status};
use baxter_core::linalg::rank;
use baxter_core::reflection::constant_re_residual;
use baxter_core::rep::{antisymmetrizer, by_name, AChoice};
use baxter_core::{Matrix, Scalar};
use clap::Parser;

struct Outcome {
    ok: bool,
    detail: String,
}

fn pass(detail: impl Into<String>) -> Outcome {
    Outcome { ok: true, detail: detail.into() }
}

fn fail(detail: impl Into<String>) -> Outcome {
    Outcome { ok: false, detail: detail.into() }
}

fn run(args: &[&str]) -> Report {
    let mut argv = vec!["baxter"];
    argv.extend_from_slice(args);
    let cli = Cli::try_parse_from(argv).expect("valid arguments");
    execute(&cli).expect("run succeeds")
}

fn s(p: i64, q: i64) -> Scalar {
    Scalar::from_frac(p, q)
}

fn param<'a>(r: &'a Record, k: &str) -> &'a str {
    r.parameters.get(k).map(String::as_str).unwrap_or("")
}

/// Records named `name`, grouped by the value of `key`, with (total, failed) counts.
/// Skipped records count towards the total only.
fn tally<'a>(report: &'a Report, name: &str, key: impl Fn(&'a Record) -> String) -> BTreeMap<String, (usize, usize)> {
    let mut out = BTreeMap::new();
    for r in report.records.iter().filter(|r| r.name == name) {
        let e = out.entry(key(r)).or_insert((0, 0));
        e.0 += 1;
        if r.status == Status::Fail {
            e.1 += 1;
        }
    }
    out
}

fn all_at_least(t: &BTreeMap<String, (usize, usize)>, min: usize) -> Result<(), String> {
    if t.is_empty() {
        return Err("no records".into());
    }
    for (k, (n, bad)) in t {
        if *n < min || *bad > 0 {
            return Err(format!("{k}: {n} records, {bad} failing"));
        }
    }
    Ok(())
}

fn rep_a(r: &Record) -> String {
    format!("{} a={}", param(r, "rep"), param(r, "a"))
}

fn c1() -> Outcome {
    let start = Instant::now();
    for name in ["gl2", "gl3"] {
        for q in [s(2, 1), s(7, 3)] {
            let rep = by_name(name, &q, AChoice::PlusQ).unwrap();
            let r = rep.r();
            let lhs = &(&(r * r) - &r.scale(rep.lambda())) - &Matrix::identity(r.factors());
            if !lhs.is_zero() {
                return fail(format!("{name} q={q}: R̂² − λR̂ − I ≠ 0"));
            }
        }
    }
    let t = start.elapsed();
    if t > Duration::from_secs(1) {
        return fail(format!("took {t:?}"));
    }
    pass(format!("gl2, gl3 at q ∈ {{2, 7/3}} in {t:?}"))
}

fn c2() -> Outcome {
    let start = Instant::now();
    let mut checked = 0;
    for rep in ["gl2", "gl3", "sp2", "so3"] {
        let report = run(&["verify", "--suite", "ybe", "--rep", rep, "--q", "2", "--samples", "5", "--seeds", "1"]);
        let t = tally(&report, "ybe", rep_a);
        if let Err(e) = all_at_least(&t, 5) {
            return fail(e);
        }
        if t.len() != 2 {
            return fail(format!("{rep}: expected both a-choices, got {}", t.len()));
        }
        checked += t.values().map(|v| v.0).sum::<usize>();
    }
    let t = start.elapsed();
    if t > Duration::from_secs(30) {
        return fail(format!("took {t:?}"));
    }
    pass(format!("{checked} exact YBE samples over gl2, gl3, sp2, so3 in {t:?}"))
}

fn c3() -> Outcome {
    let mut n = 0;
    for rep in ["gl2", "gl3", "sp2", "so3"] {
        let report = run(&["verify", "--suite", "unitarity", "--rep", rep, "--samples", "5"]);
        for name in ["unitarity", "baxterization-forms"] {
            let t = tally(&report, name, rep_a);
            if let Err(e) = all_at_least(&t, 5) {
                return fail(format!("{name}: {e}"));
            }
            n += t.values().map(|v| v.0).sum::<usize>();
        }
    }
    pass(format!("{n} unitarity and closed-form samples"))
}

fn c4() -> Outcome {
    for (name, n) in [("gl2", 2usize), ("gl3", 3)] {
        let rep = by_name(name, &s(2, 1), AChoice::PlusQ).unwrap();
        let top = antisymmetrizer(&rep, n).unwrap();
        let next = antisymmetrizer(&rep, n + 1).unwrap();
        if !next.is_zero() || rank(&top) != 1 {
            return fail(format!("{name}: rank A_1→{n} = {}, A_1→{} zero: {}", rank(&top), n + 1, next.is_zero()));
        }
    }
    let report = run(&["verify", "--suite", "antisymmetrizers", "--rep", "gl3"]);
    if !report.records.iter().any(|r| r.name == "height" && r.status == Status::Pass && param(r, "height") == "3") {
        return fail("gl3 height record missing");
    }
    pass("gl2: A_1→3 = 0, rank A_1→2 = 1; gl3: A_1→4 = 0, rank A_1→3 = 1")
}

fn c5() -> Outcome {
    for (name, n) in [("gl2", 2i32), ("gl3", 3)] {
        for q in [s(2, 1), s(7, 3)] {
            let rep = by_name(name, &q, AChoice::PlusQ).unwrap();
            let b = (Scalar::one() - rep.lambda() * &rep.d_op().trace()).inv().unwrap();
            let expect = q.pow(2 * n).unwrap();
            if b != expect || *rep.b() != expect {
                return fail(format!("{name} q={q}: b = {b}, expected {expect}"));
            }
        }
    }
    pass("b = (1 − λ Tr 𝒟)⁻¹ = q^{2N} for gl2, gl3")
}

fn c6() -> Outcome {
    let report = run(&["verify", "--suite", "re", "--rep", "gl2", "--samples", "5"]);
    let t = tally(&report, "re", |r| format!("{} {}", rep_a(r), param(r, "boundary")));
    let wanted = ["identity xi=1", "identity xi=3/2", "evaluation xi=1", "evaluation xi=3/2"];
    for w in wanted {
        let hits: Vec<_> = t.iter().filter(|(k, _)| k.ends_with(w)).collect();
        if hits.is_empty() {
            return fail(format!("no records for {w}"));
        }
        for (k, (n, bad)) in hits {
            if *n < 5 || *bad > 0 {
                return fail(format!("{k}: {n} records, {bad} not passing"));
            }
        }
    }
    for name in ["boundary-locality", "boundary-unitarity"] {
        let recs: Vec<_> = report.records.iter().filter(|r| r.name == name).collect();
        if recs.is_empty() || recs.iter().any(|r| r.status != Status::Pass) {
            return fail(format!("{name} not passing"));
        }
    }
    let all_re = t.values().all(|v| v.1 == 0);
    if !all_re {
        return fail("some reflection-equation record failed");
    }
    pass(format!("{} boundary/ξ families, each ≥5 exact samples; locality and unitarity exact", t.len()))
}

fn c7() -> Outcome {
    let report = run(&["verify", "--suite", "re", "--rep", "gl2", "--left", "evaluation", "--samples", "5"]);
    let t = tally(&report, "polynomial-form", |r| format!("{} {}", rep_a(r), param(r, "boundary")));
    match all_at_least(&t, 5) {
        Ok(()) => pass(format!("{} evaluation branches agree entrywise", t.len())),
        Err(e) => fail(e),
    }
}

fn c8() -> Outcome {
    let report = run(&["verify", "--suite", "re", "--rep", "sp2", "--q", "2", "--samples", "5"]);
    let t = tally(&report, "re", |r| format!("{} {}", rep_a(r), param(r, "boundary")));
    let half = t.get("sp2 a=q prop2 identity xi=1/2");
    if !matches!(half, Some((n, 0)) if *n >= 5) {
        return fail(format!("ξ = 1/2 branch for a = q: {half:?}"));
    }
    let realizable: Vec<_> = t.iter().filter(|(k, _)| k.starts_with("sp2 a=-1/q prop2") && k.contains(" xi=")).collect();
    if realizable.is_empty() || realizable.iter().any(|(_, (n, bad))| *n < 5 || *bad > 0) {
        return fail(format!("a = −1/q realizable branches: {realizable:?}"));
    }
    if t.values().any(|v| v.1 > 0) {
        return fail("a reflection-equation record failed");
    }
    let wrong = run(&["verify", "--suite", "re", "--rep", "sp2", "--q", "2", "--xi", "wrong", "--samples", "5"]);
    let neg = wrong.records.iter().filter(|r| r.name == "re" && r.status == Status::Fail).count();
    if neg == 0 || wrong.exit_code() != 1 {
        return fail("wrong ξ was not detected");
    }
    let consts = run(&["verify", "--suite", "bmw-constants", "--rep", "sp2", "--q", "2"]);
    for name in ["bmw-q0", "bmw-negative-powers"] {
        let recs: Vec<_> = consts.records.iter().filter(|r| r.name == name).collect();
        if recs.is_empty() || recs.iter().any(|r| r.status == Status::Fail) {
            return fail(format!("{name} not passing"));
        }
    }
    pass(format!(
        "ξ = 1/2 (a = q) and {} a = −1/q branches exact; wrong ξ fails {neg} samples; Q⁽⁰⁾ and n ≤ 3 consistent",
        realizable.len()
    ))
}

fn c9() -> Outcome {
    let mut n = 0;
    for rep in ["gl2", "sp2", "so3"] {
        let report = run(&["verify", "--suite", "cross-unitarity", "--rep", rep, "--samples", "3"]);
        let t = tally(&report, "cross-unitarity", |r| format!("{} y_sites={}", rep_a(r), param(r, "y_sites")));
        if let Err(e) = all_at_least(&t, 3) {
            return fail(e);
        }
        if t.len() < 4 {
            return fail(format!("{rep}: only {} (a, sites) groups", t.len()));
        }
        n += t.values().map(|v| v.0).sum::<usize>();
    }
    pass(format!("{n} exact samples, Y on 1 and 2 sites"))
}

const GL2_COMBOS: [(&str, &str); 4] =
    [("trivial", "trivial"), ("rational", "trivial"), ("evaluation", "trivial"), ("rational", "conjugated")];

fn chain(rep: &str, sites: &str, left: &str, right: &str) -> (Report, Duration) {
    let start = Instant::now();
    let r = run(&["chain", "--rep", rep, "--sites", sites, "--left", left, "--right", right, "--samples", "3"]);
    (r, start.elapsed())
}

fn c10() -> Outcome {
    let mut combos = Vec::new();
    for (l, r) in GL2_COMBOS {
        combos.push(("gl2", "3", l, r));
    }
    combos.push(("sp2", "2", "trivial", "trivial"));
    combos.push(("sp2", "2", "prop2", "conjugated"));
    let mut slowest = Duration::ZERO;
    for (rep, sites, l, r) in combos {
        let (report, t) = chain(rep, sites, l, r);
        slowest = slowest.max(t);
        if t > Duration::from_secs(120) {
            return fail(format!("{rep} {l}/{r} took {t:?}"));
        }
        for name in ["tau-commute", "t-commute"] {
            let tl = tally(&report, name, |r| format!("{} {}", rep_a(r), param(r, "left")));
            if let Err(e) = all_at_least(&tl, 3) {
                return fail(format!("{rep} {l}/{r} {name}: {e}"));
            }
        }
    }
    pass(format!("4 gl2 combos (3 sites) and 2 sp2 combos (2 sites); slowest {slowest:?}"))
}

fn c11() -> Outcome {
    let cases = [
        ("gl2", "3", "trivial", "trivial", "H1"),
        ("gl2", "3", "rational", "trivial", "H2"),
        ("sp2", "2", "trivial", "trivial", "H5"),
        ("gl2", "3", "small", "trivial", "H0"),
        ("gl2", "3", "rational", "conjugated", "H3"),
        ("sp2", "2", "prop2", "conjugated", "H7"),
    ];
    let mut seen = Vec::new();
    for (rep, sites, l, r, kind) in cases {
        let report =
            run(&["chain", "--rep", rep, "--sites", sites, "--left", l, "--right", r, "--kind", kind, "--samples", "3"]);
        let recs: Vec<_> = report.records.iter().filter(|x| x.name == "hamiltonian-commute").collect();
        if recs.is_empty() || recs.iter().any(|x| x.status != Status::Pass) {
            return fail(format!("{kind} on {rep} {l}/{r}"));
        }
        let zs = param(recs[0], "z").split(", ").count();
        if zs < 3 {
            return fail(format!("{kind}: only {zs} sample points"));
        }
        seen.push(kind);
    }
    pass(format!("[H, t(z)] = 0 at 3 points for {}", seen.join(", ")))
}

fn c12() -> Outcome {
    let report = run(&["spectrum", "--rep", "gl2", "--q", "2", "--sites", "2", "--kind", "H1", "--a", "q"]);
    let Some(rec) = report.records.iter().find(|r| r.name == "spectrum") else {
        return fail("no spectrum record");
    };
    let data = rec.data.as_ref().expect("spectrum data");
    let factored = data["factored"].as_str().unwrap_or("");
    if factored != "(t - 2)^3 (t + 1/2)" {
        return fail(format!("factored as {factored}"));
    }
    let mult = |root: &str| {
        data["rational_roots"]
            .as_array()
            .and_then(|a| a.iter().find(|e| e["root"] == root))
            .and_then(|e| e["multiplicity"].as_u64())
            .unwrap_or(0) as usize
    };
    let rep = by_name("gl2", &s(2, 1), AChoice::PlusQ).unwrap();
    let a2 = rank(&antisymmetrizer(&rep, 2).unwrap());
    if mult("-1/2") != a2 || mult("2") != 4 - a2 {
        return fail(format!("multiplicities {} and {} vs rank A_1→2 = {a2}", mult("2"), mult("-1/2")));
    }
    pass(format!("{factored}; multiplicity of −1/2 equals rank A_1→2 = {a2}"))
}

fn c13() -> Outcome {
    let rep = by_name("gl2", &s(2, 1), AChoice::PlusQ).unwrap();
    for (a, b) in [(s(3, 1), s(5, 2)), (s(1, 1), s(-1, 1)), (s(2, 7), s(0, 1))] {
        let l = Matrix::diag(&[a.clone(), b.clone()]);
        let res = constant_re_residual(&rep, &l).unwrap();
        if res.is_zero() {
            return fail(format!("diag({a}, {b}) passed"));
        }
    }
    let report = run(&["verify", "--suite", "constant-re", "--rep", "gl2"]);
    let ctl: Vec<_> = report.records.iter().filter(|r| r.name == "constant-re-negative-control").collect();
    if ctl.is_empty() || ctl.iter().any(|r| r.status != Status::Pass || r.residual_location.is_none()) {
        return fail("report control missing or without witness");
    }
    pass("residual nonzero for three diagonal L with α ≠ β, witness reported")
}

fn c14() -> Outcome {
    let args = ["verify", "--suite", "all", "--rep", "sp2", "--seeds", "1,2", "--samples", "3"];
    let a = run(&args).body();
    let b = run(&args).body();
    let chain_args = ["chain", "--rep", "gl2", "--sites", "2", "--left", "rational", "--right", "conjugated", "--seeds", "4"];
    let c = run(&chain_args).body();
    let d = run(&chain_args).body();
    if a != b || c != d {
        return fail("report bodies differ between runs");
    }
    pass(format!("identical bodies ({} and {} bytes)", a.len(), c.len()))
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 14] = [
        ("Hecke relation", c1),
        ("Yang–Baxter equation", c2),
        ("unitarity and closed forms", c3),
        ("antisymmetrizer height", c4),
        ("cross-unitarity constant b", c5),
        ("rational boundary reflection equation", c6),
        ("polynomial form of the evaluation boundary", c7),
        ("BMW boundary and constants", c8),
        ("cross-unitarity", c9),
        ("commuting transfer matrices", c10),
        ("Hamiltonian commutation", c11),
        ("free chain spectrum", c12),
        ("constant reflection equation negative control", c13),
        ("determinism", c14),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let out = f();
        let tag = if out.ok { "PASS" } else { "FAIL" };
        println!("criterion {:>2}: {tag} {name}: {} [{:.2?}]", i + 1, out.detail, start.elapsed());
        if !out.ok {
            failed += 1;
        }
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
