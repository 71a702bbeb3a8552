//! Boundary selection by name.

use baxter_core::linalg::minimal_polynomial;
use baxter_core::reflection::{
    bmw_constants, bmw_deg2_boundary, bmw_xi, check_constant_re, double_braid_boundary, evaluation_boundary, sqrt_b,
    BoundarySolution, Deg2Case,
};
use baxter_core::rep::{Kind, Representation};
use baxter_core::{Matrix, Scalar};

use crate::error::{CliError, Result};

/// How `ξ` is chosen.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum XiSpec {
    /// Hecke: `ξ ∈ {1, 3/2}`; BMW: both roots of `ξ² = −ac/ν`.
    Auto,
    Value(Scalar),
    /// A generic value that is not a root of the BMW constraint.
    Wrong,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LeftSpec {
    Trivial,
    Rational(Option<Scalar>),
    Evaluation,
    Poly,
    Small,
    Prop2,
    Bmw2,
    Bmw4,
}

impl LeftSpec {
    pub fn parse(s: &str) -> Result<Self> {
        let spec = match s {
            "trivial" => LeftSpec::Trivial,
            "rational" => LeftSpec::Rational(None),
            "evaluation" => LeftSpec::Evaluation,
            "poly" => LeftSpec::Poly,
            "small" => LeftSpec::Small,
            "prop2" => LeftSpec::Prop2,
            "bmw2" => LeftSpec::Bmw2,
            "bmw4" => LeftSpec::Bmw4,
            other => match other.strip_prefix("rational:xi=") {
                Some(v) => LeftSpec::Rational(Some(
                    v.parse().map_err(|e| CliError::Config(format!("boundary {other:?}: {e}")))?,
                )),
                None => return Err(CliError::Config(format!("unknown left boundary {other:?}"))),
            },
        };
        Ok(spec)
    }

    pub fn name(&self) -> String {
        match self {
            LeftSpec::Trivial => "trivial".into(),
            LeftSpec::Rational(None) => "rational".into(),
            LeftSpec::Rational(Some(x)) => format!("rational:xi={x}"),
            LeftSpec::Evaluation => "evaluation".into(),
            LeftSpec::Poly => "poly".into(),
            LeftSpec::Small => "small".into(),
            LeftSpec::Prop2 => "prop2".into(),
            LeftSpec::Bmw2 => "bmw2".into(),
            LeftSpec::Bmw4 => "bmw4".into(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RightSpec {
    Trivial,
    Conjugated,
}

impl RightSpec {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "trivial" => Ok(RightSpec::Trivial),
            "conjugated" | "2case" => Ok(RightSpec::Conjugated),
            other => Err(CliError::Config(format!("unknown right boundary {other:?}"))),
        }
    }
}

fn s(p: i64, q: i64) -> Scalar {
    Scalar::from_frac(p, q)
}

/// A non-scalar constant solution on `V`, or the identity when none is known.
pub fn default_l(rep: &Representation) -> Matrix {
    let n = rep.n();
    let candidate = match (rep.kind(), n) {
        (Kind::Hecke, 2) => Matrix::from_fracs(&[2], &[&[(0, 1), (2, 1)], &[(5, 3), (-7, 2)]]).ok(),
        (Kind::Bmw, 2) => Matrix::from_fracs(&[2], &[&[(0, 1), (1, 1)], &[(1, 1), (1, 1)]]).ok(),
        _ => {
            let mut l = Matrix::zeros(&[n]);
            l.set(0, n - 1, s(1, 1));
            l.set(n - 1, 0, s(2, 1));
            l.set(n - 1, n - 1, s(1, 1));
            for i in 1..n - 1 {
                l.set(i, i, s(2, 1));
            }
            Some(l)
        }
    };
    candidate
        .filter(|l| check_constant_re(rep, l).unwrap_or(false))
        .unwrap_or_else(|| Matrix::identity(&[n]))
}

/// The evaluation-type constant solution on `V ⊗ W`.
pub fn evaluation_l(rep: &Representation) -> Result<Matrix> {
    match rep.kind() {
        Kind::Hecke => Ok(evaluation_boundary(rep.n(), rep.q())?.l),
        Kind::Bmw => Ok(double_braid_boundary(rep)),
    }
}

/// `diag(0, …, 0, 3)` with `α₁ = −3`.
pub fn small_l(rep: &Representation) -> Matrix {
    let n = rep.n();
    let mut d = vec![Scalar::zero(); n];
    d[n - 1] = s(3, 1);
    Matrix::diag(&d)
}

/// Constant solutions used for BMW boundaries.
pub fn bmw_candidates(rep: &Representation) -> Vec<(&'static str, Matrix)> {
    let mut out = vec![("identity", Matrix::identity(&[rep.n()]))];
    let d = default_l(rep);
    if !d.is_identity() {
        out.push(("numeric", d));
    }
    out.push(("double-braid", double_braid_boundary(rep)));
    out
}

/// Outcome of building a boundary: the usable branches, or why none exists.
pub type Branches = std::result::Result<Vec<(String, BoundarySolution)>, String>;

/// `ξ` candidates for a BMW boundary `L`.
pub fn bmw_xis(rep: &Representation, l: &Matrix, xi: &XiSpec) -> std::result::Result<Vec<Scalar>, String> {
    let c = bmw_constants(rep, l, 1).map_err(|e| e.to_string())?.c;
    let root = bmw_xi(rep, &c, true);
    match xi {
        XiSpec::Value(v) => Ok(vec![v.clone()]),
        XiSpec::Wrong => Ok(vec![wrong_xi(root.ok().as_ref())]),
        XiSpec::Auto => match root {
            Ok(r) => Ok(vec![r.clone(), -r]),
            Err(e) => Err(format!("ξ² = −ac/ν has no real root in a quadratic field: {e}")),
        },
    }
}

/// A generic value distinct from `±ξ`.
pub fn wrong_xi(true_xi: Option<&Scalar>) -> Scalar {
    let pick = s(7, 3);
    match true_xi {
        Some(t) if pick == *t || pick == -t.clone() => s(11, 5),
        _ => pick,
    }
}

fn hecke_xis(inline: Option<&Scalar>, xi: &XiSpec) -> Vec<Scalar> {
    if let Some(v) = inline {
        return vec![v.clone()];
    }
    match xi {
        XiSpec::Value(v) => vec![v.clone()],
        XiSpec::Wrong => vec![wrong_xi(None)],
        XiSpec::Auto => vec![s(1, 1), s(3, 2)],
    }
}

fn rational_branches(rep: &Representation, label: &str, l: Matrix, inline: Option<&Scalar>, xi: &XiSpec, poly: bool) -> Branches {
    let xis = match (rep.kind(), inline) {
        (Kind::Hecke, _) | (_, Some(_)) => hecke_xis(inline, xi),
        (Kind::Bmw, None) => bmw_xis(rep, &l, xi)?,
    };
    Ok(xis
        .into_iter()
        .map(|x| {
            let sol = if poly {
                BoundarySolution::polynomial(l.clone(), x.clone())
            } else {
                BoundarySolution::rational(l.clone(), x.clone())
            };
            (format!("{label} xi={x}"), sol)
        })
        .collect())
}

/// All branches of a named left boundary.
pub fn left_branches(rep: &Representation, spec: &LeftSpec, xi: &XiSpec) -> Branches {
    let n = rep.n();
    match spec {
        LeftSpec::Trivial => Ok(vec![("trivial".into(), BoundarySolution::trivial(&[n]))]),
        LeftSpec::Rational(inline) => rational_branches(rep, "rational", default_l(rep), inline.as_ref(), xi, false),
        LeftSpec::Poly => rational_branches(rep, "poly", default_l(rep), None, xi, true),
        LeftSpec::Evaluation => {
            let l = evaluation_l(rep).map_err(|e| e.to_string())?;
            rational_branches(rep, "evaluation", l, None, xi, false)
        }
        LeftSpec::Small => {
            let zeta = match xi {
                XiSpec::Value(v) => v.clone(),
                _ => s(1, 1),
            };
            let sol = BoundarySolution::small(small_l(rep), vec![s(-3, 1)], zeta.clone()).map_err(|e| e.to_string())?;
            Ok(vec![(format!("small zeta={zeta}"), sol)])
        }
        LeftSpec::Prop2 => {
            if rep.kind() != Kind::Bmw {
                return Err("prop2 boundaries need a BMW representation".into());
            }
            let mut reasons = Vec::new();
            for (label, l) in bmw_candidates(rep) {
                match rational_branches(rep, &format!("prop2 {label}"), l, None, xi, false) {
                    Ok(b) => return Ok(b),
                    Err(e) => reasons.push(format!("{label}: {e}")),
                }
            }
            Err(reasons.join("; "))
        }
        LeftSpec::Bmw2 => {
            if rep.kind() != Kind::Bmw {
                return Err("bmw2 boundaries need a BMW representation".into());
            }
            let a_const = match xi {
                XiSpec::Value(v) => v.clone(),
                _ => s(5, 3),
            };
            for (label, l) in bmw_candidates(rep) {
                if minimal_polynomial(&l).degree() != Some(2) {
                    continue;
                }
                for (case, cname) in [(Deg2Case::FreeQ, "1a"), (Deg2Case::FreeAlpha0, "1b")] {
                    if let Ok(sol) = bmw_deg2_boundary(rep, &l, case, &a_const) {
                        return Ok(vec![(format!("bmw2 {label} case={cname} A={a_const}"), sol)]);
                    }
                }
            }
            Err("no candidate L satisfies the degree-2 constraints".into())
        }
        LeftSpec::Bmw4 => Err("no constant solution with a quartic minimal polynomial is available".into()),
    }
}

/// `(L̃, ξ₂, b^{1/2})` for the conjugated right boundary.
pub fn right_data(rep: &Representation, xi2: Option<&Scalar>) -> std::result::Result<(Matrix, Scalar, Scalar), String> {
    let b_half = sqrt_b(rep.b()).map_err(|e| e.to_string())?;
    match rep.kind() {
        Kind::Hecke => Ok((default_l(rep), xi2.cloned().unwrap_or_else(Scalar::one), b_half)),
        Kind::Bmw => {
            let mut reasons = Vec::new();
            for (label, l) in bmw_candidates(rep) {
                if l.factors().len() != 1 {
                    continue;
                }
                let spec = match xi2 {
                    Some(v) => XiSpec::Value(v.clone()),
                    None => XiSpec::Auto,
                };
                match bmw_xis(rep, &l, &spec) {
                    Ok(xs) => return Ok((l, xs[0].clone(), b_half)),
                    Err(e) => reasons.push(format!("{label}: {e}")),
                }
            }
            Err(reasons.join("; "))
        }
    }
}

/// Every BMW candidate `L` with its `ξ` branches (or why it has none).
pub fn prop2_all(rep: &Representation, xi: &XiSpec) -> Vec<(String, Branches)> {
    bmw_candidates(rep)
        .into_iter()
        .map(|(label, l)| {
            let name = format!("prop2 {label}");
            let b = rational_branches(rep, &name, l, None, xi, false);
            (name, b)
        })
        .collect()
}
