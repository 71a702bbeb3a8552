//! JSON encodings of scalars, matrices, polynomials, representations and boundaries.
//!
//! Scalars are strings in the `p/q+r/s*sqrt(d)` grammar; matrices are
//! `{dim, factors, entries}` with row-major entry strings.

use baxter_core::reflection::BoundarySolution;
use baxter_core::rep::Representation;
use baxter_core::{Matrix, Poly, Scalar};
use serde_json::{json, Value};

use crate::error::{CliError, Result};

pub fn scalar(s: &Scalar) -> Value {
    Value::String(s.to_string())
}

pub fn scalar_from(v: &Value) -> Result<Scalar> {
    let s = v.as_str().ok_or_else(|| CliError::Config(format!("expected a scalar string, got {v}")))?;
    Ok(s.parse()?)
}

pub fn matrix(m: &Matrix) -> Value {
    json!({
        "dim": m.dim(),
        "factors": m.factors(),
        "entries": m.entries().iter().map(scalar).collect::<Vec<_>>(),
    })
}

pub fn matrix_from(v: &Value) -> Result<Matrix> {
    let bad = |what: &str| CliError::Config(format!("matrix JSON: {what}"));
    let factors: Vec<usize> = v
        .get("factors")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("missing factors"))?
        .iter()
        .map(|f| f.as_u64().map(|n| n as usize).ok_or_else(|| bad("factor is not an integer")))
        .collect::<Result<_>>()?;
    let entries = v
        .get("entries")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("missing entries"))?
        .iter()
        .map(scalar_from)
        .collect::<Result<Vec<_>>>()?;
    let m = Matrix::new(&factors, entries)?;
    if let Some(d) = v.get("dim").and_then(Value::as_u64) {
        if d as usize != m.dim() {
            return Err(bad("dim disagrees with factors"));
        }
    }
    Ok(m)
}

/// Coefficients low to high plus the rendered form.
pub fn poly(p: &Poly) -> Value {
    json!({
        "coefficients": p.coeffs().iter().map(scalar).collect::<Vec<_>>(),
        "text": p.to_string(),
    })
}

pub fn representation(rep: &Representation, with_matrices: bool) -> Value {
    let mut v = json!({
        "name": rep.name(),
        "kind": format!("{:?}", rep.kind()).to_lowercase(),
        "n": rep.n(),
        "q": scalar(rep.q()),
        "lambda": scalar(rep.lambda()),
        "a": scalar(rep.a()),
        "a_choice": rep.a_choice().name(),
        "b": scalar(rep.b()),
        "d_trace": scalar(&rep.d_op().trace()),
    });
    if let Ok(nu) = rep.nu() {
        v["nu"] = scalar(nu);
    }
    if let Some(r) = rep.trace_ratio() {
        v["trace_ratio"] = scalar(r);
    }
    if with_matrices {
        v["r"] = matrix(rep.r());
        v["d"] = matrix(rep.d_op());
    }
    v
}

pub fn boundary(b: &BoundarySolution, with_l: bool) -> Value {
    let mut v = json!({
        "kind": b.kind.name(),
        "xi": scalar(&b.xi),
        "factors": b.factors(),
    });
    if !b.alpha.is_empty() {
        v["alpha"] = b.alpha.iter().map(scalar).collect();
    }
    if let Some(c) = &b.c {
        v["c"] = scalar(c);
    }
    if !b.q.is_empty() {
        v["Q"] = b.q.iter().map(scalar).collect();
    }
    if let Some(z) = &b.zeta {
        v["zeta"] = scalar(z);
    }
    if let Some(a) = &b.a_const {
        v["A"] = scalar(a);
    }
    if with_l {
        v["L"] = matrix(&b.l);
    }
    v
}
