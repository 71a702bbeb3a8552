//! Baxterized R-matrices and the Yang–Baxter, unitarity and cross-unitarity checks.

use alloc::format;
use alloc::vec::Vec;

use crate::check::{compare, Residual};
use crate::error::{Error, Result};
use crate::linalg::{embed, inverse, kron, Matrix};
use crate::rep::{Kind, Representation};
use crate::scalar::Scalar;

/// `R̂(x) = R̂ − x·R̂⁻¹`.
pub fn baxt_hecke(rep: &Representation, x: &Scalar) -> Matrix {
    rep.r() - &rep.r_inv().scale(x)
}

/// `(a x⁻¹ − a⁻¹)(R̂ + a x)(R̂ + a x⁻¹)⁻¹`, valid for `x ∉ {aq, −aq⁻¹}`.
pub fn baxt_product_form(rep: &Representation, x: &Scalar) -> Result<Matrix> {
    let a = rep.a();
    let xi = x.inv().map_err(|_| Error::Pole("x = 0".into()))?;
    let pref = &(a * &xi) - &a.inv()?;
    let num = rep.r().shift(&(a * x));
    let den = inverse(&rep.r().shift(&(a * &xi)))
        .map_err(|_| Error::Pole(format!("R̂ + a/x is singular at x = {x}")))?;
    Ok((&num * &den).scale(&pref))
}

fn bmw_coefficient(rep: &Representation, x: &Scalar) -> Result<Scalar> {
    // λ(ν+a)/(ν + a/x) written as λ(ν+a)x/(νx + a)
    let nu = rep.nu()?;
    let a = rep.a();
    let den = &(nu * x) + a;
    if den.is_zero() {
        return Err(Error::Pole(format!("ν + a/x = 0 at x = {x}")));
    }
    Ok(&(&(rep.lambda() * &(nu + a)) * x) / &den)
}

/// BMW baxterization `(R̂ − xR̂⁻¹) + λ(ν+a)/(ν + a x⁻¹)·K̂`.
pub fn baxt_bmw(rep: &Representation, x: &Scalar) -> Result<Matrix> {
    let c = bmw_coefficient(rep, x)?;
    Ok(&baxt_hecke(rep, x) + &rep.khat().scale(&c))
}

/// First closed form: `(ν + a x⁻¹)⁻¹ (a(x⁻¹ − 1)R̂ + ν(1 − x)R̂⁻¹ + λ(a + ν))`.
pub fn baxt_bmw_first_form(rep: &Representation, x: &Scalar) -> Result<Matrix> {
    let nu = rep.nu()?;
    let a = rep.a();
    let xi = x.inv().map_err(|_| Error::Pole("x = 0".into()))?;
    let den = nu + &(a * &xi);
    if den.is_zero() {
        return Err(Error::Pole(format!("ν + a/x = 0 at x = {x}")));
    }
    let one = Scalar::one();
    let m = &(&rep.r().scale(&(a * &(&xi - &one)))
        + &rep.r_inv().scale(&(nu * &(&one - x))))
        .shift(&(rep.lambda() * &(a + nu)));
    Ok(m.scale(&den.inv()?))
}

/// `R̂(x)` for the representation's algebra type.
pub fn baxt(rep: &Representation, x: &Scalar) -> Result<Matrix> {
    match rep.kind() {
        Kind::Hecke => Ok(baxt_hecke(rep, x)),
        Kind::Bmw => baxt_bmw(rep, x),
    }
}

/// Unitary normalization `σ̃(x; a) = R̂(x)/(a x − a⁻¹)`.
pub fn baxt_norm(rep: &Representation, x: &Scalar) -> Result<Matrix> {
    let a = rep.a();
    let den = &(a * x) - &a.inv()?;
    if den.is_zero() {
        return Err(Error::Pole(format!("a x − a⁻¹ = 0 at x = {x}")));
    }
    Ok(baxt(rep, x)?.scale(&den.inv()?))
}

/// Pole locations in `x` for [`baxt`] and [`baxt_norm`].
pub fn domain_exclusions(rep: &Representation) -> Vec<Scalar> {
    let a = rep.a();
    let mut out = alloc::vec![Scalar::zero()];
    if let Ok(p) = a.pow(-2) {
        out.push(p);
    }
    if let Ok(nu) = rep.nu() {
        out.push(-(a / nu));
    }
    out
}

/// `R̂₁(x)R̂₂(xy)R̂₁(y) = R̂₂(y)R̂₁(xy)R̂₂(x)` on `V^{⊗3}`.
pub fn ybe_residual(rep: &Representation, x: &Scalar, y: &Scalar) -> Result<Residual> {
    let shape = rep.shape(3);
    let xy = x * y;
    let (rx, ry, rxy) = (baxt(rep, x)?, baxt(rep, y)?, baxt(rep, &xy)?);
    let e = |m: &Matrix, site| embed(m, site, &shape);
    let lhs = &(&e(&rx, 1)? * &e(&rxy, 2)?) * &e(&ry, 1)?;
    let rhs = &(&e(&ry, 2)? * &e(&rxy, 1)?) * &e(&rx, 2)?;
    compare(&lhs, &rhs)
}

pub fn check_ybe(rep: &Representation, x: &Scalar, y: &Scalar) -> Result<bool> {
    Ok(ybe_residual(rep, x, y)?.is_zero())
}

/// `σ̃(x)σ̃(x⁻¹) = I`.
pub fn unitarity_residual(rep: &Representation, x: &Scalar) -> Result<Residual> {
    let xi = x.inv().map_err(|_| Error::Pole("x = 0".into()))?;
    let p = &baxt_norm(rep, x)? * &baxt_norm(rep, &xi)?;
    compare(&p, &Matrix::identity(p.factors()))
}

pub fn check_unitarity(rep: &Representation, x: &Scalar) -> Result<bool> {
    Ok(unitarity_residual(rep, x)?.is_zero())
}

/// Agreement of the closed forms of the baxterized element at `x`.
pub fn forms_residual(rep: &Representation, x: &Scalar) -> Result<Residual> {
    let main = baxt(rep, x)?;
    let product = baxt_product_form(rep, x)?;
    let mut res = compare(&main, &product)?;
    if rep.kind() == Kind::Bmw {
        res = res.and(compare(&main, &baxt_bmw_first_form(rep, x)?)?);
    }
    Ok(res)
}

/// `R̂(x)R̂(y) = R̂(y)R̂(x)` on one pair of factors.
pub fn commuting_residual(rep: &Representation, x: &Scalar, y: &Scalar) -> Result<Residual> {
    let (rx, ry) = (baxt(rep, x)?, baxt(rep, y)?);
    compare(&(&rx * &ry), &(&ry * &rx))
}

/// `η(x)`: `1 − x` (Hecke) or `(1 − x)(aνx + 1)/(νx + a)` (BMW).
pub fn eta(rep: &Representation, x: &Scalar) -> Result<Scalar> {
    let one = Scalar::one();
    let base = &one - x;
    match rep.kind() {
        Kind::Hecke => Ok(base),
        Kind::Bmw => {
            let nu = rep.nu()?;
            let a = rep.a();
            let den = &(nu * x) + a;
            if den.is_zero() {
                return Err(Error::Pole(format!("νx + a = 0 at x = {x}")));
            }
            Ok(&(&base * &(&(&(a * nu) * x) + &one)) / &den)
        }
    }
}

/// Cross-unitarity partner `z = b/x` (Hecke `b = D⁺/D⁻`, BMW `b = a²/ν²`).
pub fn partner(rep: &Representation, x: &Scalar) -> Result<Scalar> {
    rep.b().try_div(x).map_err(|_| Error::Pole("x = 0".into()))
}

/// `Tr_{𝒟(n+1)}(R̂ₙ(x)·Y·R̂ₙ(z)) = η(x)η(z)·Tr_{𝒟(n)}(Y)` with `Y` on sites `1..n`.
pub fn cross_unitarity_residual(rep: &Representation, y: &Matrix, x: &Scalar) -> Result<Residual> {
    let n = y.factors().len();
    if n == 0 || y.factors().iter().any(|&d| d != rep.n()) {
        return Err(Error::Shape(format!("Y must act on copies of V, got factors {:?}", y.factors())));
    }
    let z = partner(rep, x)?;
    let shape = rep.shape(n + 1);
    let ye = embed(y, 1, &shape)?;
    let rx = embed(&baxt(rep, x)?, n, &shape)?;
    let rz = embed(&baxt(rep, &z)?, n, &shape)?;
    let lhs = rep.qtrace(&(&(&rx * &ye) * &rz))?;
    let coeff = &eta(rep, x)? * &eta(rep, &z)?;
    let rhs = kron(&rep.qtrace(y)?, &Matrix::identity(&[rep.n()])).scale(&coeff);
    compare(&lhs, &rhs)
}

pub fn check_cross_unitarity(rep: &Representation, y: &Matrix, x: &Scalar) -> Result<bool> {
    Ok(cross_unitarity_residual(rep, y, x)?.is_zero())
}
