//! Concrete R-matrix representations: Drinfeld–Jimbo gl(N) (Hecke type) and
//! the orthogonal/symplectic R-matrices (BMW type).

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::baxter;
use crate::error::{Error, Result};
use crate::linalg::{
    embed, inverse, kron, partial_trace, permutation, rank, solve, weighted_partial_trace,
    Matrix,
};
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Kind {
    Hecke,
    Bmw,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Gl,
    So,
    Sp,
}

/// Root of `a − a⁻¹ = λ` used for baxterization.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AChoice {
    /// `a = q`
    PlusQ,
    /// `a = −q⁻¹`
    MinusInvQ,
}

impl AChoice {
    pub fn value(self, q: &Scalar) -> Scalar {
        match self {
            AChoice::PlusQ => q.clone(),
            AChoice::MinusInvQ => -(q.inv().expect("q is nonzero")),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            AChoice::PlusQ => "q",
            AChoice::MinusInvQ => "-1/q",
        }
    }

    pub fn other(self) -> AChoice {
        match self {
            AChoice::PlusQ => AChoice::MinusInvQ,
            AChoice::MinusInvQ => AChoice::PlusQ,
        }
    }
}

/// An R-matrix package. Immutable; every invariant is checked by the constructors.
#[derive(Debug, Clone)]
pub struct Representation {
    name: String,
    kind: Kind,
    family: Family,
    n: usize,
    q: Scalar,
    lambda: Scalar,
    a_choice: AChoice,
    a: Scalar,
    nu: Option<Scalar>,
    r: Matrix,
    r_inv: Matrix,
    f: Matrix,
    d_op: Matrix,
    khat: Matrix,
    d0: Scalar,
    d_plus: Scalar,
    d_minus: Scalar,
    b: Scalar,
    trace_ratio: Option<Scalar>,
}

impl Representation {
    pub fn name(&self) -> &str {
        &self.name
    }
    pub fn kind(&self) -> Kind {
        self.kind
    }
    pub fn family(&self) -> Family {
        self.family
    }
    /// Dimension of the vector space `V`.
    pub fn n(&self) -> usize {
        self.n
    }
    pub fn q(&self) -> &Scalar {
        &self.q
    }
    pub fn lambda(&self) -> &Scalar {
        &self.lambda
    }
    pub fn a_choice(&self) -> AChoice {
        self.a_choice
    }
    pub fn a(&self) -> &Scalar {
        &self.a
    }
    /// `ν`; only BMW representations carry it.
    pub fn nu(&self) -> Result<&Scalar> {
        self.nu.as_ref().ok_or_else(|| Error::Unsupported("ν is defined for BMW representations only".into()))
    }
    /// `R̂` on `V ⊗ V`.
    pub fn r(&self) -> &Matrix {
        &self.r
    }
    pub fn r_inv(&self) -> &Matrix {
        &self.r_inv
    }
    /// Skew inverse `F`.
    pub fn f(&self) -> &Matrix {
        &self.f
    }
    /// Quantum-trace weight `𝒟 = Tr₂ F`.
    pub fn d_op(&self) -> &Matrix {
        &self.d_op
    }
    /// `K̂` (zero for Hecke representations).
    pub fn khat(&self) -> &Matrix {
        &self.khat
    }
    pub fn d0(&self) -> &Scalar {
        &self.d0
    }
    pub fn d_plus(&self) -> &Scalar {
        &self.d_plus
    }
    pub fn d_minus(&self) -> &Scalar {
        &self.d_minus
    }
    /// Partner-point constant: `D⁺/D⁻` (Hecke) or `a²/ν²` (BMW).
    pub fn b(&self) -> &Scalar {
        &self.b
    }
    /// Ratio between the `K̂`-sandwich trace and the `𝒟`-trace (BMW only).
    pub fn trace_ratio(&self) -> Option<&Scalar> {
        self.trace_ratio.as_ref()
    }

    /// Same matrices, other baxterization root.
    pub fn with_a_choice(&self, a_choice: AChoice) -> Result<Representation> {
        let mut rep = self.clone();
        rep.a_choice = a_choice;
        rep.a = a_choice.value(&self.q);
        if let Some(nu) = &self.nu {
            rep.b = (&rep.a / nu).pow(2)?;
        }
        Ok(rep)
    }

    /// Shape `[N; k]`.
    pub fn shape(&self, k: usize) -> Vec<usize> {
        vec![self.n; k]
    }

    /// `R̂` on sites `(site, site+1)` of `V^{⊗k}`.
    pub fn r_at(&self, site: usize, k: usize) -> Result<Matrix> {
        embed(&self.r, site, &self.shape(k))
    }

    pub fn khat_at(&self, site: usize, k: usize) -> Result<Matrix> {
        embed(&self.khat, site, &self.shape(k))
    }

    /// Quantum trace over the last factor: `Tr_k(𝒟_k E)`.
    pub fn qtrace(&self, e: &Matrix) -> Result<Matrix> {
        let k = e.factors().len();
        weighted_partial_trace(e, k, &self.d_op)
    }
}

pub(crate) fn check_q(q: &Scalar) -> Result<()> {
    if q.is_zero() || q.is_one() || (-q).is_one() {
        return Err(Error::Degenerate(format!("q = {q} (q must avoid 0 and ±1)")));
    }
    Ok(())
}

fn add_term(m: &mut Matrix, n: usize, (i, j, k, l): (usize, usize, usize, usize), c: &Scalar) {
    let row = i * n + k;
    let col = j * n + l;
    let v = m.get(row, col) + c;
    m.set(row, col, v);
}

/// The Drinfeld–Jimbo gl(N) matrix `R̂` without parameter checks (so `q = 1` gives `P`).
pub fn drinfeld_jimbo(n: usize, q: &Scalar) -> Matrix {
    let lambda = q - &q.inv().unwrap_or_else(|_| Scalar::zero());
    let mut m = Matrix::zeros(&[n, n]);
    for i in 0..n {
        add_term(&mut m, n, (i, i, i, i), q);
        for j in 0..n {
            if i != j {
                add_term(&mut m, n, (i, j, j, i), &Scalar::one());
            }
            if j > i {
                add_term(&mut m, n, (i, i, j, j), &lambda);
            }
        }
    }
    m
}

/// Twice the (gauged) Weyl vector and the sign vector for the SO/Sp R-matrix.
fn rho_and_eps(family: Family, n: usize) -> (Vec<i64>, Vec<i64>) {
    let h = (n / 2) as i64;
    match family {
        Family::Sp => {
            let rho = (0..h).map(|i| 2 * (h - i)).chain((0..h).map(|i| -2 * (i + 1))).collect();
            let eps = (0..n).map(|i| if (i as i64) < h { 1 } else { -1 }).collect();
            (rho, eps)
        }
        _ if n.is_multiple_of(2) => {
            let rho = (0..h).map(|i| 2 * (h - 1 - i)).chain((0..h).map(|i| -2 * i)).collect();
            (rho, vec![1; n])
        }
        _ => {
            // middle entry 1 instead of 0: a diagonal gauge keeping all entries rational
            let rho = (0..h)
                .map(|i| 2 * h - 1 - 2 * i)
                .chain(core::iter::once(1))
                .chain((0..h).map(|i| -(1 + 2 * i)))
                .collect();
            (rho, vec![1; n])
        }
    }
}

/// `R̂ = P·R` for the standard SO_q(N) / Sp_q(N) R-matrix in the vector representation.
pub fn orthosymplectic(family: Family, n: usize, q: &Scalar) -> Result<Matrix> {
    let qi = q.inv()?;
    let lambda = q - &qi;
    let (rho, eps) = rho_and_eps(family, n);
    let prime = |i: usize| n - 1 - i;
    let mut r = Matrix::zeros(&[n, n]);
    for i in 0..n {
        for j in 0..n {
            let c = if i == j {
                if i != prime(i) { q.clone() } else { Scalar::one() }
            } else if j != prime(i) {
                Scalar::one()
            } else {
                qi.clone()
            };
            add_term(&mut r, n, (i, i, j, j), &c);
        }
    }
    for i in 0..n {
        for j in 0..i {
            add_term(&mut r, n, (i, j, j, i), &lambda);
            let ex = (rho[i] - rho[j]) / 2;
            let sign = Scalar::from_int(eps[i] * eps[j]);
            let c = -(&(&lambda * &q.pow(ex as i32)?) * &sign);
            add_term(&mut r, n, (i, j, prime(i), prime(j)), &c);
        }
    }
    Ok(&permutation(n) * &r)
}

/// `K̂ = I − (R̂ − R̂⁻¹)/λ`.
pub fn kappa_of(r: &Matrix, lambda: &Scalar) -> Result<Matrix> {
    if lambda.is_zero() {
        return Err(Error::Degenerate("λ = 0".into()));
    }
    let ri = inverse(r)?;
    let diff = r.try_sub(&ri)?.scale(&lambda.inv()?);
    Matrix::identity(r.factors()).try_sub(&diff)
}

/// Solves `Tr₂(F₁₂R̂₂₃) = P₁₃` for the skew inverse and returns `(F, 𝒟 = Tr₂F)`.
///
/// Also checks the companion identity `Tr₂(R̂₁₂F₂₃) = P₁₃`.
pub fn skew_inverse(r: &Matrix) -> Result<(Matrix, Matrix)> {
    let fs = r.factors();
    if fs.len() != 2 || fs[0] != fs[1] {
        return Err(Error::Shape(format!("skew inverse needs factors [N, N], got {fs:?}")));
    }
    let n = fs[0];
    let nn = n * n;
    // unknowns x[(m,k)] = F[(i1,m),(j1,k)], equations indexed by (i3,j3)
    let c = Matrix::from_fn(&[nn], |row, col| {
        let (i3, j3) = (row / n, row % n);
        let (m, k) = (col / n, col % n);
        r.get(k * n + i3, m * n + j3).clone()
    });
    let rhs: Vec<Vec<Scalar>> = (0..nn)
        .map(|row| {
            let (i3, j3) = (row / n, row % n);
            (0..nn)
                .map(|col| {
                    let (i1, j1) = (col / n, col % n);
                    if i1 == j3 && i3 == j1 { Scalar::one() } else { Scalar::zero() }
                })
                .collect()
        })
        .collect();
    let x = solve(&c, &rhs).map_err(|e| match e {
        Error::Singular { .. } => Error::NotSkewInvertible,
        other => other,
    })?;
    let f = Matrix::from_fn(&[n, n], |row, col| {
        let (i1, m) = (row / n, row % n);
        let (j1, k) = (col / n, col % n);
        x[m * n + k][i1 * n + j1].clone()
    });
    let shape = [n, n, n];
    let lhs = partial_trace(&(&embed(&f, 1, &shape)? * &embed(r, 2, &shape)?), 2)?;
    let companion = partial_trace(&(&embed(r, 1, &shape)? * &embed(&f, 2, &shape)?), 2)?;
    let target = permutation(n);
    if lhs != target || companion != target {
        return Err(Error::Construction("skew-inverse identities fail".into()));
    }
    let d = partial_trace(&f, 2)?;
    Ok((f, d))
}

fn check(cond: bool, what: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Construction(format!("{what} fails")))
    }
}

/// Coefficient `s` with `Tr_{𝒟,2}(X) = s·I`.
fn trace_coefficient(x: &Matrix, d: &Matrix, what: &str) -> Result<Scalar> {
    weighted_partial_trace(x, 2, d)?
        .scalar_multiple_of_identity()
        .ok_or_else(|| Error::Construction(format!("{what} is not a multiple of the identity")))
}

fn braid_holds(r: &Matrix, n: usize) -> Result<bool> {
    let shape = [n, n, n];
    let r1 = embed(r, 1, &shape)?;
    let r2 = embed(r, 2, &shape)?;
    Ok(&(&r1 * &r2) * &r1 == &(&r2 * &r1) * &r2)
}

/// Hecke representation from the Drinfeld–Jimbo gl(N) R-matrix.
pub fn build_gl_hecke(n: usize, q: &Scalar, a_choice: AChoice) -> Result<Representation> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("gl(N) needs N ≥ 2, got {n}")));
    }
    check_q(q)?;
    let lambda = q - &q.inv()?;
    let r = drinfeld_jimbo(n, q);
    let id = Matrix::identity(&[n, n]);
    check(&r * &r == (&r.scale(&lambda) + &id), "Hecke relation R̂² = λR̂ + I")?;
    check(braid_holds(&r, n)?, "braid relation")?;
    let r_inv = inverse(&r)?;
    let (f, d_op) = skew_inverse(&r)?;
    let d0 = d_op.trace();
    let d_plus = trace_coefficient(&r, &d_op, "Tr_𝒟(R̂)")?;
    let d_minus = trace_coefficient(&r_inv, &d_op, "Tr_𝒟(R̂⁻¹)")?;
    check(d_plus.is_one(), "D⁺ = 1")?;
    check(d_minus == &Scalar::one() - &(&lambda * &d0), "D⁻ = 1 − λ Tr 𝒟")?;
    let b = (&Scalar::one() - &(&lambda * &d0)).inv()?;
    check(b == &d_plus / &d_minus, "b = D⁺/D⁻")?;
    Ok(Representation {
        name: format!("gl{n}"),
        kind: Kind::Hecke,
        family: Family::Gl,
        n,
        q: q.clone(),
        a: a_choice.value(q),
        a_choice,
        lambda,
        nu: None,
        khat: Matrix::zeros(&[n, n]),
        r,
        r_inv,
        f,
        d_op,
        d0,
        d_plus,
        d_minus,
        b,
        trace_ratio: None,
    })
}

/// `ν` for the SO(N) / Sp(N) series.
pub fn nu_for(family: Family, size: usize, q: &Scalar) -> Result<Scalar> {
    match family {
        Family::So => q.pow(1 - size as i32),
        Family::Sp => Ok(-q.pow(-1 - size as i32)?),
        Family::Gl => Err(Error::Unsupported("ν is not defined for gl(N)".into())),
    }
}

/// BMW representation from the SO_q(N) or Sp_q(N) R-matrix; every BMW relation
/// is verified before the package is returned.
pub fn build_bmw(family: Family, size: usize, q: &Scalar, a_choice: AChoice) -> Result<Representation> {
    match family {
        Family::So if size >= 3 => {}
        Family::Sp if size >= 2 && size.is_multiple_of(2) => {}
        Family::Gl => return Err(Error::InvalidArgument("gl(N) is Hecke type".into())),
        _ => return Err(Error::InvalidArgument(format!("invalid size {size} for {family:?}"))),
    }
    check_q(q)?;
    let n = size;
    let qi = q.inv()?;
    let lambda = q - &qi;
    let nu = nu_for(family, size, q)?;
    let r = orthosymplectic(family, n, q)?;
    let r_inv = inverse(&r)?;
    let khat = kappa_of(&r, &lambda)?;
    let id = Matrix::identity(&[n, n]);
    let cubic = &(&r.shift(&-q) * &r.shift(&qi)) * &r.shift(&-&nu);
    check(cubic.is_zero(), "cubic (R̂ − q)(R̂ + q⁻¹)(R̂ − ν) = 0")?;
    let nk = khat.scale(&nu);
    check(&khat * &r == nk && &r * &khat == nk, "K̂R̂ = R̂K̂ = νK̂")?;
    check(&r - &r_inv == (&id - &khat).scale(&lambda), "R̂ − R̂⁻¹ = λ(I − K̂)")?;
    check(braid_holds(&r, n)?, "braid relation")?;
    let shape = [n, n, n];
    let k2 = embed(&khat, 2, &shape)?;
    let k1 = embed(&khat, 1, &shape)?;
    let r1 = embed(&r, 1, &shape)?;
    let r1i = embed(&r_inv, 1, &shape)?;
    check(&(&k2 * &r1) * &k2 == k2.scale(&nu.inv()?), "K̂₂R̂₁K̂₂ = ν⁻¹K̂₂")?;
    check(&(&k2 * &r1i) * &k2 == k2.scale(&nu), "K̂₂R̂₁⁻¹K̂₂ = νK̂₂")?;
    check(&(&k1 * &k2) * &k1 == k1, "K̂₁K̂₂K̂₁ = K̂₁")?;
    check(rank(&khat) == 1, "rank K̂ = 1")?;
    let (f, d_op) = skew_inverse(&r)?;
    let d0 = d_op.trace();
    let d_plus = trace_coefficient(&r, &d_op, "Tr_𝒟(R̂)")?;
    let d_minus = trace_coefficient(&r_inv, &d_op, "Tr_𝒟(R̂⁻¹)")?;
    let a = a_choice.value(q);
    let b = (&a / &nu).pow(2)?;
    let trace_ratio = sandwich_trace_ratio(&khat, &d_op, &nu, n)?;
    let prefix = match family {
        Family::So => "so",
        _ => "sp",
    };
    Ok(Representation {
        name: format!("{prefix}{n}"),
        kind: Kind::Bmw,
        family,
        n,
        q: q.clone(),
        lambda,
        a_choice,
        a,
        nu: Some(nu),
        r,
        r_inv,
        f,
        d_op,
        khat,
        d0,
        d_plus,
        d_minus,
        b,
        trace_ratio: Some(trace_ratio),
    })
}

/// Compares `K̂Y₁K̂ = ν⁻¹·t(Y)·K̂` with `Tr(𝒟Y)` over all matrix units `Y`
/// and returns the common ratio `t(Y)/Tr(𝒟Y)`.
fn sandwich_trace_ratio(khat: &Matrix, d: &Matrix, nu: &Scalar, n: usize) -> Result<Scalar> {
    let mut ratio: Option<Scalar> = None;
    let id = Matrix::identity(&[n]);
    for i in 0..n {
        for j in 0..n {
            let y = kron(&Matrix::unit(n, i, j), &id);
            let s = &(khat * &y) * khat;
            let t = if s.is_zero() {
                Scalar::zero()
            } else {
                let c = s
                    .ratio_to(khat)
                    .ok_or_else(|| Error::Construction("K̂Y₁K̂ is not proportional to K̂".into()))?;
                nu * &c
            };
            let skew = d.get(j, i).clone();
            match (skew.is_zero(), t.is_zero()) {
                (true, true) => {}
                (true, false) | (false, true) => {
                    return Err(Error::Construction("sandwich and 𝒟-traces disagree".into()))
                }
                (false, false) => {
                    let r = &t / &skew;
                    match &ratio {
                        Some(prev) if *prev != r => {
                            return Err(Error::Construction("trace ratio is not constant".into()))
                        }
                        _ => ratio = Some(r),
                    }
                }
            }
        }
    }
    ratio.ok_or_else(|| Error::Construction("𝒟 vanishes".into()))
}

/// Names understood by [`by_name`].
pub const REGISTRY: &[&str] = &["gl2", "gl3", "gl4", "sp2", "sp4", "so3", "so4", "so5"];

/// Looks up a representation by its registry name.
pub fn by_name(name: &str, q: &Scalar, a_choice: AChoice) -> Result<Representation> {
    let (family, digits) = if let Some(d) = name.strip_prefix("gl") {
        (Family::Gl, d)
    } else if let Some(d) = name.strip_prefix("sp") {
        (Family::Sp, d)
    } else if let Some(d) = name.strip_prefix("so") {
        (Family::So, d)
    } else {
        return Err(Error::InvalidArgument(format!("unknown representation {name:?}")));
    };
    let size: usize = digits
        .parse()
        .map_err(|_| Error::InvalidArgument(format!("unknown representation {name:?}")))?;
    match family {
        Family::Gl => build_gl_hecke(size, q, a_choice),
        _ => build_bmw(family, size, q, a_choice),
    }
}

/// `A_{1→k}` on `V^{⊗k}`, built with `a = q`.
pub fn antisymmetrizer(rep: &Representation, k: usize) -> Result<Matrix> {
    if k == 0 {
        return Err(Error::InvalidArgument("antisymmetrizer index starts at 1".into()));
    }
    let rep = rep.with_a_choice(AChoice::PlusQ)?;
    let n = rep.n();
    let mut a = Matrix::identity(&[n]);
    for step in 1..k {
        let shape = rep.shape(step + 1);
        let x = rep.a().pow(2 * step as i32)?;
        let sigma = baxter::baxt_norm(&rep, &x).map_err(|e| match e {
            Error::Pole(_) => Error::Degenerate(format!(
                "q = {} makes the normalization vanish at x = a^{}",
                rep.q(),
                2 * step
            )),
            other => other,
        })?;
        let sig = embed(&sigma, step, &shape)?;
        let prev = embed(&a, 1, &shape)?;
        a = &(&prev * &sig) * &prev;
    }
    Ok(a)
}

/// Least `h ≤ k_max` with `A_{1→h+1} = 0` and `rank A_{1→h} = 1`.
pub fn height(rep: &Representation, k_max: usize) -> Result<Option<usize>> {
    let mut prev = antisymmetrizer(rep, 1)?;
    for h in 1..=k_max {
        let next = antisymmetrizer(rep, h + 1)?;
        if next.is_zero() {
            return Ok((rank(&prev) == 1).then_some(h));
        }
        prev = next;
    }
    Ok(None)
}

/// Short human-readable summary.
pub fn describe(rep: &Representation) -> String {
    let mut s = format!("{} q={} a={} λ={}", rep.name(), rep.q(), rep.a(), rep.lambda());
    if let Ok(nu) = rep.nu() {
        s.push_str(" ν=");
        s.push_str(&nu.to_string());
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(p: i64, q: i64) -> Scalar {
        Scalar::from_frac(p, q)
    }

    #[test]
    fn gl2_matrix_entries() {
        let rep = build_gl_hecke(2, &s(2, 1), AChoice::PlusQ).unwrap();
        let expect = Matrix::from_fracs(
            &[2, 2],
            &[
                &[(2, 1), (0, 1), (0, 1), (0, 1)],
                &[(0, 1), (3, 2), (1, 1), (0, 1)],
                &[(0, 1), (1, 1), (0, 1), (0, 1)],
                &[(0, 1), (0, 1), (0, 1), (2, 1)],
            ],
        )
        .unwrap();
        assert_eq!(rep.r(), &expect);
        assert_eq!(rep.lambda(), &s(3, 2));
        assert_eq!(drinfeld_jimbo(2, &s(1, 1)), permutation(2));
        assert!(rep.khat().is_zero());
    }

    #[test]
    fn gl2_trace_data() {
        let rep = build_gl_hecke(2, &s(2, 1), AChoice::PlusQ).unwrap();
        assert_eq!(rep.d0(), &s(5, 8));
        assert_eq!(rep.b(), &s(16, 1));
        assert_eq!(rep.d_op(), &Matrix::diag(&[s(1, 8), s(1, 2)]));
        assert!(weighted_partial_trace(rep.r(), 2, rep.d_op()).unwrap().is_identity());
    }

    #[test]
    fn degenerate_q() {
        for q in [s(0, 1), s(1, 1), s(-1, 1)] {
            assert!(matches!(build_gl_hecke(2, &q, AChoice::PlusQ), Err(Error::Degenerate(_))));
        }
        assert!(build_bmw(Family::Sp, 3, &s(2, 1), AChoice::PlusQ).is_err());
        assert!(build_bmw(Family::So, 2, &s(2, 1), AChoice::PlusQ).is_err());
    }

    #[test]
    fn bmw_parameters() {
        let sp2 = build_bmw(Family::Sp, 2, &s(2, 1), AChoice::PlusQ).unwrap();
        assert_eq!(sp2.nu().unwrap(), &s(-1, 8));
        assert_eq!(sp2.trace_ratio(), Some(&s(1, 1)));
        let so3 = build_bmw(Family::So, 3, &s(2, 1), AChoice::PlusQ).unwrap();
        assert_eq!(so3.nu().unwrap(), &s(1, 4));
        assert_eq!(so3.d_op(), &Matrix::diag(&[s(1, 8), s(1, 4), s(1, 2)]));
        assert_eq!(sp2.d_op(), &Matrix::diag(&[s(1, 32), s(1, 2)]));
    }

    #[test]
    fn heights() {
        let gl2 = build_gl_hecke(2, &s(2, 1), AChoice::PlusQ).unwrap();
        assert_eq!(height(&gl2, 3).unwrap(), Some(2));
        assert_eq!(height(&gl2, 1).unwrap(), None);
        assert_eq!(antisymmetrizer(&gl2, 1).unwrap(), Matrix::identity(&[2]));
        assert_eq!(rank(&antisymmetrizer(&gl2, 2).unwrap()), 1);
    }
}
