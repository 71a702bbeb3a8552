//! Boundary K-matrices: constant reflection-equation solutions, the rational
//! (Prop.-type) solution, its polynomial and small forms, the BMW exceptional
//! solutions, evaluation-representation boundaries and conjugated solutions.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::baxter::baxt;
use crate::check::{compare, compare_scalar, Residual};
use crate::error::{Error, Result};
use crate::linalg::{embed, embed_at, inverse, minimal_polynomial, permutation, Matrix, Poly};
use crate::rep::{check_q, drinfeld_jimbo, Kind, Representation};
use crate::sample::Sampler;
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BoundaryKind {
    Trivial,
    Rational,
    Evaluation,
    Polynomial,
    Small,
    BmwDeg2,
    BmwDeg4,
}

impl BoundaryKind {
    pub fn name(self) -> &'static str {
        match self {
            BoundaryKind::Trivial => "trivial",
            BoundaryKind::Rational => "rational",
            BoundaryKind::Evaluation => "evaluation",
            BoundaryKind::Polynomial => "polynomial",
            BoundaryKind::Small => "small",
            BoundaryKind::BmwDeg2 => "bmw_deg2",
            BoundaryKind::BmwDeg4 => "bmw_deg4",
        }
    }
}

/// A boundary package. `l` acts on the first copy of `V` and, for evaluation
/// boundaries, on a trailing quantum factor `W` (factors `[N, W]`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundarySolution {
    pub kind: BoundaryKind,
    pub l: Matrix,
    pub xi: Scalar,
    /// `α₀..α_m` of the monic annihilating polynomial (leading 1 omitted).
    pub alpha: Vec<Scalar>,
    pub c: Option<Scalar>,
    /// `Q^(k)` for `k = 0, 1, …`
    pub q: Vec<Scalar>,
    pub zeta: Option<Scalar>,
    /// Free constant `A` of the degree-2 BMW solution.
    pub a_const: Option<Scalar>,
    /// `ᾱ₀` with `ᾱ₀² = α₀` (degree-4 BMW solution).
    pub alpha0_bar: Option<Scalar>,
}

impl BoundarySolution {
    fn base(kind: BoundaryKind, l: Matrix, xi: Scalar) -> Self {
        BoundarySolution {
            kind,
            l,
            xi,
            alpha: Vec::new(),
            c: None,
            q: Vec::new(),
            zeta: None,
            a_const: None,
            alpha0_bar: None,
        }
    }

    /// `K ≡ I` on `V` (or `V ⊗ W`).
    pub fn trivial(factors: &[usize]) -> Self {
        Self::base(BoundaryKind::Trivial, Matrix::identity(factors), Scalar::zero())
    }

    /// `K(x) = (L − ξx)(L − ξ/x)⁻¹`.
    pub fn rational(l: Matrix, xi: Scalar) -> Self {
        let kind = if l.factors().len() > 1 { BoundaryKind::Evaluation } else { BoundaryKind::Rational };
        Self::base(kind, l, xi)
    }

    /// Polynomial form of the rational solution, using the minimal polynomial of `L`.
    pub fn polynomial(l: Matrix, xi: Scalar) -> Self {
        let mp = minimal_polynomial(&l);
        let m = mp.degree().unwrap_or(0);
        let mut s = Self::base(BoundaryKind::Polynomial, l, xi);
        s.alpha = mp.coeffs()[..m].to_vec();
        s
    }

    /// Small solution `I + (x − x⁻¹)/(α₁x⁻¹ + ζ)·ỹ`; `alpha` holds `α₁..α_m`.
    pub fn small(l: Matrix, alpha: Vec<Scalar>, zeta: Scalar) -> Result<Self> {
        let yt = small_tilde(&l, &alpha)?;
        if !(&l * &yt).is_zero() {
            return Err(Error::Constraint("small-solution precondition violated: L·ỹ ≠ 0".into()));
        }
        let mut s = Self::base(BoundaryKind::Small, l, Scalar::zero());
        let mut full = vec![Scalar::zero()];
        full.extend(alpha);
        s.alpha = full;
        s.zeta = Some(zeta);
        Ok(s)
    }

    /// Whether `K(1) = I` holds for this family.
    pub fn is_regular(&self) -> bool {
        !matches!(self.kind, BoundaryKind::BmwDeg2 | BoundaryKind::BmwDeg4)
    }

    pub fn factors(&self) -> &[usize] {
        self.l.factors()
    }

    /// `K(x)`.
    pub fn k(&self, x: &Scalar) -> Result<Matrix> {
        match self.kind {
            BoundaryKind::Trivial => Ok(Matrix::identity(self.l.factors())),
            BoundaryKind::Rational | BoundaryKind::Evaluation => rational_boundary(&self.l, &self.xi, x),
            BoundaryKind::Polynomial => {
                let b = polynomial_coefficients(&self.alpha, &self.xi, x)?;
                Ok(polynomial_k(&self.l, &self.xi, &b, x))
            }
            BoundaryKind::Small => {
                let zeta = self.zeta.as_ref().ok_or_else(|| Error::InvalidArgument("ζ missing".into()))?;
                small_boundary(&self.alpha[1..], zeta, &self.l, x)
            }
            BoundaryKind::BmwDeg2 => {
                let a = self.a_const.as_ref().ok_or_else(|| Error::InvalidArgument("A missing".into()))?;
                deg2_k(&self.l, &self.alpha[1], a, x)
            }
            BoundaryKind::BmwDeg4 => {
                let ab = self
                    .alpha0_bar
                    .as_ref()
                    .ok_or_else(|| Error::InvalidArgument("ᾱ₀ missing".into()))?;
                deg4_k(&self.l, &self.alpha, ab, x)
            }
        }
    }

    /// `−(λ/2)K′(1)` where a closed form is available.
    pub fn boundary_derivative_term(&self, lambda: &Scalar) -> Result<Matrix> {
        match self.kind {
            BoundaryKind::Trivial => Ok(Matrix::zeros(self.l.factors())),
            BoundaryKind::Rational | BoundaryKind::Evaluation | BoundaryKind::Polynomial => {
                // K(x) = (L − ξx)(L − ξ/x)⁻¹  ⇒  −(λ/2)K′(1) = λξ(L − ξ)⁻¹
                let inv = inverse(&self.l.shift(&-&self.xi))
                    .map_err(|_| Error::Pole(format!("L − ξ is singular for ξ = {}", self.xi)))?;
                Ok(inv.scale(&(lambda * &self.xi)))
            }
            BoundaryKind::Small => {
                // K′(1) = 2ỹ/(α₁ + ζ)
                let zeta = self.zeta.as_ref().ok_or_else(|| Error::InvalidArgument("ζ missing".into()))?;
                let den = &self.alpha[1] + zeta;
                let yt = small_tilde(&self.l, &self.alpha[1..])?;
                let c = -(lambda / &den);
                Ok(yt.scale(&c))
            }
            _ => Err(Error::Unsupported(format!(
                "no closed-form K′(1) for {} boundaries",
                self.kind.name()
            ))),
        }
    }
}

/// `(shape, sites)` of `V⊗V(⊗W)` for a boundary with the given factors.
fn two_site_layout(l: &Matrix, n: usize) -> Result<(Vec<usize>, Vec<usize>)> {
    match l.factors() {
        [d] if *d == n => Ok((vec![n, n], vec![1])),
        [d, w] if *d == n => Ok((vec![n, n, *w], vec![1, 3])),
        f => Err(Error::Shape(format!("boundary factors {f:?} incompatible with N = {n}"))),
    }
}

/// Places a boundary operator on site 1 (and the trailing quantum factor).
pub fn place_boundary(k: &Matrix, shape: &[usize], sites: &[usize]) -> Result<Matrix> {
    if sites.len() == 1 {
        embed(k, sites[0], shape)
    } else {
        embed_at(k, sites, shape)
    }
}

/// `R̂₁L₁R̂₁L₁ = L₁R̂₁L₁R̂₁` on `V⊗V(⊗W)`.
pub fn constant_re_residual(rep: &Representation, l: &Matrix) -> Result<Residual> {
    let (shape, sites) = two_site_layout(l, rep.n())?;
    let l1 = place_boundary(l, &shape, &sites)?;
    let r1 = embed(rep.r(), 1, &shape)?;
    let rl = &r1 * &l1;
    compare(&(&rl * &rl), &(&(&l1 * &r1) * &(&l1 * &r1)))
}

pub fn check_constant_re(rep: &Representation, l: &Matrix) -> Result<bool> {
    Ok(constant_re_residual(rep, l)?.is_zero())
}

/// Evaluation-representation data for `U_q(gl(N))` with `W = V`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Evaluation {
    pub l_plus: Matrix,
    pub l_minus: Matrix,
    /// `(L⁻)⁻¹L⁺`, factors `[N, W]`.
    pub l: Matrix,
}

/// `L⁺ = q⁻¹R₂₁`, `L⁻ = R⁻¹` (with `R = P R̂`) on `V_aux ⊗ W`; checks the three
/// FRT relations and the intertwining relation for `L(x) = L⁺ − xL⁻`.
pub fn evaluation_boundary(n: usize, q: &Scalar) -> Result<Evaluation> {
    check_q(q)?;
    let rhat = drinfeld_jimbo(n, q);
    let p = permutation(n);
    let r = &p * &rhat;
    let l_plus = (&(&p * &r) * &p).scale(&q.inv()?);
    let l_minus = inverse(&r)?;
    let shape = [n, n, n];
    let r12 = embed(&rhat, 1, &shape)?;
    let on = |m: &Matrix, aux: usize| embed_at(m, &[aux, 3], &shape);
    let (p1, p2) = (on(&l_plus, 1)?, on(&l_plus, 2)?);
    let (m1, m2) = (on(&l_minus, 1)?, on(&l_minus, 2)?);
    let frt = [
        compare(&(&(&r12 * &p2) * &p1), &(&(&p2 * &p1) * &r12))?,
        compare(&(&(&r12 * &m2) * &m1), &(&(&m2 * &m1) * &r12))?,
        compare(&(&(&r12 * &p2) * &m1), &(&(&m2 * &p1) * &r12))?,
    ];
    if frt.iter().any(|r| !r.is_zero()) {
        return Err(Error::Construction("FRT relations fail for the evaluation L^±".into()));
    }
    let mut sampler = Sampler::new(0x5eed, 6, &[Scalar::zero(), Scalar::one(), -Scalar::one()])?;
    for _ in 0..2 {
        let (x, y) = (sampler.next_point()?, sampler.next_point()?);
        let lx = |t: &Scalar, aux| -> Result<Matrix> { Ok(&on(&l_plus, aux)? - &on(&l_minus, aux)?.scale(t)) };
        let rx = embed(&(&rhat - &inverse(&rhat)?.scale(&x)), 1, &shape)?;
        let xy = &x * &y;
        let lhs = &(&rx * &lx(&xy, 2)?) * &lx(&y, 1)?;
        let rhs = &(&lx(&y, 2)? * &lx(&xy, 1)?) * &rx;
        if lhs != rhs {
            return Err(Error::Construction(format!("intertwining relation fails at x = {x}, y = {y}")));
        }
    }
    let l = &inverse(&l_minus)? * &l_plus;
    Ok(Evaluation { l_plus, l_minus, l })
}

/// `R·R₂₁ = P R̂ R̂ P` on `V_aux ⊗ W` with `W = V`; a constant solution for any braid
/// representation. For `gl(N)` it is `q` times the evaluation `L`.
pub fn double_braid_boundary(rep: &Representation) -> Matrix {
    let p = permutation(rep.n());
    let r = rep.r();
    &(&(&p * r) * r) * &p
}

/// `K(x) = (L − ξx)(L − ξ/x)⁻¹`.
pub fn rational_boundary(l: &Matrix, xi: &Scalar, x: &Scalar) -> Result<Matrix> {
    let xinv = x.inv().map_err(|_| Error::Pole("x = 0".into()))?;
    let den = l.shift(&-(xi * &xinv));
    let inv = inverse(&den).map_err(|_| {
        Error::Pole(format!("L − ξ/x is singular: ξ/x = {} is an eigenvalue of L", xi * &xinv))
    })?;
    Ok(&l.shift(&-(xi * x)) * &inv)
}

/// `R̂(x/z)K(x)R̂(xz)K(z) = K(z)R̂(xz)K(x)R̂(x/z)` with `K` on site 1 (and `W`).
pub fn re_residual(
    rep: &Representation,
    k: &dyn Fn(&Scalar) -> Result<Matrix>,
    x: &Scalar,
    z: &Scalar,
) -> Result<Residual> {
    let kx = k(x)?;
    let kz = k(z)?;
    let (shape, sites) = two_site_layout(&kx, rep.n())?;
    let k1x = place_boundary(&kx, &shape, &sites)?;
    let k1z = place_boundary(&kz, &shape, &sites)?;
    let ratio = x.try_div(z).map_err(|_| Error::Pole("z = 0".into()))?;
    let r_ratio = embed(&baxt(rep, &ratio)?, 1, &shape)?;
    let r_prod = embed(&baxt(rep, &(x * z))?, 1, &shape)?;
    let lhs = &(&(&r_ratio * &k1x) * &r_prod) * &k1z;
    let rhs = &(&(&k1z * &r_prod) * &k1x) * &r_ratio;
    compare(&lhs, &rhs)
}

pub fn check_re(
    rep: &Representation,
    k: &dyn Fn(&Scalar) -> Result<Matrix>,
    x: &Scalar,
    z: &Scalar,
) -> Result<bool> {
    Ok(re_residual(rep, k, x, z)?.is_zero())
}

/// `[K₁(x), R̂_m] = 0` for every `m ≥ 2` on `sites` copies of `V`.
pub fn locality_residual(rep: &Representation, k: &Matrix, sites: usize) -> Result<Residual> {
    if k.factors() != [rep.n()] {
        return Err(Error::Shape("locality is checked for boundaries acting on V only".into()));
    }
    let shape = rep.shape(sites);
    let k1 = embed(k, 1, &shape)?;
    let mut res = Residual::zero();
    for m in 2..sites {
        let rm = embed(rep.r(), m, &shape)?;
        res = res.and(compare(&(&k1 * &rm), &(&rm * &k1))?);
    }
    Ok(res)
}

/// Central constants extracted from a BMW boundary.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BmwConstants {
    /// From `K̂·(L₁R̂L₁R̂) = c·K̂`.
    pub c: Scalar,
    /// From `(L₁R̂L₁R̂)·K̂ = c′·K̂`.
    pub c_reversed: Scalar,
    /// `Q^(k)`, `k = 0..=k_max`.
    pub q: Vec<Scalar>,
    /// `Q^(−n)`, `n = 1..=3`, extracted directly with `L⁻¹` (empty if `L` is singular).
    pub q_negative: Vec<Scalar>,
}

impl BmwConstants {
    pub fn q_at(&self, k: i64) -> Option<&Scalar> {
        if k >= 0 {
            self.q.get(k as usize)
        } else {
            self.q_negative.get((-k - 1) as usize)
        }
    }
}

/// `Q^(0) = (ν⁻¹ + λ − ν)/λ`.
pub fn q0_formula(rep: &Representation) -> Result<Scalar> {
    let nu = rep.nu()?;
    let lam = rep.lambda();
    (&(&nu.inv()? + lam) - nu).try_div(lam)
}

/// `Q^(−n)` from positive-index values:
/// `ν²c⁻ⁿQ^(n) + λν Σ_{j=1}^{n−1} c⁻ʲ(Q^(2j−n) − Q^(j)Q^(j−n))`.
pub fn nazar_value(
    rep: &Representation,
    c: &Scalar,
    n: i64,
    q: &dyn Fn(i64) -> Result<Scalar>,
) -> Result<Scalar> {
    let nu = rep.nu()?;
    let lam = rep.lambda();
    let mut acc = &(&nu.pow(2)? * &c.pow(-(n as i32))?) * &q(n)?;
    for j in 1..n {
        let term = &q(2 * j - n)? - &(&q(j)? * &q(j - n)?);
        acc = &acc + &(&(&(lam * nu) * &c.pow(-(j as i32))?) * &term);
    }
    Ok(acc)
}

fn sandwich(kh: &Matrix, m: &Matrix, what: &str) -> Result<Scalar> {
    let s = &(kh * m) * kh;
    if s.is_zero() {
        return Ok(Scalar::zero());
    }
    s.ratio_to(kh).ok_or_else(|| Error::NotBmwBoundary(format!("{what} is not a multiple of K̂")))
}

/// Extracts `c`, `c′` and `Q^(k)` for `k = 0..=k_max` (plus `k = −1..−3` when
/// `L` is invertible).
pub fn bmw_constants(rep: &Representation, l: &Matrix, k_max: usize) -> Result<BmwConstants> {
    if rep.kind() != Kind::Bmw {
        return Err(Error::Unsupported("bmw_constants needs a BMW representation".into()));
    }
    let (shape, sites) = two_site_layout(l, rep.n())?;
    let l1 = place_boundary(l, &shape, &sites)?;
    let r1 = embed(rep.r(), 1, &shape)?;
    let kh = embed(rep.khat(), 1, &shape)?;
    let lr = &l1 * &r1;
    let word = &lr * &lr;
    let c = (&kh * &word)
        .ratio_to(&kh)
        .ok_or_else(|| Error::NotBmwBoundary("K̂·L₁R̂L₁R̂ is not a multiple of K̂".into()))?;
    let c_reversed = (&word * &kh)
        .ratio_to(&kh)
        .ok_or_else(|| Error::NotBmwBoundary("L₁R̂L₁R̂·K̂ is not a multiple of K̂".into()))?;
    let mut q = Vec::with_capacity(k_max + 1);
    let mut power = Matrix::identity(&shape);
    for k in 0..=k_max {
        q.push(sandwich(&kh, &power, &format!("K̂L₁^{k}K̂"))?);
        power = &power * &l1;
    }
    let mut q_negative = Vec::new();
    if let Ok(li) = inverse(&l1) {
        let mut power = li.clone();
        for n in 1..=3 {
            q_negative.push(sandwich(&kh, &power, &format!("K̂L₁^-{n}K̂"))?);
            power = &power * &li;
        }
    }
    Ok(BmwConstants { c, c_reversed, q, q_negative })
}

/// Checks `Q^(0)` against its closed form and the negative-index relation for `n ≤ 3`.
pub fn bmw_constants_residual(rep: &Representation, k: &BmwConstants) -> Result<Residual> {
    let mut res = compare_scalar(&k.q[0], &q0_formula(rep)?);
    if k.q_negative.is_empty() {
        return Ok(res);
    }
    let lookup = |i: i64| -> Result<Scalar> {
        k.q_at(i).cloned().ok_or_else(|| Error::InvalidArgument(format!("Q^({i}) not extracted")))
    };
    for n in 1..=3 {
        let formula = nazar_value(rep, &k.c, n, &lookup)?;
        res = res.and(compare_scalar(&lookup(-n)?, &formula));
    }
    Ok(res)
}

/// Normalizes the sign of a square root: positive real value.
fn positive_root(r: Scalar) -> Scalar {
    if r.signum() < 0 {
        -r
    } else {
        r
    }
}

/// `ξ` with `ξ² = −ac/ν`, positive branch. `allow_extension` permits adjoining
/// a real square root.
pub fn bmw_xi(rep: &Representation, c: &Scalar, allow_extension: bool) -> Result<Scalar> {
    let nu = rep.nu()?;
    let sq = (-(rep.a() * c)).try_div(nu)?;
    if let Some(r) = sq.sqrt_exact() {
        return Ok(positive_root(r));
    }
    if !allow_extension {
        return Err(Error::NotSquare(format!("ξ² = {sq}")));
    }
    Ok(positive_root(sq.sqrt_extend()?))
}

/// `b_0(x)..b_m(x)` for the expansion `1/(L − ξ/x) = Σ b_k(x) L^k`.
pub fn polynomial_coefficients(alpha: &[Scalar], xi: &Scalar, x: &Scalar) -> Result<Vec<Scalar>> {
    let m = alpha.len().checked_sub(1).ok_or_else(|| Error::InvalidArgument("empty α".into()))?;
    let u = xi.try_div(x).map_err(|_| Error::Pole("x = 0".into()))?;
    let al = |r: usize| if r == m + 1 { Scalar::one() } else { alpha[r].clone() };
    let mut total = Scalar::zero();
    for r in (0..=m + 1).rev() {
        total = &(&total * &u) + &al(r);
    }
    if total.is_zero() {
        return Err(Error::Pole(format!("Σ α_r (ξ/x)^r = 0 at x = {x}")));
    }
    let bm = -total.inv()?;
    let mut b = vec![Scalar::zero(); m + 1];
    for k in 0..=m {
        let mut s = Scalar::zero();
        for r in 0..=k {
            s = &s + &(&al(m - r + 1) * &u.pow((k - r) as i32)?);
        }
        b[m - k] = &bm * &s;
    }
    Ok(b)
}

fn powers(l: &Matrix, upto: usize) -> Vec<Matrix> {
    let mut out = vec![Matrix::identity(l.factors())];
    for k in 1..=upto {
        let next = &out[k - 1] * l;
        out.push(next);
    }
    out
}

/// `(L − ξx)·Σ b_k L^k`.
pub fn polynomial_k(l: &Matrix, xi: &Scalar, b: &[Scalar], x: &Scalar) -> Matrix {
    let pw = powers(l, b.len());
    let mut sum = Matrix::zeros(l.factors());
    for (bk, p) in b.iter().zip(&pw) {
        sum = &sum + &p.scale(bk);
    }
    &l.shift(&-(xi * x)) * &sum
}

/// Coefficient form `b_m Σ_k (b_{k−1}/b_m − ξx b_k/b_m − α_k) L^k` (`b_{−1} = 0`).
pub fn polynomial_k_expanded(l: &Matrix, alpha: &[Scalar], xi: &Scalar, b: &[Scalar], x: &Scalar) -> Result<Matrix> {
    let m = b.len() - 1;
    let bm = &b[m];
    let pw = powers(l, m);
    let mut sum = Matrix::zeros(l.factors());
    for k in 0..=m {
        let prev = if k == 0 { Scalar::zero() } else { b[k - 1].try_div(bm)? };
        let c = &(&prev - &(&(xi * x) * &b[k].try_div(bm)?)) - &alpha[k];
        sum = &sum + &pw[k].scale(&c);
    }
    Ok(sum.scale(bm))
}

/// Simplest polynomial form for a quadratic annihilator `L² + α₁L + α₀ = 0`:
/// `(x − x⁻¹)/(ξx⁻² + α₁x⁻¹ + α₀/ξ)·(L + (xα₁ + ξ + α₀/ξ)/(x − x⁻¹))`.
pub fn quadratic_k(l: &Matrix, alpha0: &Scalar, alpha1: &Scalar, xi: &Scalar, x: &Scalar) -> Result<Matrix> {
    let xi_inv = x.inv()?;
    let d = x - &xi_inv;
    let a0x = alpha0.try_div(xi)?;
    let den = &(&(xi * &xi_inv.pow(2)?) + &(alpha1 * &xi_inv)) + &a0x;
    let shift = (&(&(x * alpha1) + xi) + &a0x).try_div(&d).map_err(|_| Error::Pole("x = ±1".into()))?;
    Ok(l.shift(&shift).scale(&d.try_div(&den).map_err(|_| Error::Pole("denominator vanishes".into()))?))
}

/// Both displays of the order-3 case (`L³ + α₂L² + α₁L + α₀ = 0`).
pub fn cubic_k_forms(l: &Matrix, alpha: &[Scalar], xi: &Scalar, x: &Scalar) -> Result<(Matrix, Matrix)> {
    let [a0, a1, a2] = [&alpha[0], &alpha[1], &alpha[2]];
    let u = xi.try_div(x)?;
    let xinv = x.inv()?;
    let d = x - &xinv;
    let total = &(&(&u.pow(3)? + &(a2 * &u.pow(2)?)) + &(a1 * &u)) + a0;
    let pref = (xi * &d).try_div(&total).map_err(|_| Error::Pole("Σ α_r (ξ/x)^r = 0".into()))?;
    let a0x = a0.try_div(xi)?;
    let c0 = (&(&(&(&xi.pow(2)? * &xinv) + &(a2 * xi)) + &(a1 * x)) + &a0x).try_div(&d)?;
    let first = (&(l * l) + &l.scale(&(&u + a2))).shift(&c0).scale(&pref);
    let li = inverse(l).map_err(|_| Error::Pole("L is singular".into()))?;
    let c0b = (&(&(&(&xi.pow(2)? + a1) * &xinv) + &(a2 * xi)) + &a0x).try_div(&d)?;
    let second = (&l.scale(&u) - &li.scale(a0)).shift(&c0b).scale(&pref);
    Ok((first, second))
}

fn small_tilde(l: &Matrix, alpha: &[Scalar]) -> Result<Matrix> {
    let m = alpha.len();
    if m == 0 {
        return Err(Error::InvalidArgument("small solutions need m ≥ 1".into()));
    }
    let pw = powers(l, m);
    let mut yt = pw[m].clone();
    for k in 1..=m {
        yt = &yt + &pw[k - 1].scale(&alpha[k - 1]);
    }
    Ok(yt)
}

/// `I + (x − x⁻¹)/(α₁x⁻¹ + ζ)·ỹ` with `ỹ = L^m + Σ_{k=1}^m α_k L^{k−1}`; `alpha` is `α₁..α_m`.
pub fn small_boundary(alpha: &[Scalar], zeta: &Scalar, l: &Matrix, x: &Scalar) -> Result<Matrix> {
    let yt = small_tilde(l, alpha)?;
    if !(l * &yt).is_zero() {
        return Err(Error::Constraint("small-solution precondition violated: L·ỹ ≠ 0".into()));
    }
    let xinv = x.inv()?;
    let den = &(&alpha[0] * &xinv) + zeta;
    let c = (x - &xinv).try_div(&den).map_err(|_| Error::Pole(format!("α₁/x + ζ = 0 at x = {x}")))?;
    Ok(yt.scale(&c).shift(&Scalar::one()))
}

/// Which parameters of the degree-2 BMW solution are free.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Deg2Case {
    /// `Q^(1)` free, `α₀ = −c/(aν)`, `α₁ = −Q^(1)νλ/(aν + 1)`.
    FreeQ,
    /// `α₀` free, `Q^(k) = c^{k/2}ν^{−k}Q^(0)`.
    FreeAlpha0,
}

fn deg2_k(l: &Matrix, alpha1: &Scalar, a_const: &Scalar, x: &Scalar) -> Result<Matrix> {
    let d = x - &x.inv()?;
    let num = &(alpha1 * x) + a_const;
    if d.is_zero() {
        if !num.is_zero() {
            return Err(Error::Pole(format!("x = {x} with α₁x + A ≠ 0")));
        }
        // removable: (α₁x + A)/(x − x⁻¹) → α₁/(1 + x⁻²) = α₁/2
        return Ok(l.shift(&(alpha1 / &Scalar::from_int(2))));
    }
    Ok(l.shift(&(&num / &d)))
}

/// `α₁ = −λ(c + ν²α₀)Q^(1)/(c(ν⁻¹ − ν + λ))`.
pub fn nnww_alpha1(rep: &Representation, c: &Scalar, alpha0: &Scalar, q1: &Scalar) -> Result<Scalar> {
    let nu = rep.nu()?;
    let lam = rep.lambda();
    let num = &(lam * &(c + &(&nu.pow(2)? * alpha0))) * q1;
    let den = c * &(&(&nu.inv()? - nu) + lam);
    Ok(-num.try_div(&den)?)
}

/// Case (1a) values `(α₀, α₁)`.
pub fn fix1_alphas(rep: &Representation, c: &Scalar, q1: &Scalar) -> Result<(Scalar, Scalar)> {
    let nu = rep.nu()?;
    let a = rep.a();
    let an = a * nu;
    let alpha0 = -c.try_div(&an)?;
    let alpha1 = -(&(q1 * nu) * rep.lambda()).try_div(&an.shift_one())?;
    Ok((alpha0, alpha1))
}

trait ShiftOne {
    fn shift_one(&self) -> Scalar;
}

impl ShiftOne for Scalar {
    fn shift_one(&self) -> Scalar {
        self + &Scalar::one()
    }
}

/// Report on the degree-2 constraints for a concrete `L`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Deg2Report {
    pub constants: BmwConstants,
    pub alpha0: Scalar,
    pub alpha1: Scalar,
    pub nnww: Residual,
    pub case: Residual,
}

/// Validates `L` against the degree-2 constraints of `case`.
pub fn deg2_constraints(rep: &Representation, l: &Matrix, case: Deg2Case) -> Result<Deg2Report> {
    let mp = minimal_polynomial(l);
    if mp.degree() != Some(2) {
        return Err(Error::Constraint(format!("minimal polynomial of L has degree {:?}, need 2", mp.degree())));
    }
    let (alpha0, alpha1) = (mp.coeff(0), mp.coeff(1));
    let constants = bmw_constants(rep, l, 3)?;
    let c = &constants.c;
    let q1 = &constants.q[1];
    let nnww = compare_scalar(&alpha1, &nnww_alpha1(rep, c, &alpha0, q1)?);
    let case_res = match case {
        Deg2Case::FreeQ => {
            let (f0, f1) = fix1_alphas(rep, c, q1)?;
            compare_scalar(&alpha0, &f0).and(compare_scalar(&alpha1, &f1))
        }
        Deg2Case::FreeAlpha0 => {
            // Q^(k) = c^{k/2} ν^{−k} Q^(0) for k = 1, 2
            let nu = rep.nu()?;
            let q0 = &constants.q[0];
            let lhs1 = constants.q[1].pow(2)?;
            let rhs1 = &(c * &q0.pow(2)?) / &nu.pow(2)?;
            let rhs2 = &(c * q0) / &nu.pow(2)?;
            compare_scalar(&lhs1, &rhs1).and(compare_scalar(&constants.q[2], &rhs2))
        }
    };
    Ok(Deg2Report { constants: constants.clone(), alpha0, alpha1, nnww, case: case_res })
}

/// Degree-2 BMW solution `K(x) = L + (α₁x + A)/(x − x⁻¹)` after validating the constraints.
pub fn bmw_deg2_boundary(rep: &Representation, l: &Matrix, case: Deg2Case, a_const: &Scalar) -> Result<BoundarySolution> {
    let report = deg2_constraints(rep, l, case)?;
    if !report.nnww.is_zero() {
        return Err(Error::Constraint("nnww relation between α₁, α₀ and Q^(1) fails".into()));
    }
    if !report.case.is_zero() {
        let which = match case {
            Deg2Case::FreeQ => "fix1 values of α₀, α₁",
            Deg2Case::FreeAlpha0 => "fixed Q^(k) of case (1b)",
        };
        return Err(Error::Constraint(format!("{which} fail")));
    }
    let mut s = BoundarySolution::base(BoundaryKind::BmwDeg2, l.clone(), Scalar::zero());
    s.alpha = vec![report.alpha0, report.alpha1];
    s.c = Some(report.constants.c.clone());
    s.q = report.constants.q;
    s.a_const = Some(a_const.clone());
    Ok(s)
}

/// `A = −(c/(ξν))(a + 1/a)`, the value reproducing the rational solution in case (1a).
pub fn deg2_special_a(rep: &Representation, c: &Scalar, xi: &Scalar) -> Result<Scalar> {
    let nu = rep.nu()?;
    let a = rep.a();
    Ok(-(&c.try_div(&(xi * nu))? * &(a + &a.inv()?)))
}

/// `α₀..α₃` for the degree-4 solution from `c` and `Q^(1..3)`.
pub fn deg4_alphas(rep: &Representation, c: &Scalar, q: &[Scalar; 3]) -> Result<[Scalar; 4]> {
    let nu = rep.nu()?;
    let a = rep.a();
    let lam = rep.lambda();
    let [q1, q2, q3] = q;
    let q0 = q0_formula(rep)?;
    let an1 = &(a * nu) + &Scalar::one();
    let nl = (nu * lam).try_div(&an1)?;
    let cna = c.try_div(&(nu * a))?;
    let num = &(q3 - &(&(&nl * q1) * q2)) - &(&cna * q1);
    let den = &(q2 - &(&nl * &q1.pow(2)?)) - &(&cna * &q0);
    let alpha3 = -num.try_div(&den).map_err(|_| Error::Pole("α₃ denominator vanishes".into()))?;
    let alpha2 = &-(&nl * &(&(q1 * &alpha3) + q2)) + &(lam * c).try_div(a)?;
    let alpha1 = -(&c.try_div(a)? * &(&alpha3.try_div(nu)? + &(lam * q1)));
    let alpha0 = -(c.pow(2)?.try_div(&(a * nu))?);
    Ok([alpha0, alpha1, alpha2, alpha3])
}

/// Extends `Q^(0..m)` to `Q^(−m−1..=m+1)`: `Q^(m+1)` from the `r = 0` relation
/// and negative indices from the recursion.
pub fn extend_q(rep: &Representation, c: &Scalar, alpha: &[Scalar], q_pos: &[Scalar]) -> Result<Vec<(i64, Scalar)>> {
    let m = alpha.len() - 1;
    if q_pos.len() < m + 1 {
        return Err(Error::InvalidArgument("need Q^(0..m)".into()));
    }
    let mut table: Vec<(i64, Scalar)> = (0..=m).map(|k| (k as i64, q_pos[k].clone())).collect();
    let mut top = Scalar::zero();
    for (k, ak) in alpha.iter().enumerate() {
        top = &top - &(ak * &q_pos[k]);
    }
    table.push(((m + 1) as i64, top));
    for n in 1..=(m as i64 + 1) {
        let snapshot = table.clone();
        let lookup = move |i: i64| -> Result<Scalar> {
            snapshot
                .iter()
                .find(|(k, _)| *k == i)
                .map(|(_, v)| v.clone())
                .ok_or_else(|| Error::InvalidArgument(format!("Q^({i}) unavailable")))
        };
        let v = nazar_value(rep, c, n, &lookup)?;
        table.push((-n, v));
    }
    Ok(table)
}

/// `Q^(m+1−r) + Σ_k α_k Q^(k−r) = 0` for `r = 0..=m+1`; returns the first failing `r`.
pub fn chart1_failure(alpha: &[Scalar], table: &[(i64, Scalar)]) -> Result<Option<usize>> {
    let m = alpha.len() - 1;
    let get = |i: i64| -> Result<Scalar> {
        table
            .iter()
            .find(|(k, _)| *k == i)
            .map(|(_, v)| v.clone())
            .ok_or_else(|| Error::InvalidArgument(format!("Q^({i}) unavailable")))
    };
    for r in 0..=m + 1 {
        let r_i = r as i64;
        let mut s = get(m as i64 + 1 - r_i)?;
        for (k, ak) in alpha.iter().enumerate() {
            s = &s + &(ak * &get(k as i64 - r_i)?);
        }
        if !s.is_zero() {
            return Ok(Some(r));
        }
    }
    Ok(None)
}

fn deg4_k(l: &Matrix, alpha: &[Scalar], alpha0_bar: &Scalar, x: &Scalar) -> Result<Matrix> {
    let d = x - &x.inv()?;
    let li = inverse(l).map_err(|_| Error::Pole("L is singular".into()))?;
    let c = (&(&(&alpha[3] * alpha0_bar) * x) + &alpha[1])
        .try_div(&d)
        .map_err(|_| Error::Pole(format!("x = {x}")))?;
    Ok(&l.scale(alpha0_bar).shift(&c) - &li.scale(&(x * &alpha[0])))
}

/// Degree-4 BMW solution for an `L` annihilated by the constrained quartic.
pub fn bmw_deg4_boundary(rep: &Representation, l: &Matrix) -> Result<BoundarySolution> {
    let k = bmw_constants(rep, l, 4)?;
    let alpha = deg4_alphas(rep, &k.c, &[k.q[1].clone(), k.q[2].clone(), k.q[3].clone()])?;
    let mut quartic = alpha.to_vec();
    quartic.push(Scalar::one());
    if !crate::linalg::annihilates(&Poly::new(quartic), l) {
        return Err(Error::Constraint("L is not annihilated by the constrained quartic".into()));
    }
    let table = extend_q(rep, &k.c, &alpha, &k.q[..4])?;
    if let Some(r) = chart1_failure(&alpha, &table)? {
        return Err(Error::Constraint(format!("chart1 consistency fails at r = {r}")));
    }
    let bar = alpha[0]
        .sqrt_exact()
        .ok_or_else(|| Error::NotSquare(format!("α₀ = {}", alpha[0])))?;
    let mut s = BoundarySolution::base(BoundaryKind::BmwDeg4, l.clone(), Scalar::zero());
    s.alpha = alpha.to_vec();
    s.c = Some(k.c);
    s.q = k.q;
    s.alpha0_bar = Some(bar);
    Ok(s)
}

/// How a conjugated boundary is produced from a reflection-equation solution.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConjugateVariant {
    /// `K̃(x) = K(b^{1/2}/x)`
    Reflect,
    /// `K̃(x) = K(x/b^{1/2})⁻¹`
    Invert,
}

/// Positive square root of `b`.
pub fn sqrt_b(b: &Scalar) -> Result<Scalar> {
    b.sqrt_exact()
        .map(positive_root)
        .ok_or_else(|| Error::NotSquare(format!("b = {b}")))
}

/// `K̃(x)` from `K` with `b^{1/2}` exact.
pub fn conjugate_boundary(
    k: &dyn Fn(&Scalar) -> Result<Matrix>,
    b: &Scalar,
    variant: ConjugateVariant,
    x: &Scalar,
) -> Result<Matrix> {
    let sb = sqrt_b(b)?;
    match variant {
        ConjugateVariant::Reflect => k(&sb.try_div(x).map_err(|_| Error::Pole("x = 0".into()))?),
        ConjugateVariant::Invert => {
            let m = k(&x.try_div(&sb)?)?;
            inverse(&m).map_err(|_| Error::Pole(format!("K(x/b^(1/2)) is singular at x = {x}")))
        }
    }
}

/// Right boundary `K̃(x) = (L̃ − ξ₂b^{1/2}x⁻¹)(L̃ − ξ₂b^{−1/2}x)⁻¹`.
pub fn two_case_boundary(l: &Matrix, xi2: &Scalar, b_half: &Scalar, x: &Scalar) -> Result<Matrix> {
    let num = l.shift(&-(&(xi2 * b_half) * &x.inv()?));
    let den = l.shift(&-(&(xi2 * x) * &b_half.inv()?));
    let inv = inverse(&den).map_err(|_| Error::Pole(format!("L̃ − ξ₂b^(-1/2)x is singular at x = {x}")))?;
    Ok(&num * &inv)
}

/// `R̂(x/z)K̃(z)R̂(b/(xz))K̃(x) = K̃(x)R̂(b/(xz))K̃(z)R̂(x/z)` with local `K̃` on site 1.
pub fn conjugated_re_residual(
    rep: &Representation,
    kt: &dyn Fn(&Scalar) -> Result<Matrix>,
    x: &Scalar,
    z: &Scalar,
) -> Result<Residual> {
    let shape = rep.shape(2);
    let ktx = embed(&kt(x)?, 1, &shape)?;
    let ktz = embed(&kt(z)?, 1, &shape)?;
    let ratio = x.try_div(z)?;
    let bp = rep.b().try_div(&(x * z))?;
    let r_ratio = embed(&baxt(rep, &ratio)?, 1, &shape)?;
    let r_b = embed(&baxt(rep, &bp)?, 1, &shape)?;
    let lhs = &(&(&r_ratio * &ktz) * &r_b) * &ktx;
    let rhs = &(&(&ktx * &r_b) * &ktz) * &r_ratio;
    compare(&lhs, &rhs)
}

pub fn check_conjugated_re(
    rep: &Representation,
    kt: &dyn Fn(&Scalar) -> Result<Matrix>,
    x: &Scalar,
    z: &Scalar,
) -> Result<bool> {
    Ok(conjugated_re_residual(rep, kt, x, z)?.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep::{build_bmw, build_gl_hecke, AChoice, Family};

    fn s(p: i64, q: i64) -> Scalar {
        Scalar::from_frac(p, q)
    }

    #[test]
    fn constant_re_examples() {
        let rep = build_gl_hecke(2, &s(2, 1), AChoice::PlusQ).unwrap();
        assert!(check_constant_re(&rep, &Matrix::identity(&[2])).unwrap());
        let d = Matrix::diag(&[s(3, 1), s(5, 2)]);
        let res = constant_re_residual(&rep, &d).unwrap();
        assert!(!res.is_zero());
    }

    #[test]
    fn evaluation_l() {
        let ev = evaluation_boundary(2, &s(2, 1)).unwrap();
        let expect = Matrix::from_fracs(
            &[2, 2],
            &[
                &[(2, 1), (0, 1), (0, 1), (0, 1)],
                &[(0, 1), (1, 2), (3, 4), (0, 1)],
                &[(0, 1), (3, 4), (13, 8), (0, 1)],
                &[(0, 1), (0, 1), (0, 1), (2, 1)],
            ],
        )
        .unwrap();
        assert_eq!(ev.l, expect);
        let rep = build_gl_hecke(2, &s(2, 1), AChoice::PlusQ).unwrap();
        assert!(check_constant_re(&rep, &ev.l).unwrap());
        assert_eq!(minimal_polynomial(&ev.l).degree(), Some(2));
    }

    #[test]
    fn rational_special_values() {
        let l = Matrix::diag(&[s(3, 1), s(-2, 1)]);
        assert!(rational_boundary(&l, &s(1, 1), &s(1, 1)).unwrap().is_identity());
        assert!(rational_boundary(&l, &s(0, 1), &s(4, 7)).unwrap().is_identity());
        assert!(matches!(rational_boundary(&l, &s(3, 1), &s(1, 1)), Err(Error::Pole(_))));
    }

    #[test]
    fn sp2_identity_constants() {
        let rep = build_bmw(Family::Sp, 2, &s(2, 1), AChoice::PlusQ).unwrap();
        let k = bmw_constants(&rep, &Matrix::identity(&[2]), 3).unwrap();
        let nu = rep.nu().unwrap().clone();
        assert_eq!(k.c, nu.pow(2).unwrap());
        assert_eq!(k.c, k.c_reversed);
        assert_eq!(k.q[0], s(-17, 4));
        assert!(k.q.iter().all(|v| *v == k.q[0]));
        assert!(bmw_constants_residual(&rep, &k).unwrap().is_zero());
        assert_eq!(bmw_xi(&rep, &k.c, false).unwrap(), s(1, 2));
        let alpha = deg4_alphas(&rep, &k.c, &[s(3, 1), s(5, 7), s(2, 9)]).unwrap();
        assert_eq!(alpha[0], s(1, 1024));
        let q0 = q0_formula(&rep).unwrap();
        let table = extend_q(&rep, &k.c, &alpha, &[q0, s(3, 1), s(5, 7), s(2, 9)]).unwrap();
        assert_eq!(chart1_failure(&alpha, &table).unwrap(), None);
    }

    #[test]
    fn so3_xi_needs_extension() {
        let rep = build_bmw(Family::So, 3, &s(2, 1), AChoice::MinusInvQ).unwrap();
        let k = bmw_constants(&rep, &Matrix::identity(&[3]), 1).unwrap();
        assert!(bmw_xi(&rep, &k.c, false).is_err());
        let xi = bmw_xi(&rep, &k.c, true).unwrap();
        assert_eq!(xi, "1/4*sqrt(2)".parse().unwrap());
        let sp = build_bmw(Family::Sp, 2, &s(2, 1), AChoice::MinusInvQ).unwrap();
        let c = bmw_constants(&sp, &Matrix::identity(&[2]), 1).unwrap().c;
        assert!(matches!(bmw_xi(&sp, &c, true), Err(Error::NegativeRadicand(_))));
    }
}
