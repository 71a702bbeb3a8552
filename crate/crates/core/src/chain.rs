//! Open chains: dressed boundaries, transfer matrices `τ(x)`, `t(x)` and the
//! local Hamiltonians `H0..H7`.

use alloc::format;
use alloc::vec::Vec;

use crate::baxter::baxt;
use crate::check::{compare, Residual};
use crate::error::{Error, Result};
use crate::linalg::{char_polynomial, embed, rational_roots, square_free, weighted_partial_trace, Matrix, Poly};
use crate::reflection::{place_boundary, BoundaryKind, BoundarySolution};
use crate::rep::{Kind, Representation};
use crate::scalar::Scalar;

/// Right end of the chain.
#[derive(Debug, Clone, PartialEq, Eq)]
#[allow(clippy::large_enum_variant)]
pub enum RightBoundary {
    Trivial,
    /// `K̃(x) = K(b^{1/2}/x)` for a local solution `K` acting on `V`.
    Conjugated { solution: BoundarySolution, b_half: Scalar },
}

impl RightBoundary {
    pub fn is_trivial(&self) -> bool {
        matches!(self, RightBoundary::Trivial)
    }

    /// `K̃(x)` on one copy of `V`.
    pub fn k(&self, n: usize, x: &Scalar) -> Result<Matrix> {
        match self {
            RightBoundary::Trivial => Ok(Matrix::identity(&[n])),
            RightBoundary::Conjugated { solution, b_half } => {
                solution.k(&b_half.try_div(x).map_err(|_| Error::Pole("x = 0".into()))?)
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum HamiltonianKind {
    H0,
    H1,
    H2,
    H3,
    H4,
    H5,
    H6,
    H7,
}

impl HamiltonianKind {
    pub const ALL: [HamiltonianKind; 8] = [
        HamiltonianKind::H0,
        HamiltonianKind::H1,
        HamiltonianKind::H2,
        HamiltonianKind::H3,
        HamiltonianKind::H4,
        HamiltonianKind::H5,
        HamiltonianKind::H6,
        HamiltonianKind::H7,
    ];

    pub fn name(self) -> &'static str {
        match self {
            HamiltonianKind::H0 => "H0",
            HamiltonianKind::H1 => "H1",
            HamiltonianKind::H2 => "H2",
            HamiltonianKind::H3 => "H3",
            HamiltonianKind::H4 => "H4",
            HamiltonianKind::H5 => "H5",
            HamiltonianKind::H6 => "H6",
            HamiltonianKind::H7 => "H7",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|k| k.name().eq_ignore_ascii_case(s))
    }

    fn algebra(self) -> Kind {
        match self {
            HamiltonianKind::H0 | HamiltonianKind::H1 | HamiltonianKind::H2 | HamiltonianKind::H3 => Kind::Hecke,
            _ => Kind::Bmw,
        }
    }
}

/// An open chain of `sites` copies of `V` (plus an optional quantum factor `W`
/// carried by the left boundary). Transfer matrices are built on `sites + 1`
/// copies of `V`; the last copy is traced out.
#[derive(Debug, Clone)]
pub struct ChainModel {
    rep: Representation,
    sites: usize,
    left: BoundarySolution,
    right: RightBoundary,
}

fn rational_like(kind: BoundaryKind) -> bool {
    matches!(kind, BoundaryKind::Rational | BoundaryKind::Evaluation | BoundaryKind::Polynomial)
}

impl ChainModel {
    pub fn new(rep: Representation, sites: usize, left: BoundarySolution, right: RightBoundary) -> Result<Self> {
        if sites == 0 {
            return Err(Error::InvalidArgument("a chain needs at least one site".into()));
        }
        let n = rep.n();
        match left.factors() {
            [d] if *d == n => {}
            [d, _] if *d == n => {}
            f => return Err(Error::Shape(format!("left boundary factors {f:?} incompatible with N = {n}"))),
        }
        if let RightBoundary::Conjugated { solution, .. } = &right {
            if solution.factors() != [n] {
                return Err(Error::Shape("the right boundary must act on a single copy of V".into()));
            }
        }
        Ok(ChainModel { rep, sites, left, right })
    }

    pub fn rep(&self) -> &Representation {
        &self.rep
    }

    pub fn sites(&self) -> usize {
        self.sites
    }

    pub fn left(&self) -> &BoundarySolution {
        &self.left
    }

    pub fn right(&self) -> &RightBoundary {
        &self.right
    }

    pub fn quantum_factor(&self) -> Option<usize> {
        self.left.factors().get(1).copied()
    }

    /// Shape with `k` copies of `V` followed by `W` when present.
    pub fn shape(&self, k: usize) -> Vec<usize> {
        let mut s = self.rep.shape(k);
        if let Some(w) = self.quantum_factor() {
            s.push(w);
        }
        s
    }

    fn boundary_sites(&self, k: usize) -> Vec<usize> {
        match self.quantum_factor() {
            Some(_) => alloc::vec![1, k + 1],
            None => alloc::vec![1],
        }
    }

    fn left_at(&self, x: &Scalar, k: usize) -> Result<Matrix> {
        place_boundary(&self.left.k(x)?, &self.shape(k), &self.boundary_sites(k))
    }

    /// `ȳ_k(x) = R̂_{k−1}(x)⋯R̂₁(x)K₁(x)R̂₁(x)⋯R̂_{k−1}(x)` on `k` copies of `V`.
    pub fn dress_level(&self, x: &Scalar, k: usize) -> Result<Matrix> {
        if k == 0 {
            return Err(Error::InvalidArgument("dressing level must be ≥ 1".into()));
        }
        let shape = self.shape(k);
        let rx = baxt(&self.rep, x)?;
        let mut y = self.left_at(x, k)?;
        for m in 1..k {
            let r = embed(&rx, m, &shape)?;
            y = &(&r * &y) * &r;
        }
        Ok(y)
    }

    /// `ȳ_n(x)` with `n = sites + 1`.
    pub fn dress(&self, x: &Scalar) -> Result<Matrix> {
        self.dress_level(x, self.sites + 1)
    }

    fn trace_last(&self, e: &Matrix) -> Result<Matrix> {
        weighted_partial_trace(e, self.sites + 1, self.rep.d_op())
    }

    /// `τ(x) = Tr_{𝒟(n)} ȳ_n(x)`.
    pub fn tau(&self, x: &Scalar) -> Result<Matrix> {
        self.trace_last(&self.dress(x)?)
    }

    /// `t(x) = Tr_{𝒟(n)}(ȳ_n(x)K̃_n(x))`.
    pub fn t_full(&self, x: &Scalar) -> Result<Matrix> {
        let n = self.sites + 1;
        let y = self.dress(x)?;
        if self.right.is_trivial() {
            return self.trace_last(&y);
        }
        let kt = embed(&self.right.k(self.rep.n(), x)?, n, &self.shape(n))?;
        self.trace_last(&(&y * &kt))
    }

    /// Reflection equation for the dressed `ȳ_k` with `R̂_k` on sites `(k, k+1)`.
    pub fn dressed_re_residual(&self, k: usize, x: &Scalar, z: &Scalar) -> Result<Residual> {
        let shape = self.shape(k + 1);
        let lift = |m: &Matrix| -> Result<Matrix> {
            // ȳ_k acts on the first k copies (and W); pad with the identity on copy k+1
            let mut sites: Vec<usize> = (1..=k).collect();
            if self.quantum_factor().is_some() {
                sites.push(k + 2);
            }
            crate::linalg::embed_at(m, &sites, &shape)
        };
        let yx = lift(&self.dress_level(x, k)?)?;
        let yz = lift(&self.dress_level(z, k)?)?;
        let r_ratio = embed(&baxt(&self.rep, &x.try_div(z)?)?, k, &shape)?;
        let r_prod = embed(&baxt(&self.rep, &(x * z))?, k, &shape)?;
        let lhs = &(&(&r_ratio * &yx) * &r_prod) * &yz;
        let rhs = &(&(&yz * &r_prod) * &yx) * &r_ratio;
        compare(&lhs, &rhs)
    }

    /// `[t(x), t(z)] = 0`.
    pub fn transfer_commutator(&self, x: &Scalar, z: &Scalar) -> Result<Residual> {
        let (tx, tz) = (self.t_full(x)?, self.t_full(z)?);
        compare(&(&tx * &tz), &(&tz * &tx))
    }

    /// Bond operator on `V⊗V`: `R̂` or `R̂ + λν/(ν+a)K̂`.
    pub fn bond(&self) -> Result<Matrix> {
        match self.rep.kind() {
            Kind::Hecke => Ok(self.rep.r().clone()),
            Kind::Bmw => Ok(self.rep.r() + &self.rep.khat().scale(&bmw_bond_coefficient(&self.rep)?)),
        }
    }

    fn check_kind(&self, kind: HamiltonianKind) -> Result<()> {
        if kind.algebra() != self.rep.kind() {
            return Err(Error::Unsupported(format!(
                "{} needs a {:?} representation, got {}",
                kind.name(),
                kind.algebra(),
                self.rep.name()
            )));
        }
        let left = self.left.kind;
        let ok = match kind {
            HamiltonianKind::H1 | HamiltonianKind::H5 => left == BoundaryKind::Trivial && self.right.is_trivial(),
            HamiltonianKind::H2 | HamiltonianKind::H4 => rational_like(left) && self.right.is_trivial(),
            HamiltonianKind::H3 | HamiltonianKind::H7 => rational_like(left) && !self.right.is_trivial(),
            HamiltonianKind::H0 | HamiltonianKind::H6 => self.left.is_regular(),
        };
        if ok {
            Ok(())
        } else {
            Err(Error::Unsupported(format!(
                "{} is not available for a {} left boundary with {} right boundary",
                kind.name(),
                left.name(),
                if self.right.is_trivial() { "trivial" } else { "conjugated" }
            )))
        }
    }

    /// The local Hamiltonian of the given kind, additive constants dropped.
    pub fn hamiltonian(&self, kind: HamiltonianKind) -> Result<Matrix> {
        self.check_kind(kind)?;
        let sites = self.sites;
        let shape = self.shape(sites);
        let bond = self.bond()?;
        let mut h = Matrix::zeros(&shape);
        for m in 1..sites {
            h = &h + &embed(&bond, m, &shape)?;
        }
        if self.left.kind != BoundaryKind::Trivial {
            let term = self.left.boundary_derivative_term(self.rep.lambda())?;
            h = &h + &place_boundary(&term, &shape, &self.boundary_sites(sites))?;
        }
        let general = matches!(kind, HamiltonianKind::H0 | HamiltonianKind::H6);
        if general || !self.right.is_trivial() {
            let n = sites + 1;
            let big = self.shape(n);
            let kt1 = self.right.k(self.rep.n(), &Scalar::one())?;
            let xi_p = (self.rep.d_op() * &kt1).trace();
            if xi_p.is_zero() {
                return Err(Error::Degenerate("Tr_𝒟 K̃(1) = 0".into()));
            }
            let prod = &embed(&bond, sites, &big)? * &embed(&kt1, n, &big)?;
            let tr = self.trace_last(&prod)?;
            h = &h + &tr.scale(&xi_p.inv()?);
        }
        Ok(h)
    }

    /// `[H, t(z)] = 0` for every sample `z`.
    pub fn h_commutator(&self, kind: HamiltonianKind, zs: &[Scalar]) -> Result<Residual> {
        let h = self.hamiltonian(kind)?;
        let mut res = Residual::zero();
        for z in zs {
            let t = self.t_full(z)?;
            res = res.and(compare(&(&h * &t), &(&t * &h))?);
        }
        Ok(res)
    }

    pub fn check_h_commutes(&self, kind: HamiltonianKind, zs: &[Scalar]) -> Result<bool> {
        Ok(self.h_commutator(kind, zs)?.is_zero())
    }
}

/// `λν/(ν + a)`.
pub fn bmw_bond_coefficient(rep: &Representation) -> Result<Scalar> {
    let nu = rep.nu()?;
    (rep.lambda() * nu)
        .try_div(&(nu + rep.a()))
        .map_err(|_| Error::Pole("ν + a = 0".into()))
}

/// Exact part of a spectrum: characteristic polynomial, rational roots with
/// multiplicities, the cofactor left after removing them and its square-free
/// decomposition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactSpectrum {
    pub char_poly: Poly,
    pub rational_roots: Vec<(Scalar, usize)>,
    pub remainder: Poly,
    pub remainder_factors: Vec<(Poly, usize)>,
}

pub fn exact_spectrum(h: &Matrix) -> ExactSpectrum {
    let char_poly = char_polynomial(h);
    let (mut roots, rest) = rational_roots(&char_poly);
    // square-free parts are smaller, so the rational root search reaches further
    let mut remainder_factors = Vec::new();
    for (f, m) in square_free(&rest) {
        let (more, g) = rational_roots(&f);
        for (r, k) in more {
            match roots.iter_mut().find(|(s, _)| *s == r) {
                Some(e) => e.1 += k * m,
                None => roots.push((r, k * m)),
            }
        }
        if g.degree().unwrap_or(0) > 0 {
            remainder_factors.push((g, m));
        }
    }
    roots.sort_by(|a, b| a.0.to_f64().total_cmp(&b.0.to_f64()));
    let remainder = remainder_factors
        .iter()
        .fold(Poly::one(), |acc, (g, m)| (0..*m).fold(acc, |x, _| x.mul(g)));
    ExactSpectrum { char_poly, rational_roots: roots, remainder, remainder_factors }
}
