//! Univariate polynomials over [`Scalar`] and the matrix polynomials built from them.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::matrix::Matrix;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Coefficients stored lowest degree first, trailing zeros trimmed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<Scalar>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly { coeffs: vec![Scalar::one()] }
    }

    /// `t − r`
    pub fn linear(r: &Scalar) -> Self {
        Poly::new(vec![-r, Scalar::one()])
    }

    pub fn from_roots(roots: &[Scalar]) -> Self {
        roots.iter().fold(Poly::one(), |acc, r| acc.mul(&Poly::linear(r)))
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Scalar {
        self.coeffs.get(k).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Scalar {
        self.coeffs.last().cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let lead = self.leading();
        Poly::new(self.coeffs.iter().map(|c| c / &lead).collect())
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new((0..n).map(|k| &self.coeff(k) + &other.coeff(k)).collect())
    }

    pub fn scale(&self, s: &Scalar) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Scalar::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Poly::new(out)
    }

    /// Euclidean division `self = q·d + r`.
    pub fn div_rem(&self, d: &Poly) -> Result<(Poly, Poly)> {
        let dd = d.degree().ok_or(Error::DivisionByZero)?;
        let lead = d.leading();
        let mut r = self.coeffs.clone();
        let Some(sd) = self.degree() else {
            return Ok((Poly::zero(), Poly::zero()));
        };
        if sd < dd {
            return Ok((Poly::zero(), self.clone()));
        }
        let mut q = vec![Scalar::zero(); sd - dd + 1];
        for k in (0..=sd - dd).rev() {
            let c = r[k + dd].try_div(&lead)?;
            if c.is_zero() {
                continue;
            }
            for (j, dj) in d.coeffs.iter().enumerate() {
                r[k + j] = r[k + j].try_sub(&c.try_mul(dj)?)?;
            }
            q[k] = c;
        }
        r.truncate(dd);
        Ok((Poly::new(q), Poly::new(r)))
    }

    pub fn eval(&self, t: &Scalar) -> Scalar {
        self.coeffs.iter().rev().fold(Scalar::zero(), |acc, c| &(&acc * t) + c)
    }

    /// `p(A)` by Horner's rule.
    pub fn eval_matrix(&self, a: &Matrix) -> Matrix {
        let mut acc = Matrix::zeros(a.factors());
        for c in self.coeffs.iter().rev() {
            acc = (&acc * a).shift(c);
        }
        acc
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * &Scalar::from_int(k as i64))
                .collect(),
        )
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_rational)
    }

    /// Approximate coefficients, lowest degree first.
    pub fn to_f64(&self) -> Vec<f64> {
        self.coeffs.iter().map(Scalar::to_f64).collect()
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let body = alloc::format!("{c}");
            let (neg, mag) = match body.strip_prefix('-') {
                Some(rest) if c.is_rational() => (true, String::from(rest)),
                _ => (false, body),
            };
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let unit = c.is_rational() && mag == "1";
            let term = match k {
                0 => mag,
                _ => {
                    let var = if k == 1 { String::from("t") } else { alloc::format!("t^{k}") };
                    if unit {
                        var
                    } else if c.is_rational() {
                        alloc::format!("{mag}*{var}")
                    } else {
                        alloc::format!("({mag})*{var}")
                    }
                }
            };
            f.write_str(&term)?;
        }
        Ok(())
    }
}

/// Monic minimal polynomial by searching for the first linear dependence among
/// `I, A, A², …` (flattened).
pub fn minimal_polynomial(a: &Matrix) -> Poly {
    let n = a.dim();
    let len = n * n;
    // Each stored row: reduced flattened power, combination of powers, pivot column.
    let mut basis: Vec<(Vec<Scalar>, Vec<Scalar>, usize)> = Vec::new();
    let mut power = Matrix::identity(a.factors());
    for k in 0..=n {
        let mut v = power.entries().to_vec();
        let mut combo = vec![Scalar::zero(); n + 1];
        combo[k] = Scalar::one();
        for (bv, bc, piv) in &basis {
            let f = v[*piv].clone();
            if f.is_zero() {
                continue;
            }
            for (x, y) in v.iter_mut().zip(bv) {
                if !y.is_zero() {
                    *x = &*x - &(&f * y);
                }
            }
            for (x, y) in combo.iter_mut().zip(bc) {
                if !y.is_zero() {
                    *x = &*x - &(&f * y);
                }
            }
        }
        match (0..len).find(|&i| !v[i].is_zero()) {
            None => {
                combo.truncate(k + 1);
                return Poly::new(combo);
            }
            Some(piv) => {
                let p = v[piv].clone();
                for x in v.iter_mut().chain(combo.iter_mut()) {
                    *x = &*x / &p;
                }
                basis.push((v, combo, piv));
            }
        }
        power = &power * a;
    }
    unreachable!("Cayley–Hamilton bounds the degree by the dimension")
}

/// Characteristic polynomial `det(t·I − A)` via reduction to Hessenberg form.
pub fn char_polynomial(a: &Matrix) -> Poly {
    let n = a.dim();
    let mut h: Vec<Vec<Scalar>> = (0..n).map(|i| a.row(i).to_vec()).collect();
    for m in 1..n.saturating_sub(1) {
        let Some(p) = (m..n).find(|&i| !h[i][m - 1].is_zero()) else {
            continue;
        };
        if p != m {
            h.swap(p, m);
            for row in h.iter_mut() {
                row.swap(p, m);
            }
        }
        let piv = h[m][m - 1].clone();
        for i in m + 1..n {
            let u = &h[i][m - 1] / &piv;
            if u.is_zero() {
                continue;
            }
            let src = h[m].clone();
            for (x, s) in h[i].iter_mut().zip(&src) {
                *x = &*x - &(&u * s);
            }
            for row in h.iter_mut() {
                let add = &u * &row[i];
                row[m] = &row[m] + &add;
            }
        }
    }
    // p_k(t) = (t − h_kk)p_{k−1} − Σ_{i<k} h_ik (Π_{j=i+1..k} h_{j,j−1}) p_{i−1}
    let mut ps: Vec<Poly> = vec![Poly::one()];
    for k in 0..n {
        let mut pk = Poly::linear(&h[k][k]).mul(&ps[k]);
        let mut prod = Scalar::one();
        for i in (0..k).rev() {
            prod = &prod * &h[i + 1][i];
            if prod.is_zero() {
                break;
            }
            let c = &h[i][k] * &prod;
            if !c.is_zero() {
                pk = pk.add(&ps[i].scale(&-c));
            }
        }
        ps.push(pk);
    }
    ps.pop().unwrap_or_else(Poly::one)
}

/// Characteristic polynomial by the Faddeev–LeVerrier recursion.
pub fn char_polynomial_faddeev(a: &Matrix) -> Poly {
    let n = a.dim();
    let mut coeffs = vec![Scalar::zero(); n + 1];
    coeffs[n] = Scalar::one();
    let mut m = Matrix::zeros(a.factors());
    for k in 1..=n {
        m = (a * &m).shift(&coeffs[n - k + 1]);
        let am = a * &m;
        coeffs[n - k] = -(&am.trace() / &Scalar::from_int(k as i64));
    }
    Poly::new(coeffs)
}

/// Rational roots with multiplicity, and the cofactor left after removing them.
///
/// Only applies to polynomials with rational coefficients; candidates come from
/// the rational root theorem, so huge constant terms are left unfactored.
pub fn rational_roots(p: &Poly) -> (Vec<(Scalar, usize)>, Poly) {
    let mut roots = Vec::new();
    if !p.is_rational() || p.is_zero() {
        return (roots, p.clone());
    }
    let mut rest = p.monic();
    let mut zeros = 0;
    while rest.degree().unwrap_or(0) > 0 && rest.coeff(0).is_zero() {
        rest = Poly::new(rest.coeffs[1..].to_vec());
        zeros += 1;
    }
    if zeros > 0 {
        roots.push((Scalar::zero(), zeros));
    }
    if rest.degree().unwrap_or(0) == 0 {
        return (roots, rest);
    }
    let ints = integer_coefficients(&rest);
    let (Some(num_divs), Some(den_divs)) = (divisors(&ints[0]), divisors(ints.last().unwrap()))
    else {
        return (roots, rest);
    };
    let mut candidates: Vec<BigRational> = Vec::new();
    for d in &num_divs {
        for e in &den_divs {
            for s in [BigRational::new(d.clone(), e.clone()), -BigRational::new(d.clone(), e.clone())] {
                if !candidates.contains(&s) {
                    candidates.push(s);
                }
            }
        }
    }
    candidates.sort();
    for c in candidates {
        let root = Scalar::from_rational(c);
        let lin = Poly::linear(&root);
        let mut mult = 0;
        while rest.degree().unwrap_or(0) > 0 && rest.eval(&root).is_zero() {
            let (q, _) = rest.div_rem(&lin).expect("linear divisor");
            rest = q;
            mult += 1;
        }
        if mult > 0 {
            roots.push((root, mult));
        }
    }
    (roots, rest)
}

fn integer_coefficients(p: &Poly) -> Vec<BigInt> {
    let lcm = p
        .coeffs
        .iter()
        .map(|c| c.as_rational().expect("rational polynomial").denom().clone())
        .fold(BigInt::one(), |acc, d| acc.lcm(&d));
    p.coeffs
        .iter()
        .map(|c| {
            let r = c.as_rational().expect("rational polynomial") * BigRational::from_integer(lcm.clone());
            r.to_integer()
        })
        .collect()
}

const DIVISOR_LIMIT: u64 = 1 << 40;

/// Positive divisors of a nonzero integer below [`DIVISOR_LIMIT`].
fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let n = n.abs().to_u64().filter(|&v| v > 0 && v < DIVISOR_LIMIT)?;
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            small.push(BigInt::from(d));
            if d * d != n {
                large.push(BigInt::from(n / d));
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    Some(small)
}

/// Monic greatest common divisor.
pub fn gcd(a: &Poly, b: &Poly) -> Poly {
    let (mut x, mut y) = (a.clone(), b.clone());
    while !y.is_zero() {
        let (_, r) = x.div_rem(&y).expect("nonzero divisor");
        x = y;
        y = r;
    }
    x.monic()
}

/// Yun's square-free decomposition: monic `(f_i, i)` with `p = lc·∏ f_iⁱ`,
/// constant factors omitted.
pub fn square_free(p: &Poly) -> Vec<(Poly, usize)> {
    let mut out = Vec::new();
    if p.degree().unwrap_or(0) == 0 {
        return out;
    }
    let p = p.monic();
    let dp = p.derivative();
    let mut a = gcd(&p, &dp);
    let mut b = p.div_rem(&a).expect("gcd divides").0;
    let mut c = dp.div_rem(&a).expect("gcd divides").0;
    let mut i = 1;
    loop {
        let d = c.add(&b.derivative().scale(&-Scalar::one()));
        if b.degree().unwrap_or(0) == 0 {
            break;
        }
        a = gcd(&b, &d);
        if a.degree().unwrap_or(0) > 0 {
            out.push((a.clone(), i));
        }
        b = b.div_rem(&a).expect("gcd divides").0;
        c = d.div_rem(&a).expect("gcd divides").0;
        i += 1;
    }
    out
}

/// Checks `p(A) = 0` exactly.
pub fn annihilates(p: &Poly, a: &Matrix) -> bool {
    !p.is_zero() && p.eval_matrix(a).is_zero()
}

impl From<&[Scalar]> for Poly {
    fn from(c: &[Scalar]) -> Self {
        Poly::new(c.to_vec())
    }
}

impl Zero for Poly {
    fn zero() -> Self {
        Poly::zero()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl core::ops::Add for Poly {
    type Output = Poly;
    fn add(self, rhs: Poly) -> Poly {
        Poly::add(&self, &rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(p: i64, q: i64) -> Scalar {
        Scalar::from_frac(p, q)
    }

    #[test]
    fn minimal_polynomial_examples() {
        assert_eq!(minimal_polynomial(&Matrix::identity(&[3])), Poly::linear(&s(1, 1)));
        let d = Matrix::diag(&[s(2, 1), s(2, 1), s(5, 1)]);
        assert_eq!(minimal_polynomial(&d), Poly::from_roots(&[s(2, 1), s(5, 1)]));
    }

    #[test]
    fn char_polynomial_examples() {
        assert_eq!(char_polynomial(&Matrix::identity(&[2])), Poly::from_roots(&[s(1, 1), s(1, 1)]));
        let q = s(7, 3);
        let d = Matrix::diag(&[q.clone(), -q.inv().unwrap()]);
        let expect = Poly::new(vec![s(-1, 1), -(&q - &q.inv().unwrap()), s(1, 1)]);
        assert_eq!(char_polynomial(&d), expect);
        let a = Matrix::from_fracs(
            &[3],
            &[&[(0, 1), (2, 1), (1, 3)], &[(1, 1), (0, 1), (5, 2)], &[(-3, 1), (1, 7), (1, 1)]],
        )
        .unwrap();
        assert_eq!(char_polynomial(&a), char_polynomial_faddeev(&a));
        assert!(annihilates(&char_polynomial(&a), &a));
    }

    #[test]
    fn division_and_roots() {
        let p = Poly::from_roots(&[s(1, 1), s(2, 1), s(2, 1), s(-1, 2), s(0, 1)]);
        let (q, r) = p.div_rem(&Poly::from_roots(&[s(2, 1), s(0, 1)])).unwrap();
        assert!(r.is_zero());
        assert_eq!(q, Poly::from_roots(&[s(1, 1), s(2, 1), s(-1, 2)]));
        let (roots, rest) = rational_roots(&p.mul(&Poly::new(vec![s(-2, 1), s(0, 1), s(1, 1)])));
        assert_eq!(
            roots,
            vec![(s(0, 1), 1), (s(-1, 2), 1), (s(1, 1), 1), (s(2, 1), 2)]
        );
        assert_eq!(rest.degree(), Some(2));
    }

    #[test]
    fn display() {
        let p = Poly::new(vec![s(-1, 1), s(-3, 2), s(1, 1)]);
        assert_eq!(alloc::format!("{p}"), "t^2 - 3/2*t - 1");
    }
}
