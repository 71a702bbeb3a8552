//! Exact scalars: rationals, optionally extended by a single real square root.
//!
//! A [`Scalar`] represents `a + b·√d` with `a, b ∈ ℚ` and `d` a square-free
//! integer `≥ 2`. Pure rationals carry `b = 0, d = 0`. The representation is
//! canonical, so structural equality is value equality.
//!
//! Scalars from different extensions can only meet when at least one of them
//! is rational. The `try_*` methods report a mismatch as an error; the
//! operator impls panic on it, like integer overflow in debug builds.

use alloc::format;
use alloc::string::{String, ToString};
use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};
use core::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Float, One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    rat: BigRational,
    rad: BigRational,
    d: u64,
}

impl Scalar {
    pub fn zero() -> Self {
        Self::from_rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    /// `num/den`; panics on a zero denominator.
    pub fn from_frac(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Self::from_rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_rational(r: BigRational) -> Self {
        Scalar { rat: r, rad: BigRational::zero(), d: 0 }
    }

    /// Builds `a + b·√d`, pulling square factors out of `d`.
    pub fn new(a: BigRational, b: BigRational, d: u64) -> Result<Self> {
        if b.is_zero() || d == 0 {
            return Ok(Self::from_rational(a));
        }
        let (outside, kernel) = square_free_split(&BigInt::from(d))?;
        let b = b * BigRational::from_integer(outside);
        let kernel = kernel.to_u64().ok_or(Error::RadicandTooLarge)?;
        if kernel == 1 {
            return Ok(Self::from_rational(a + b));
        }
        Ok(Scalar { rat: a, rad: b, d: kernel })
    }

    /// `√d` itself, for square-free `d ≥ 2` (other `d` are normalized).
    pub fn sqrt_of_int(d: u64) -> Result<Self> {
        Self::new(BigRational::zero(), BigRational::one(), d)
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.rat
    }

    pub fn radical_part(&self) -> &BigRational {
        &self.rad
    }

    /// Square-free radicand, or 0 for a rational value.
    pub fn radicand(&self) -> u64 {
        self.d
    }

    pub fn is_zero(&self) -> bool {
        self.rat.is_zero() && self.rad.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.rad.is_zero() && self.rat.is_one()
    }

    pub fn is_rational(&self) -> bool {
        self.d == 0
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        self.is_rational().then_some(&self.rat)
    }

    fn common_radicand(&self, other: &Scalar) -> Result<u64> {
        match (self.d, other.d) {
            (0, d) | (d, 0) => Ok(d),
            (l, r) if l == r => Ok(l),
            (l, r) => Err(Error::RadicandMismatch { left: l, right: r }),
        }
    }

    fn assemble(rat: BigRational, rad: BigRational, d: u64) -> Self {
        if rad.is_zero() {
            Scalar { rat, rad, d: 0 }
        } else {
            Scalar { rat, rad, d }
        }
    }

    pub fn try_add(&self, other: &Scalar) -> Result<Scalar> {
        let d = self.common_radicand(other)?;
        if d == 0 {
            return Ok(Self::from_rational(&self.rat + &other.rat));
        }
        Ok(Self::assemble(&self.rat + &other.rat, &self.rad + &other.rad, d))
    }

    pub fn try_sub(&self, other: &Scalar) -> Result<Scalar> {
        let d = self.common_radicand(other)?;
        if d == 0 {
            return Ok(Self::from_rational(&self.rat - &other.rat));
        }
        Ok(Self::assemble(&self.rat - &other.rat, &self.rad - &other.rad, d))
    }

    pub fn try_mul(&self, other: &Scalar) -> Result<Scalar> {
        let d = self.common_radicand(other)?;
        if d == 0 {
            return Ok(Self::from_rational(&self.rat * &other.rat));
        }
        let dd = BigRational::from_integer(BigInt::from(d));
        let rat = &self.rat * &other.rat + &self.rad * &other.rad * dd;
        let rad = &self.rat * &other.rad + &self.rad * &other.rat;
        Ok(Self::assemble(rat, rad, d))
    }

    pub fn try_div(&self, other: &Scalar) -> Result<Scalar> {
        let inv = other.inv()?;
        self.try_mul(&inv)
    }

    /// Galois conjugate `a − b√d`.
    pub fn conj(&self) -> Scalar {
        Self::assemble(self.rat.clone(), -&self.rad, self.d)
    }

    /// Field norm `a² − d·b²`.
    pub fn norm(&self) -> BigRational {
        let dd = BigRational::from_integer(BigInt::from(self.d));
        &self.rat * &self.rat - &self.rad * &self.rad * dd
    }

    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_rational() {
            return Ok(Self::from_rational(self.rat.recip()));
        }
        let n = self.norm();
        Ok(Self::assemble(&self.rat / &n, -(&self.rad / &n), self.d))
    }

    /// Integer power; negative exponents require a nonzero base.
    pub fn pow(&self, e: i32) -> Result<Scalar> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = Scalar::one();
        let mut sq = base;
        let mut k = e.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &sq;
            }
            k >>= 1;
            if k > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }

    /// Sign of the real number represented.
    pub fn signum(&self) -> i8 {
        let sa = sign_of(&self.rat);
        let sb = sign_of(&self.rad);
        if sb == 0 {
            return sa;
        }
        if sa == 0 || sa == sb {
            return sb;
        }
        // opposite signs: compare a² with d·b²
        let n = self.norm();
        match sign_of(&n) {
            1 => sa,
            -1 => sb,
            _ => 0,
        }
    }

    /// Square root inside the field the value already lives in (ℚ for
    /// rationals). Returns the root with nonnegative rational part.
    pub fn sqrt_exact(&self) -> Option<Scalar> {
        self.sqrt_in(self.d)
    }

    /// Square root inside the ambient field ℚ(√ambient); `ambient = 0` means ℚ.
    pub fn sqrt_in(&self, ambient: u64) -> Option<Scalar> {
        if self.is_zero() {
            return Some(Scalar::zero());
        }
        if self.d != 0 && ambient != self.d {
            return None;
        }
        if self.is_rational() {
            if let Some(r) = rational_sqrt(&self.rat) {
                return Some(Self::from_rational(r));
            }
            if ambient < 2 {
                return None;
            }
            // a = d·t²  ⇒  √a = t·√d
            let dd = BigRational::from_integer(BigInt::from(ambient));
            let t = rational_sqrt(&(&self.rat / dd))?;
            let root = Scalar::new(BigRational::zero(), t, ambient).ok()?;
            return Some(root);
        }
        // (u + v√d)² = a + b√d  with  u² + d v² = a, 2uv = b
        let r = rational_sqrt(&self.norm())?;
        let two = BigRational::from_integer(BigInt::from(2));
        for cand in [(&self.rat + &r) / &two, (&self.rat - &r) / &two] {
            if let Some(u) = rational_sqrt(&cand) {
                if u.is_zero() {
                    continue;
                }
                let v = &self.rad / (&two * &u);
                let root = Self::assemble(u, v, self.d);
                if &root * &root == *self {
                    return Some(root);
                }
            }
        }
        None
    }

    /// Square root, adjoining `√k` (k the square-free kernel) when the value is
    /// a positive rational without a rational root.
    pub fn sqrt_extend(&self) -> Result<Scalar> {
        if let Some(r) = self.sqrt_exact() {
            return Ok(r);
        }
        if !self.is_rational() {
            return Err(Error::NotSquare(self.to_string()));
        }
        if self.rat.is_negative() {
            return Err(Error::NegativeRadicand(self.to_string()));
        }
        // p/q = p·q / q²
        let pq = self.rat.numer() * self.rat.denom();
        let (outside, kernel) = square_free_split(&pq)?;
        let kernel = kernel.to_u64().ok_or(Error::RadicandTooLarge)?;
        let coeff = BigRational::new(outside, self.rat.denom().clone());
        Scalar::new(BigRational::zero(), coeff, kernel)
    }

    pub fn to_f64(&self) -> f64 {
        let a = self.rat.to_f64().unwrap_or(f64::NAN);
        if self.rad.is_zero() {
            return a;
        }
        let b = self.rad.to_f64().unwrap_or(f64::NAN);
        a + b * Float::sqrt(self.d as f64)
    }
}

fn sign_of(r: &BigRational) -> i8 {
    match r.numer().sign() {
        Sign::Plus => 1,
        Sign::Minus => -1,
        Sign::NoSign => 0,
    }
}

fn int_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

fn rational_sqrt(r: &BigRational) -> Option<BigRational> {
    let n = int_sqrt(r.numer())?;
    let d = int_sqrt(r.denom())?;
    Some(BigRational::new(n, d))
}

const TRIAL_LIMIT: u64 = 1 << 20;

/// Splits a positive integer `n = s²·k` with `k` square-free; returns `(s, k)`.
pub(crate) fn square_free_split(n: &BigInt) -> Result<(BigInt, BigInt)> {
    if !n.is_positive() {
        return Err(Error::InvalidArgument(format!("square-free split of {n}")));
    }
    let mut rest = n.clone();
    let mut outside = BigInt::one();
    let mut kernel = BigInt::one();
    let mut p: u64 = 2;
    while p < TRIAL_LIMIT {
        let bp = BigInt::from(p);
        if &bp * &bp > rest {
            break;
        }
        let mut e = 0u32;
        loop {
            let (quot, rem) = rest.div_rem(&bp);
            if !rem.is_zero() {
                break;
            }
            rest = quot;
            e += 1;
        }
        if e > 0 {
            outside *= bp.pow(e / 2);
            if e % 2 == 1 {
                kernel *= &bp;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if !rest.is_one() {
        if let Some(r) = int_sqrt(&rest) {
            outside *= r;
        } else {
            // Leftover below TRIAL_LIMIT³ without a square factor ≤ TRIAL_LIMIT
            // is either a prime, a product of two primes, or caught above.
            let limit = BigInt::from(TRIAL_LIMIT);
            if p >= TRIAL_LIMIT && rest > &limit * &limit * &limit {
                return Err(Error::RadicandTooLarge);
            }
            kernel *= rest;
        }
    }
    Ok((outside, kernel))
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl<'a> $tr<&'a Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'a Scalar) -> Scalar {
                match self.$checked(rhs) {
                    Ok(v) => v,
                    Err(e) => panic!("{e}"),
                }
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'a Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
        impl<'a> $tr<Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);
forward_binop!(Div, div, try_div);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::assemble(-self.rat, -self.rad, self.d)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::assemble(-&self.rat, -&self.rad, self.d)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl From<BigRational> for Scalar {
    fn from(r: BigRational) -> Self {
        Scalar::from_rational(r)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rad.is_zero() {
            return write!(f, "{}", self.rat);
        }
        if !self.rat.is_zero() {
            write!(f, "{}", self.rat)?;
            if self.rad.is_positive() {
                f.write_str("+")?;
            }
        }
        if self.rad.is_one() {
            write!(f, "sqrt({})", self.d)
        } else if (-&self.rad).is_one() {
            write!(f, "-sqrt({})", self.d)
        } else {
            write!(f, "{}*sqrt({})", self.rad, self.d)
        }
    }
}

fn parse_rational(s: &str) -> Option<BigRational> {
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().ok()?;
    let den: BigInt = den.parse().ok()?;
    if den.is_zero() {
        return None;
    }
    Some(BigRational::new(num, den))
}

impl FromStr for Scalar {
    type Err = Error;

    /// Accepts `p`, `p/q`, `r/s*sqrt(d)`, and `p/q±r/s*sqrt(d)`.
    fn from_str(text: &str) -> Result<Self> {
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || Error::Parse(text.to_string());
        if s.is_empty() {
            return Err(bad());
        }
        let Some(sq) = s.find("sqrt(") else {
            return parse_rational(&s).map(Scalar::from_rational).ok_or_else(bad);
        };
        if !s.ends_with(')') {
            return Err(bad());
        }
        let d: u64 = s[sq + 5..s.len() - 1].parse().map_err(|_| bad())?;
        let head = &s[..sq];
        // the radical term starts at the last sign that is not the leading one
        let split = head
            .char_indices()
            .filter(|&(i, c)| i > 0 && (c == '+' || c == '-'))
            .map(|(i, _)| i)
            .next_back()
            .unwrap_or(0);
        let (rat_txt, rad_txt) = head.split_at(split);
        let rat = if rat_txt.is_empty() {
            BigRational::zero()
        } else {
            parse_rational(rat_txt).ok_or_else(bad)?
        };
        let coeff = rad_txt.strip_suffix('*').unwrap_or(rad_txt);
        let coeff = match coeff {
            "" | "+" => BigRational::one(),
            "-" => -BigRational::one(),
            c => parse_rational(c.strip_prefix('+').unwrap_or(c)).ok_or_else(bad)?,
        };
        if !rad_txt.is_empty() && !rad_txt.ends_with('*') && !matches!(rad_txt, "+" | "-") {
            return Err(bad());
        }
        Scalar::new(rat, coeff, d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(t: &str) -> Scalar {
        t.parse().unwrap()
    }

    #[test]
    fn rational_arithmetic() {
        assert_eq!(s("1/2") + s("1/3"), s("5/6"));
        assert_eq!(s("3/4").inv().unwrap(), s("4/3"));
        assert_eq!(s("-2/4"), Scalar::from_frac(-1, 2));
    }

    #[test]
    fn conjugate_product_collapses_to_rational() {
        let a = s("2+sqrt(2)");
        let b = s("2-sqrt(2)");
        let p = &a * &b;
        assert_eq!(p, Scalar::from_int(2));
        assert!(p.is_rational());
    }

    #[test]
    fn errors_are_explicit() {
        assert_eq!(Scalar::zero().inv(), Err(Error::DivisionByZero));
        assert_eq!(s("1").try_div(&Scalar::zero()), Err(Error::DivisionByZero));
        let e = s("sqrt(2)").try_add(&s("sqrt(3)"));
        assert_eq!(e, Err(Error::RadicandMismatch { left: 2, right: 3 }));
        // rational operands mix with any extension
        assert!(s("1/2").try_mul(&s("sqrt(3)")).is_ok());
    }

    #[test]
    fn radicand_normalization() {
        assert_eq!(s("sqrt(8)"), s("2*sqrt(2)"));
        assert_eq!(s("3*sqrt(4)"), Scalar::from_int(6));
        assert_eq!(s("5+0*sqrt(7)").radicand(), 0);
        assert_eq!(s("1*sqrt(1)"), Scalar::one());
        assert_eq!(s("sqrt(0)"), Scalar::zero());
    }

    #[test]
    fn square_roots() {
        assert_eq!(s("1/4").sqrt_exact(), Some(s("1/2")));
        assert_eq!(s("2").sqrt_in(2), Some(s("sqrt(2)")));
        assert_eq!(s("3").sqrt_in(2), None);
        assert_eq!(s("2").sqrt_exact(), None);
        assert_eq!(s("1/8").sqrt_extend().unwrap(), s("1/4*sqrt(2)"));
        assert!(matches!(s("-1/16").sqrt_extend(), Err(Error::NegativeRadicand(_))));
        // (1 + √2)² = 3 + 2√2
        let r = s("3+2*sqrt(2)").sqrt_exact().unwrap();
        assert_eq!(&r * &r, s("3+2*sqrt(2)"));
        assert_eq!(s("3+sqrt(2)").sqrt_exact(), None);
    }

    #[test]
    fn signum_of_mixed_terms() {
        assert_eq!(s("1-sqrt(2)").signum(), -1);
        assert_eq!(s("3/2-sqrt(2)").signum(), 1);
        assert_eq!(s("-3/2+sqrt(2)").signum(), -1);
        assert_eq!(Scalar::zero().signum(), 0);
    }

    #[test]
    fn display_round_trips() {
        for t in ["0", "-7/3", "1/4*sqrt(2)", "1/2-3*sqrt(5)", "-1+sqrt(6)"] {
            let v = s(t);
            assert_eq!(s(&v.to_string()), v);
        }
        assert_eq!(s("-1/2+1/3*sqrt(2)").to_string(), "-1/2+1/3*sqrt(2)");
        assert!("1/0".parse::<Scalar>().is_err());
        assert!("abc".parse::<Scalar>().is_err());
        assert!("2*sqrt(x)".parse::<Scalar>().is_err());
    }

    #[test]
    fn powers() {
        assert_eq!(s("2").pow(-3).unwrap(), s("1/8"));
        assert_eq!(s("sqrt(2)").pow(4).unwrap(), s("4"));
        assert_eq!(s("5").pow(0).unwrap(), Scalar::one());
        assert!(Scalar::zero().pow(-1).is_err());
    }
}
