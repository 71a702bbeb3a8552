use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Dense square matrix over [`Scalar`] acting on a tensor product space.
///
/// `factors` lists the tensor-factor dimensions; their product is `dim`.
/// Entries are stored row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    dim: usize,
    factors: Vec<usize>,
    entries: Vec<Scalar>,
}

/// Location and value of a nonzero residual entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub row: usize,
    pub col: usize,
    pub value: Scalar,
}

impl Matrix {
    pub fn new(factors: &[usize], entries: Vec<Scalar>) -> Result<Self> {
        let dim: usize = factors.iter().product();
        if entries.len() != dim * dim {
            return Err(Error::Shape(format!(
                "{} entries for factors {:?} (dim {dim})",
                entries.len(),
                factors
            )));
        }
        Ok(Matrix { dim, factors: factors.to_vec(), entries })
    }

    pub fn from_fn(factors: &[usize], mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let dim: usize = factors.iter().product();
        let mut entries = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                entries.push(f(i, j));
            }
        }
        Matrix { dim, factors: factors.to_vec(), entries }
    }

    pub fn from_rows(factors: &[usize], rows: &[&[Scalar]]) -> Result<Self> {
        let entries: Vec<Scalar> = rows.iter().flat_map(|r| r.iter().cloned()).collect();
        let m = Self::new(factors, entries)?;
        if rows.iter().any(|r| r.len() != m.dim) {
            return Err(Error::Shape("ragged rows".into()));
        }
        Ok(m)
    }

    /// Convenience for tests and fixed tables: small integer fractions.
    pub fn from_fracs(factors: &[usize], rows: &[&[(i64, i64)]]) -> Result<Self> {
        let entries = rows
            .iter()
            .flat_map(|r| r.iter().map(|&(p, q)| Scalar::from_frac(p, q)))
            .collect();
        Self::new(factors, entries)
    }

    pub fn zeros(factors: &[usize]) -> Self {
        let dim: usize = factors.iter().product();
        Matrix { dim, factors: factors.to_vec(), entries: vec![Scalar::zero(); dim * dim] }
    }

    pub fn identity(factors: &[usize]) -> Self {
        Self::scalar_identity(factors, &Scalar::one())
    }

    pub fn scalar_identity(factors: &[usize], s: &Scalar) -> Self {
        let mut m = Self::zeros(factors);
        for i in 0..m.dim {
            m.entries[i * m.dim + i] = s.clone();
        }
        m
    }

    /// 1×1 matrix over the empty tensor product.
    pub fn scalar(s: Scalar) -> Self {
        Matrix { dim: 1, factors: Vec::new(), entries: vec![s] }
    }

    pub fn diag(values: &[Scalar]) -> Self {
        let mut m = Self::zeros(&[values.len()]);
        for (i, v) in values.iter().enumerate() {
            m.entries[i * values.len() + i] = v.clone();
        }
        m
    }

    /// Matrix unit `e_ij` on a single factor of dimension `n`.
    pub fn unit(n: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zeros(&[n]);
        m.entries[i * n + j] = Scalar::one();
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn factors(&self) -> &[usize] {
        &self.factors
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.entries[i * self.dim + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.entries[i * self.dim..(i + 1) * self.dim]
    }

    /// Same entries, new tensor shape (product must be unchanged).
    pub fn with_factors(mut self, factors: &[usize]) -> Result<Self> {
        let dim: usize = factors.iter().product();
        if dim != self.dim {
            return Err(Error::Shape(format!("factors {factors:?} do not multiply to {}", self.dim)));
        }
        self.factors = factors.to_vec();
        Ok(self)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.scalar_multiple_of_identity().is_some_and(|s| s.is_one())
    }

    /// `Some(s)` when the matrix equals `s·I`.
    pub fn scalar_multiple_of_identity(&self) -> Option<Scalar> {
        let s = self.get(0, 0).clone();
        for i in 0..self.dim {
            for j in 0..self.dim {
                let e = self.get(i, j);
                if (i == j && *e != s) || (i != j && !e.is_zero()) {
                    return None;
                }
            }
        }
        Some(s)
    }

    /// `Some(s)` with `self = s·other`, when `other` is nonzero and such `s` exists.
    pub fn ratio_to(&self, other: &Matrix) -> Option<Scalar> {
        if self.dim != other.dim {
            return None;
        }
        let k = other.entries.iter().position(|e| !e.is_zero())?;
        let s = &self.entries[k] / &other.entries[k];
        self.entries
            .iter()
            .zip(&other.entries)
            .all(|(a, b)| *a == &s * b)
            .then_some(s)
    }

    pub fn first_nonzero(&self) -> Option<Witness> {
        let k = self.entries.iter().position(|e| !e.is_zero())?;
        Some(Witness { row: k / self.dim, col: k % self.dim, value: self.entries[k].clone() })
    }

    pub fn trace(&self) -> Scalar {
        let mut acc = Scalar::zero();
        for i in 0..self.dim {
            acc = acc + self.get(i, i);
        }
        acc
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(&self.factors, |i, j| self.get(j, i).clone())
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        if s.is_one() {
            return self.clone();
        }
        Matrix {
            dim: self.dim,
            factors: self.factors.clone(),
            entries: self.entries.iter().map(|e| e * s).collect(),
        }
    }

    /// `self + s·I`
    pub fn shift(&self, s: &Scalar) -> Matrix {
        let mut m = self.clone();
        for i in 0..self.dim {
            let v = m.get(i, i) + s;
            m.set(i, i, v);
        }
        m
    }

    fn check_same_dim(&self, other: &Matrix) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::Shape(format!("dimensions {} and {} differ", self.dim, other.dim)));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Matrix) -> Result<Matrix> {
        self.check_same_dim(other)?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.try_add(b))
            .collect::<Result<_>>()?;
        Ok(Matrix { dim: self.dim, factors: self.factors.clone(), entries })
    }

    pub fn try_sub(&self, other: &Matrix) -> Result<Matrix> {
        self.check_same_dim(other)?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.try_sub(b))
            .collect::<Result<_>>()?;
        Ok(Matrix { dim: self.dim, factors: self.factors.clone(), entries })
    }

    /// Product; the result keeps the left operand's factor metadata.
    pub fn try_mul(&self, other: &Matrix) -> Result<Matrix> {
        self.check_same_dim(other)?;
        let n = self.dim;
        let mut out = vec![Scalar::zero(); n * n];
        for i in 0..n {
            let acc = &mut out[i * n..(i + 1) * n];
            for k in 0..n {
                let a = &self.entries[i * n + k];
                if a.is_zero() {
                    continue;
                }
                let row = &other.entries[k * n..(k + 1) * n];
                for (slot, b) in acc.iter_mut().zip(row) {
                    if !b.is_zero() {
                        *slot = slot.try_add(&a.try_mul(b)?)?;
                    }
                }
            }
        }
        Ok(Matrix { dim: n, factors: self.factors.clone(), entries: out })
    }

    pub fn pow(&self, k: u32) -> Matrix {
        let mut acc = Matrix::identity(&self.factors);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn commutator(&self, other: &Matrix) -> Result<Matrix> {
        self.try_mul(other)?.try_sub(&other.try_mul(self)?)
    }

    /// Radicand shared by all irrational entries (0 if all rational).
    pub fn radicand(&self) -> u64 {
        self.entries.iter().map(Scalar::radicand).find(|&d| d != 0).unwrap_or(0)
    }
}

/// True iff `AB − BA` is exactly zero.
pub fn commutator_is_zero(a: &Matrix, b: &Matrix) -> Result<bool> {
    Ok(a.commutator(b)?.is_zero())
}

macro_rules! matrix_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl<'a> $tr<&'a Matrix> for &'a Matrix {
            type Output = Matrix;
            fn $method(self, rhs: &'a Matrix) -> Matrix {
                match self.$checked(rhs) {
                    Ok(m) => m,
                    Err(e) => panic!("{e}"),
                }
            }
        }
        impl $tr<Matrix> for Matrix {
            type Output = Matrix;
            fn $method(self, rhs: Matrix) -> Matrix {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a Matrix> for Matrix {
            type Output = Matrix;
            fn $method(self, rhs: &'a Matrix) -> Matrix {
                (&self).$method(rhs)
            }
        }
        impl<'a> $tr<Matrix> for &'a Matrix {
            type Output = Matrix;
            fn $method(self, rhs: Matrix) -> Matrix {
                self.$method(&rhs)
            }
        }
    };
}

matrix_binop!(Add, add, try_add);
matrix_binop!(Sub, sub, try_sub);
matrix_binop!(Mul, mul, try_mul);

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        self.scale(&Scalar::from_int(-1))
    }
}

impl Neg for Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        -&self
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.dim {
            f.write_str("[")?;
            for j in 0..self.dim {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            f.write_str("]\n")?;
        }
        Ok(())
    }
}
