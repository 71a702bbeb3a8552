//! Residual bookkeeping shared by every identity checker.

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::Scalar;

/// First entry at which two sides of an identity differ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub row: usize,
    pub col: usize,
    pub lhs: Scalar,
    pub rhs: Scalar,
}

/// Outcome of an exact comparison `lhs = rhs`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Residual {
    pub mismatch: Option<Mismatch>,
}

impl Residual {
    pub fn zero() -> Self {
        Residual { mismatch: None }
    }

    pub fn is_zero(&self) -> bool {
        self.mismatch.is_none()
    }

    /// Combines two residuals, keeping the first failure.
    pub fn and(self, other: Residual) -> Residual {
        if self.is_zero() {
            other
        } else {
            self
        }
    }
}

/// Entrywise exact comparison.
pub fn compare(lhs: &Matrix, rhs: &Matrix) -> Result<Residual> {
    if lhs.dim() != rhs.dim() {
        return Err(Error::Shape(alloc::format!("comparing dims {} and {}", lhs.dim(), rhs.dim())));
    }
    let n = lhs.dim();
    for (k, (a, b)) in lhs.entries().iter().zip(rhs.entries()).enumerate() {
        if a != b {
            return Ok(Residual {
                mismatch: Some(Mismatch { row: k / n, col: k % n, lhs: a.clone(), rhs: b.clone() }),
            });
        }
    }
    Ok(Residual::zero())
}

/// Scalar comparison as a 1×1 residual.
pub fn compare_scalar(lhs: &Scalar, rhs: &Scalar) -> Residual {
    if lhs == rhs {
        Residual::zero()
    } else {
        Residual { mismatch: Some(Mismatch { row: 0, col: 0, lhs: lhs.clone(), rhs: rhs.clone() }) }
    }
}
