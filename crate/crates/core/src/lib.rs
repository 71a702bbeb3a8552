//! Exact R-matrices, baxterization, boundary K-matrices and open-chain
//! transfer matrices over ℚ and real quadratic fields.
//!
//! Every identity is checked by computing a residual matrix and testing it
//! for exact zero.

#![no_std]

extern crate alloc;

pub mod baxter;
pub mod chain;
pub mod check;
pub mod error;
pub mod linalg;
pub mod sample;
pub mod reflection;
pub mod rep;
pub mod scalar;

pub use error::{Error, Result};
pub use linalg::{Matrix, Poly};
pub use scalar::Scalar;
