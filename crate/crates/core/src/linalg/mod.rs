//! Dense exact linear algebra on tensor-product spaces.

mod elim;
mod matrix;
mod poly;
mod tensor;

pub use elim::{determinant, inverse, rank, rank_of_rows, solve};
pub use matrix::{commutator_is_zero, Matrix, Witness};
pub use poly::{
    annihilates, char_polynomial, char_polynomial_faddeev, gcd, minimal_polynomial, rational_roots, square_free,
    Poly,
};
pub use tensor::{embed, embed_at, kron, partial_trace, permutation, swap, weighted_partial_trace};
