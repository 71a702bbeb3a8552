//! Tensor-product plumbing: Kronecker products, site embeddings, partial traces.
//!
//! Sites are 1-based throughout, matching the usual `R̂_n` notation.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::matrix::Matrix;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Row-major strides of a tensor shape.
fn strides(shape: &[usize]) -> Vec<usize> {
    let mut s = vec![1; shape.len()];
    for k in (0..shape.len().saturating_sub(1)).rev() {
        s[k] = s[k + 1] * shape[k + 1];
    }
    s
}

fn digits(mut index: usize, shape: &[usize], out: &mut [usize]) {
    for k in (0..shape.len()).rev() {
        out[k] = index % shape[k];
        index /= shape[k];
    }
}

/// `A ⊗ B` with `A` as the major index.
pub fn kron(a: &Matrix, b: &Matrix) -> Matrix {
    let (da, db) = (a.dim(), b.dim());
    let mut factors = a.factors().to_vec();
    factors.extend_from_slice(b.factors());
    let mut m = Matrix::zeros(&factors);
    for ia in 0..da {
        for ja in 0..da {
            let x = a.get(ia, ja);
            if x.is_zero() {
                continue;
            }
            for ib in 0..db {
                for jb in 0..db {
                    let y = b.get(ib, jb);
                    if !y.is_zero() {
                        m.set(ia * db + ib, ja * db + jb, x * y);
                    }
                }
            }
        }
    }
    m
}

/// Flip operator on `V_a ⊗ V_b`, factors `[da, db]` to `[db, da]`.
pub fn swap(da: usize, db: usize) -> Matrix {
    let mut m = Matrix::zeros(&[da, db]);
    for i in 0..da {
        for j in 0..db {
            m.set(j * da + i, i * db + j, Scalar::one());
        }
    }
    m
}

/// Permutation `P` on `V ⊗ V`.
pub fn permutation(n: usize) -> Matrix {
    swap(n, n)
}

fn check_site(site: usize, shape: &[usize]) -> Result<()> {
    if site == 0 || site > shape.len() {
        return Err(Error::Shape(format!("site {site} outside 1..={}", shape.len())));
    }
    Ok(())
}

/// `I ⊗ … ⊗ op ⊗ … ⊗ I` with `op` on the consecutive factors starting at `site`.
pub fn embed(op: &Matrix, site: usize, shape: &[usize]) -> Result<Matrix> {
    check_site(site, shape)?;
    let k = op.factors().len();
    let start = site - 1;
    if start + k > shape.len() || shape[start..start + k] != *op.factors() {
        return Err(Error::Shape(format!(
            "operator factors {:?} do not fit shape {:?} at site {site}",
            op.factors(),
            shape
        )));
    }
    let before: usize = shape[..start].iter().product();
    let after: usize = shape[start + k..].iter().product();
    let left = kron(&Matrix::identity(&shape[..start]), op);
    let full = kron(&left, &Matrix::identity(&shape[start + k..]));
    debug_assert_eq!(full.dim(), before * op.dim() * after);
    full.with_factors(shape)
}

/// Places `op` (with one factor per entry of `sites`) on arbitrary, distinct sites.
pub fn embed_at(op: &Matrix, sites: &[usize], shape: &[usize]) -> Result<Matrix> {
    if sites.len() != op.factors().len() {
        return Err(Error::Shape(format!(
            "{} sites for an operator with {} factors",
            sites.len(),
            op.factors().len()
        )));
    }
    for (k, &s) in sites.iter().enumerate() {
        check_site(s, shape)?;
        if shape[s - 1] != op.factors()[k] || sites[..k].contains(&s) {
            return Err(Error::Shape(format!("site list {sites:?} does not match shape {shape:?}")));
        }
    }
    let dim: usize = shape.iter().product();
    let full_strides = strides(shape);
    let op_shape = op.factors();
    let mut m = Matrix::zeros(shape);
    let mut row_digits = vec![0; shape.len()];
    let mut op_digits = vec![0; op_shape.len()];
    for r in 0..dim {
        digits(r, shape, &mut row_digits);
        let mut op_row = 0;
        let mut base = r;
        for (k, &s) in sites.iter().enumerate() {
            op_row = op_row * op_shape[k] + row_digits[s - 1];
            base -= row_digits[s - 1] * full_strides[s - 1];
        }
        for op_col in 0..op.dim() {
            let v = op.get(op_row, op_col);
            if v.is_zero() {
                continue;
            }
            digits(op_col, op_shape, &mut op_digits);
            let c = sites
                .iter()
                .zip(&op_digits)
                .fold(base, |acc, (&s, &d)| acc + d * full_strides[s - 1]);
            m.set(r, c, v.clone());
        }
    }
    Ok(m)
}

/// `Tr_site(embed(W, site)·E)`; the traced factor is removed from the shape.
pub fn weighted_partial_trace(e: &Matrix, site: usize, w: &Matrix) -> Result<Matrix> {
    let shape = e.factors();
    check_site(site, shape)?;
    let n = shape[site - 1];
    if w.dim() != n {
        return Err(Error::Shape(format!("weight of dim {} on factor of dim {n}", w.dim())));
    }
    let outer: usize = shape[..site - 1].iter().product();
    let inner: usize = shape[site..].iter().product();
    let mut rest = shape[..site - 1].to_vec();
    rest.extend_from_slice(&shape[site..]);
    let mut out = Matrix::zeros(&rest);
    let full = |o: usize, i: usize, x: usize| (o * n + i) * inner + x;
    for ro in 0..outer {
        for ri in 0..inner {
            let r = ro * inner + ri;
            for co in 0..outer {
                for ci in 0..inner {
                    let mut acc = Scalar::zero();
                    for i in 0..n {
                        for j in 0..n {
                            let wji = w.get(j, i);
                            if wji.is_zero() {
                                continue;
                            }
                            let ev = e.get(full(ro, i, ri), full(co, j, ci));
                            if !ev.is_zero() {
                                acc = acc + wji * ev;
                            }
                        }
                    }
                    out.set(r, co * inner + ci, acc);
                }
            }
        }
    }
    Ok(out)
}

/// Ordinary partial trace over `site`.
pub fn partial_trace(e: &Matrix, site: usize) -> Result<Matrix> {
    let shape = e.factors();
    check_site(site, shape)?;
    weighted_partial_trace(e, site, &Matrix::identity(&[shape[site - 1]]))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m2(a: i64, b: i64, c: i64, d: i64) -> Matrix {
        Matrix::from_fracs(&[2], &[&[(a, 1), (b, 1)], &[(c, 1), (d, 1)]]).unwrap()
    }

    #[test]
    fn kron_shapes() {
        let i2 = Matrix::identity(&[2]);
        assert_eq!(kron(&i2, &i2), Matrix::identity(&[2, 2]));
        let k = kron(&i2, &Matrix::identity(&[3]));
        assert_eq!(k.dim(), 6);
        assert_eq!(k.factors(), &[2, 3]);
    }

    #[test]
    fn flip_exchanges_factors() {
        let a = m2(1, 2, 3, 4);
        let b = m2(0, -1, 5, 7);
        let p = permutation(2);
        assert_eq!(&(&p * &kron(&a, &b)) * &p, kron(&b, &a));
    }

    #[test]
    fn embed_examples() {
        let r = kron(&m2(1, 2, 3, 4), &m2(2, 0, 1, 1));
        let i2 = Matrix::identity(&[2]);
        assert_eq!(embed(&r, 1, &[2, 2, 2]).unwrap(), kron(&r, &i2));
        assert_eq!(embed(&r, 2, &[2, 2, 2]).unwrap(), kron(&i2, &r));
        assert!(embed(&r, 2, &[2, 3, 3]).is_err());
        assert!(embed(&r, 3, &[2, 2, 2]).is_err());
    }

    #[test]
    fn embed_at_matches_conjugated_embedding() {
        let a = m2(1, 2, 3, 4);
        let b = m2(0, 1, -2, 5);
        let ab = kron(&a, &b);
        let i2 = Matrix::identity(&[2]);
        let got = embed_at(&ab, &[1, 3], &[2, 2, 2]).unwrap();
        assert_eq!(got, kron(&kron(&a, &i2), &b));
        let rev = embed_at(&ab, &[3, 1], &[2, 2, 2]).unwrap();
        assert_eq!(rev, kron(&kron(&b, &i2), &a));
        assert_eq!(embed_at(&ab, &[1, 2], &[2, 2]).unwrap(), ab);
    }

    #[test]
    fn partial_traces() {
        let i4 = Matrix::identity(&[2, 2]);
        let w = Matrix::identity(&[2]);
        assert_eq!(
            weighted_partial_trace(&i4, 2, &w).unwrap(),
            Matrix::scalar_identity(&[2], &Scalar::from_int(2))
        );
        let a = m2(1, 2, 3, 4);
        let b = m2(0, 1, -2, 5);
        let w = m2(3, 1, 0, 2);
        let expect = a.scale(&(&w * &b).trace());
        assert_eq!(weighted_partial_trace(&kron(&a, &b), 2, &w).unwrap(), expect);
        let expect1 = b.scale(&(&w * &a).trace());
        assert_eq!(weighted_partial_trace(&kron(&a, &b), 1, &w).unwrap(), expect1);
        assert!(partial_trace(&i4, 3).is_err());
    }
}
