//! Exact elimination: inverses, linear solves, ranks and determinants.

use alloc::format;
use alloc::vec::Vec;

use super::matrix::Matrix;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

type Rows = Vec<Vec<Scalar>>;

fn rows_of(a: &Matrix) -> Rows {
    (0..a.dim()).map(|i| a.row(i).to_vec()).collect()
}

/// Fraction-free Gauss–Jordan on `[A | B]`.
///
/// Each step replaces row `i` by `(p·row_i − m·row_k)/p_prev`, so with integral
/// input all intermediate entries stay integral (Bareiss). Returns `A⁻¹B`.
fn gauss_jordan(a: &Matrix, b: Rows) -> Result<Rows> {
    let n = a.dim();
    let mut left = rows_of(a);
    let mut right = b;
    let mut prev = Scalar::one();
    for k in 0..n {
        let p = (k..n).find(|&r| !left[r][k].is_zero()).ok_or(Error::Singular { stage: k + 1 })?;
        left.swap(k, p);
        right.swap(k, p);
        let pivot = left[k][k].clone();
        let (pivot_left, pivot_right) = (left[k].clone(), right[k].clone());
        for i in 0..n {
            if i == k {
                continue;
            }
            let m = left[i][k].clone();
            let ratio = pivot.try_div(&prev)?;
            let update = |row: &mut Vec<Scalar>, src: &[Scalar]| -> Result<()> {
                for (x, s) in row.iter_mut().zip(src) {
                    if m.is_zero() || s.is_zero() {
                        if !x.is_zero() {
                            *x = x.try_mul(&ratio)?;
                        }
                        continue;
                    }
                    let t = pivot.try_mul(x)?.try_sub(&m.try_mul(s)?)?;
                    *x = t.try_div(&prev)?;
                }
                Ok(())
            };
            update(&mut left[i], &pivot_left)?;
            update(&mut right[i], &pivot_right)?;
        }
        prev = pivot;
    }
    for (i, row) in right.iter_mut().enumerate() {
        let d = left[i][i].clone();
        for x in row.iter_mut() {
            *x = x.try_div(&d)?;
        }
    }
    Ok(right)
}

/// Exact inverse; fails with the elimination stage at which no pivot exists.
pub fn inverse(a: &Matrix) -> Result<Matrix> {
    let n = a.dim();
    let id = rows_of(&Matrix::identity(&[n]));
    let x = gauss_jordan(a, id)?;
    Matrix::new(a.factors(), x.into_iter().flatten().collect())
}

/// Solves `A·X = B` for square invertible `A`; `B` is given as `n` rows.
pub fn solve(a: &Matrix, b: &[Vec<Scalar>]) -> Result<Vec<Vec<Scalar>>> {
    if b.len() != a.dim() {
        return Err(Error::Shape(format!("{} right-hand rows for dim {}", b.len(), a.dim())));
    }
    gauss_jordan(a, b.to_vec())
}

/// Rank by fraction-free forward elimination.
pub fn rank(a: &Matrix) -> usize {
    rank_of_rows(rows_of(a))
}

/// Rank of an arbitrary (possibly rectangular) list of rows.
pub fn rank_of_rows(mut rows: Rows) -> usize {
    let nrows = rows.len();
    let ncols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    let mut prev = Scalar::one();
    for c in 0..ncols {
        let Some(p) = (r..nrows).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let pivot = rows[r][c].clone();
        let pivot_row = rows[r].clone();
        for row in rows.iter_mut().skip(r + 1) {
            let m = row[c].clone();
            for (x, s) in row.iter_mut().zip(&pivot_row).skip(c) {
                *x = (&(&pivot * &*x) - &(&m * s)) / &prev;
            }
        }
        prev = pivot;
        r += 1;
        if r == nrows {
            break;
        }
    }
    r
}

/// Determinant via Bareiss elimination.
pub fn determinant(a: &Matrix) -> Scalar {
    let n = a.dim();
    let mut rows = rows_of(a);
    let mut prev = Scalar::one();
    let mut sign = Scalar::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !rows[i][k].is_zero()) else {
            return Scalar::zero();
        };
        if p != k {
            rows.swap(k, p);
            sign = -sign;
        }
        let pivot = rows[k][k].clone();
        let pivot_row = rows[k].clone();
        for row in rows.iter_mut().skip(k + 1) {
            let m = row[k].clone();
            for (x, s) in row.iter_mut().zip(&pivot_row).skip(k) {
                *x = (&(&pivot * &*x) - &(&m * s)) / &prev;
            }
        }
        prev = pivot;
    }
    if n == 0 {
        return Scalar::one();
    }
    &sign * &rows[n - 1][n - 1]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_examples() {
        let i = Matrix::identity(&[3]);
        assert_eq!(inverse(&i).unwrap(), i);
        let d = Matrix::diag(&[Scalar::from_int(2), Scalar::from_frac(3, 4)]);
        let di = Matrix::diag(&[Scalar::from_frac(1, 2), Scalar::from_frac(4, 3)]);
        assert_eq!(inverse(&d).unwrap(), di);
        assert_eq!(inverse(&Matrix::zeros(&[2])), Err(Error::Singular { stage: 1 }));
        let s = Matrix::from_fracs(&[2], &[&[(1, 1), (2, 1)], &[(2, 1), (4, 1)]]).unwrap();
        assert_eq!(inverse(&s), Err(Error::Singular { stage: 2 }));
    }

    #[test]
    fn inverse_with_pivoting() {
        let a = Matrix::from_fracs(
            &[3],
            &[&[(0, 1), (2, 1), (1, 3)], &[(1, 1), (0, 1), (5, 2)], &[(-3, 1), (1, 7), (0, 1)]],
        )
        .unwrap();
        let ai = inverse(&a).unwrap();
        assert!((&a * &ai).is_identity());
        assert!((&ai * &a).is_identity());
    }

    #[test]
    fn ranks_and_determinants() {
        let a = Matrix::from_fracs(
            &[3],
            &[&[(1, 1), (2, 1), (3, 1)], &[(2, 1), (4, 1), (6, 1)], &[(0, 1), (1, 1), (1, 2)]],
        )
        .unwrap();
        assert_eq!(rank(&a), 2);
        assert!(determinant(&a).is_zero());
        let b = Matrix::from_fracs(&[2], &[&[(0, 1), (1, 1)], &[(3, 1), (5, 1)]]).unwrap();
        assert_eq!(determinant(&b), Scalar::from_int(-3));
        assert_eq!(rank(&Matrix::zeros(&[4])), 0);
    }
}
