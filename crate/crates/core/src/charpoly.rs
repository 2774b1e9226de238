//! Polynomials attached to a square matrix `A`:
//!
//! - `det_poly`: the reciprocal characteristic polynomial `det(E - A z)`;
//! - `adj_sum_poly`: the entry sum of the adjugate, `sum(adj(E - A z))`;
//! - `numerator_poly`: the entry sum `sum(adj(E - A z) * A)`, the numerator
//!   of the logarithmic derivative of `1 / det(E - A z)`;
//! - `euler_series_pair`: the same pair of polynomials for `A - E`, whose
//!   ratio is the rational function summing the alternating series over the
//!   nondegenerate chain counts.
//!
//! All coefficients are recovered by evaluating the matrix expression at the
//! integer nodes `z = 0, 1, ..., N` and interpolating, which keeps each step
//! inside plain determinant/adjugate arithmetic.
//!
//! `numerator_poly` is additionally computed a second way, through the
//! identity `z * sum(adj(E - A z) * A) = sum(adj(E - A z)) - N * det(E - A z)`,
//! and the two routes are required to agree exactly.

use crate::matrix::{Matrix, MatrixError};
use crate::poly::{interpolate, Poly};
use crate::scalar::Scalar;
use thiserror::Error;

/// Errors raised while building matrix polynomials.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum CharPolyError {
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    /// Two independent computations of the same polynomial disagreed; this
    /// indicates a bug, never bad input.
    #[error("internal identity violated: {0}")]
    IdentityViolation(String),
}

/// Evaluate `E - A t`.
fn resolvent_at<T: Scalar>(a: &Matrix<T>, t: &T) -> Matrix<T> {
    let n = a.rows();
    Matrix::identity(n)
        .sub(&a.scale(t))
        .expect("shapes agree by construction")
}

/// Interpolate `f(t)` at the nodes `t = 0, 1, ..., N`.
fn interpolate_at_nodes<T: Scalar>(
    n: usize,
    f: impl Fn(&T) -> Result<T, MatrixError>,
) -> Result<Poly<T>, MatrixError> {
    let mut points = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let t = T::from_i64(k as i64);
        let y = f(&t)?;
        points.push((t, y));
    }
    Ok(interpolate(&points))
}

/// `det(E - A z)` as a polynomial of degree at most `N`.
///
/// Its constant coefficient is always 1, and its leading coefficient is
/// `(-1)^N det(A)`.
pub fn det_poly<T: Scalar>(a: &Matrix<T>) -> Result<Poly<T>, MatrixError> {
    let n = square_size(a)?;
    let p = interpolate_at_nodes(n, |t| resolvent_at(a, t).det())?;
    debug_assert!(p.degree().is_some_and(|d| d <= n));
    debug_assert!(p.coeff(0).is_one());
    Ok(p)
}

/// `sum(adj(E - A z))` as a polynomial of degree at most `N - 1`.
///
/// Its constant coefficient is always `N`.
pub fn adj_sum_poly<T: Scalar>(a: &Matrix<T>) -> Result<Poly<T>, MatrixError> {
    let n = square_size(a)?;
    let p = interpolate_at_nodes(n, |t| Ok(resolvent_at(a, t).adjugate()?.sum_entries()))?;
    debug_assert!(p.degree().is_none_or(|d| d < n));
    Ok(p)
}

/// `sum(adj(E - A z) * A)` as a polynomial of degree at most `N - 1`.
///
/// Computed twice — directly, and through
/// `z * sum(adj(E - A z) * A) = sum(adj(E - A z)) - N * det(E - A z)` —
/// and the two results must agree exactly.
pub fn numerator_poly<T: Scalar>(a: &Matrix<T>) -> Result<Poly<T>, CharPolyError> {
    let n = square_size(a)?;
    let direct = interpolate_at_nodes(n, |t| {
        Ok(resolvent_at(a, t).adjugate()?.mul(a)?.sum_entries())
    })?;

    // Second route: (sum(adj(E - A z)) - N det(E - A z)) / z.
    let s = adj_sum_poly(a)?;
    let p = det_poly(a)?;
    let diff = &s - &p.scale(&T::from_i64(n as i64));
    if !diff.coeff(0).is_zero() {
        return Err(CharPolyError::IdentityViolation(
            "sum(adj(E - A z)) - N det(E - A z) must vanish at z = 0".into(),
        ));
    }
    let shifted = Poly::new(diff.coeffs().iter().skip(1).cloned().collect());
    if shifted != direct {
        return Err(CharPolyError::IdentityViolation(
            "the two routes to sum(adj(E - A z) * A) disagree".into(),
        ));
    }
    Ok(direct)
}

/// The polynomial pair `(sum(adj(E - B t)), det(E - B t))` for `B = A - E`.
///
/// Their ratio is the rational function whose power series in `t` has
/// coefficient sums over the nondegenerate chains; its value at `t = -1`
/// (when defined) is the series Euler characteristic.
pub fn euler_series_pair<T: Scalar>(a: &Matrix<T>) -> Result<(Poly<T>, Poly<T>), MatrixError> {
    let n = square_size(a)?;
    let b = a.sub(&Matrix::identity(n))?;
    Ok((adj_sum_poly(&b)?, det_poly(&b)?))
}

fn square_size<T: Scalar>(a: &Matrix<T>) -> Result<usize, MatrixError> {
    if a.is_square() {
        Ok(a.rows())
    } else {
        Err(MatrixError::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        })
    }
}
