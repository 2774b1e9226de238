//! Two Euler characteristics of a finite category, both exact.
//!
//! - `chi_series`: the value at `t = -1` of the rational function
//!   `sum(adj(E - (A - E) t)) / det(E - (A - E) t)`, which sums the
//!   alternating series over nondegenerate chain counts.
//! - `chi_mobius`: the entry sum of `A^{-1}`, defined when `det A != 0`.
//!
//! Each is `None` where undefined (a pole at `t = -1`, respectively a
//! singular adjacency matrix). Whenever both exist they agree; that
//! equality is asserted by the verification layer, not assumed here.

use crate::charpoly::euler_series_pair;
use crate::matrix::{Matrix, MatrixError};
use num_rational::BigRational;
use num_traits::Zero;

/// Both Euler characteristics of one category.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EulerResult {
    /// Series value at `t = -1`, or `None` on a pole.
    pub chi_series: Option<BigRational>,
    /// `sum(A^{-1})`, or `None` when `A` is singular.
    pub chi_mobius: Option<BigRational>,
}

/// Compute both Euler characteristics of the category with adjacency
/// matrix `a`.
pub fn euler_characteristic(a: &Matrix<BigRational>) -> Result<EulerResult, MatrixError> {
    let (num, den) = euler_series_pair(a)?;
    let minus_one = -BigRational::from_integer(1.into());
    let den_val = den.eval(&minus_one);
    let chi_series = if den_val.is_zero() {
        None
    } else {
        Some(num.eval(&minus_one) / den_val)
    };

    let chi_mobius = match a.inverse() {
        Ok(inv) => Some(inv.sum_entries()),
        Err(MatrixError::Singular) => None,
        Err(e) => return Err(e),
    };

    Ok(EulerResult {
        chi_series,
        chi_mobius,
    })
}
