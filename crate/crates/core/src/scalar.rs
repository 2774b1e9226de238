//! Scalar abstraction shared by the exact and numeric computation tracks.
//!
//! Every matrix and polynomial kernel in this crate is generic over [`Scalar`],
//! so the same code runs over `BigRational` (exact arithmetic) and `Complex64`
//! (floating-point arithmetic). The trait adds two embeddings on top of
//! `num_traits::Num`: small integers and exact rationals.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{Num, ToPrimitive};
use std::fmt::{Debug, Display};
use std::ops::Neg;

/// A field scalar usable in the generic matrix/polynomial kernels.
///
/// Implementors must form a field under the `Num` operations; division by a
/// nonzero element must be exact (rationals) or the usual rounded operation
/// (floating point).
pub trait Scalar: Num + Neg<Output = Self> + Clone + PartialEq + Debug + Display {
    /// Embed an exact rational into the scalar type.
    fn from_rational(r: &BigRational) -> Self;

    /// Embed a machine integer into the scalar type.
    fn from_i64(n: i64) -> Self;

    /// Approximate the scalar as a complex double, for diagnostics and
    /// tolerance checks. Exact values convert with one rounding.
    fn to_c64(&self) -> Complex64;
}

impl Scalar for BigRational {
    fn from_rational(r: &BigRational) -> Self {
        r.clone()
    }

    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn to_c64(&self) -> Complex64 {
        Complex64::new(rational_to_f64(self), 0.0)
    }
}

impl Scalar for Complex64 {
    fn from_rational(r: &BigRational) -> Self {
        Complex64::new(rational_to_f64(r), 0.0)
    }

    fn from_i64(n: i64) -> Self {
        Complex64::new(n as f64, 0.0)
    }

    fn to_c64(&self) -> Complex64 {
        *self
    }
}

impl Scalar for f64 {
    fn from_rational(r: &BigRational) -> Self {
        rational_to_f64(r)
    }

    fn from_i64(n: i64) -> Self {
        n as f64
    }

    fn to_c64(&self) -> Complex64 {
        Complex64::new(*self, 0.0)
    }
}

/// Round a rational to the nearest double.
///
/// Values whose magnitude overflows a double become `±inf`, matching the
/// behaviour of `ToPrimitive`.
pub fn rational_to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn rational_embeds_exactly() {
        let r = rat(3, 4);
        assert_eq!(BigRational::from_rational(&r), r);
        assert_eq!(BigRational::from_i64(-7), rat(-7, 1));
    }

    #[test]
    fn complex_embeds_with_zero_imaginary_part() {
        let z = Complex64::from_rational(&rat(1, 2));
        assert_eq!(z, Complex64::new(0.5, 0.0));
        assert_eq!(Complex64::from_i64(-3), Complex64::new(-3.0, 0.0));
    }

    #[test]
    fn f64_embeds_by_rounding() {
        assert_eq!(f64::from_rational(&rat(1, 3)), 1.0 / 3.0);
        assert_eq!(f64::from_i64(42), 42.0);
    }

    #[test]
    fn to_c64_round_trips_small_integers() {
        assert_eq!(BigRational::from_i64(5).to_c64(), Complex64::new(5.0, 0.0));
        assert_eq!(2.5f64.to_c64(), Complex64::new(2.5, 0.0));
    }
}
