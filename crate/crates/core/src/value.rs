//! A scalar that is either exactly known (a rational) or numerically known
//! (a complex double). Quantities derived from exact roots stay exact;
//! quantities derived from irrational roots carry the numeric track marker.

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use std::fmt;

/// An exact-or-numeric scalar value.
#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Exact(BigRational),
    Numeric(Complex64),
}

impl Value {
    pub fn is_exact(&self) -> bool {
        matches!(self, Value::Exact(_))
    }

    pub fn as_exact(&self) -> Option<&BigRational> {
        match self {
            Value::Exact(r) => Some(r),
            Value::Numeric(_) => None,
        }
    }

    /// Approximate as a complex double (one rounding for exact values).
    pub fn to_c64(&self) -> Complex64 {
        match self {
            Value::Exact(r) => Complex64::new(r.to_f64().unwrap_or(f64::NAN), 0.0),
            Value::Numeric(z) => *z,
        }
    }

    /// The reciprocal, staying on the same track.
    ///
    /// # Panics
    /// Panics on an exact zero.
    pub fn recip(&self) -> Value {
        match self {
            Value::Exact(r) => {
                assert!(!r.is_zero(), "reciprocal of exact zero");
                Value::Exact(r.recip())
            }
            Value::Numeric(z) => Value::Numeric(z.finv()),
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Exact(r) => write!(f, "{r}"),
            Value::Numeric(z) => {
                if z.im == 0.0 {
                    write!(f, "{}", z.re)
                } else if z.im < 0.0 {
                    write!(f, "{}{}i", z.re, z.im)
                } else {
                    write!(f, "{}+{}i", z.re, z.im)
                }
            }
        }
    }
}
