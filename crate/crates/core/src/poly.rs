//! Univariate polynomials and truncated power series over a [`Scalar`].
//!
//! Polynomials are dense coefficient vectors in ascending order of degree,
//! with no trailing zeros (the zero polynomial has an empty vector). On top
//! of ring arithmetic the module provides:
//!
//! - Euclidean division, gcd, and Yun's squarefree decomposition;
//! - Taylor shift `p(z) -> p(z + a)` and coefficient reversal;
//! - Newton interpolation through distinct nodes;
//! - truncated power-series division, exponential, and logarithm.

use crate::scalar::Scalar;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use thiserror::Error;

/// Errors raised by polynomial and series operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    /// The operation is undefined for the zero polynomial.
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    /// Polynomial or series division by zero.
    #[error("division by zero")]
    DivisionByZero,
    /// A division expected to be exact left a remainder.
    #[error("division left a nonzero remainder")]
    InexactDivision,
    /// A series operation received an input with the wrong constant term.
    #[error("bad series input: {0}")]
    BadSeriesInput(&'static str),
}

/// A dense univariate polynomial; `coeffs[i]` is the coefficient of `z^i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> Poly<T> {
    /// Build a polynomial from coefficients in ascending order, trimming
    /// trailing zeros.
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Poly::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Poly::new(vec![c])
    }

    /// Build a polynomial from machine-integer coefficients.
    pub fn from_i64(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&n| T::from_i64(n)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `z^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    /// Horner evaluation at `x`.
    pub fn eval(&self, x: &T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    /// Multiply every coefficient by `c`.
    pub fn scale(&self, c: &T) -> Self {
        Poly::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// Divide by the leading coefficient; the zero polynomial stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Poly::zero(),
            Some(l) if l.is_one() => self.clone(),
            Some(l) => {
                let inv = T::one() / l.clone();
                self.scale(&inv)
            }
        }
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        Poly::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c.clone() * T::from_i64((i + 1) as i64))
                .collect(),
        )
    }

    /// The `m`-th power (`m = 0` gives the constant 1).
    pub fn pow(&self, m: u32) -> Self {
        let mut acc = Poly::one();
        for _ in 0..m {
            acc = &acc * self;
        }
        acc
    }

    /// Euclidean division: returns `(quotient, remainder)` with
    /// `deg r < deg d`.
    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self), PolyError> {
        let dd = d.degree().ok_or(PolyError::DivisionByZero)?;
        let lead = d.coeffs[dd].clone();
        if self.coeffs.len() < dd + 1 {
            return Ok((Poly::zero(), self.clone()));
        }
        let mut rem = self.coeffs.clone();
        let qlen = rem.len() - dd;
        let mut q = vec![T::zero(); qlen];
        for i in (0..qlen).rev() {
            let c = rem[i + dd].clone() / lead.clone();
            if !c.is_zero() {
                for j in 0..dd {
                    let t = rem[i + j].clone() - c.clone() * d.coeffs[j].clone();
                    rem[i + j] = t;
                }
            }
            rem[i + dd] = T::zero();
            q[i] = c;
        }
        Ok((Poly::new(q), Poly::new(rem)))
    }

    /// Division that must be exact; errors if a remainder is left.
    pub fn div_exact(&self, d: &Self) -> Result<Self, PolyError> {
        let (q, r) = self.div_rem(d)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(PolyError::InexactDivision)
        }
    }

    /// Synthetic division by `(z - a)`: returns the quotient and the
    /// remainder `p(a)`.
    pub fn deflate(&self, a: &T) -> (Self, T) {
        if self.is_zero() {
            return (Poly::zero(), T::zero());
        }
        let d = self.coeffs.len() - 1;
        let mut q = vec![T::zero(); d];
        let mut carry = self.coeffs[d].clone();
        for i in (0..d).rev() {
            let next = self.coeffs[i].clone() + a.clone() * carry.clone();
            q[i] = carry;
            carry = next;
        }
        (Poly::new(q), carry)
    }

    /// Coefficients of `p(z + a)` (Taylor shift), computed by repeated
    /// synthetic division.
    pub fn taylor_shift(&self, a: &T) -> Self {
        if self.coeffs.len() <= 1 {
            return self.clone();
        }
        let mut c = self.coeffs.clone();
        let d = c.len() - 1;
        for i in 0..d {
            for j in (i..d).rev() {
                let t = c[j].clone() + a.clone() * c[j + 1].clone();
                c[j] = t;
            }
        }
        Poly::new(c)
    }

    /// Coefficient reversal at length `n`: maps `sum c_i z^i` to
    /// `sum c_{n-i} z^i`, i.e. `z^n p(1/z)`.
    ///
    /// # Panics
    /// Panics if `deg p > n`.
    pub fn reversed(&self, n: usize) -> Self {
        assert!(
            self.degree().is_none_or(|d| d <= n),
            "reversal length must be at least the degree"
        );
        Poly::new((0..=n).map(|i| self.coeff(n - i)).collect())
    }

    /// Apply a function to every coefficient, possibly changing scalar type.
    pub fn map_scalar<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Poly<U> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }
}

impl<T: Scalar> Neg for &Poly<T> {
    type Output = Poly<T>;

    fn neg(self) -> Poly<T> {
        Poly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

impl<T: Scalar> Add for &Poly<T> {
    type Output = Poly<T>;

    fn add(self, other: &Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }
}

impl<T: Scalar> Sub for &Poly<T> {
    type Output = Poly<T>;

    fn sub(self, other: &Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }
}

impl<T: Scalar> Mul for &Poly<T> {
    type Output = Poly<T>;

    fn mul(self, other: &Poly<T>) -> Poly<T> {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                let t = out[i + j].clone() + a.clone() * b.clone();
                out[i + j] = t;
            }
        }
        Poly::new(out)
    }
}

impl<T: Scalar> fmt::Display for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*z")?,
                _ => write!(f, "({c})*z^{i}")?,
            }
        }
        Ok(())
    }
}

/// Monic greatest common divisor by the Euclidean algorithm.
///
/// `gcd(0, 0) = 0`; otherwise the result is monic.
pub fn gcd_monic<T: Scalar>(a: &Poly<T>, b: &Poly<T>) -> Poly<T> {
    let mut x = a.clone();
    let mut y = b.clone();
    while !y.is_zero() {
        let r = x
            .div_rem(&y)
            .expect("divisor is nonzero inside the gcd loop")
            .1;
        x = y;
        y = r;
    }
    x.monic()
}

/// One squarefree factor together with its multiplicity in the input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquarefreeFactor<T> {
    /// A monic squarefree polynomial.
    pub poly: Poly<T>,
    /// Its exponent in the input polynomial.
    pub multiplicity: u32,
}

/// The outcome of squarefree decomposition:
/// `input = unit * prod_k factors[k].poly ^ factors[k].multiplicity`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquarefreeDecomposition<T> {
    /// Leading-coefficient unit pulled out so every factor is monic.
    pub unit: T,
    /// Pairwise coprime monic factors with ascending multiplicity.
    pub factors: Vec<SquarefreeFactor<T>>,
}

impl<T: Scalar> SquarefreeDecomposition<T> {
    /// Multiply the decomposition back out (used to cross-check results).
    pub fn reassemble(&self) -> Poly<T> {
        let mut acc = Poly::constant(self.unit.clone());
        for f in &self.factors {
            acc = &acc * &f.poly.pow(f.multiplicity);
        }
        acc
    }
}

/// Yun's squarefree decomposition.
///
/// Works over any field of characteristic zero; with rational input every
/// step is exact. Errors on the zero polynomial.
pub fn squarefree_decompose<T: Scalar>(
    p: &Poly<T>,
) -> Result<SquarefreeDecomposition<T>, PolyError> {
    let unit = p.leading().cloned().ok_or(PolyError::ZeroPolynomial)?;
    let f = p.monic();
    if f.degree() == Some(0) {
        return Ok(SquarefreeDecomposition {
            unit,
            factors: vec![],
        });
    }
    let df = f.derivative();
    let a0 = gcd_monic(&f, &df);
    let mut factors = vec![];
    let mut b = f.div_exact(&a0)?;
    let c = df.div_exact(&a0)?;
    let mut d = &c - &b.derivative();
    let mut i = 1u32;
    while b.degree() > Some(0) {
        let a = gcd_monic(&b, &d);
        if a.degree() > Some(0) {
            factors.push(SquarefreeFactor {
                poly: a.clone(),
                multiplicity: i,
            });
        }
        b = b.div_exact(&a)?;
        let c = d.div_exact(&a)?;
        d = &c - &b.derivative();
        i += 1;
    }
    Ok(SquarefreeDecomposition { unit, factors })
}

/// Interpolate the unique polynomial of degree `< points.len()` through the
/// given `(x, y)` pairs, by Newton divided differences.
///
/// # Panics
/// Panics if two nodes coincide.
pub fn interpolate<T: Scalar>(points: &[(T, T)]) -> Poly<T> {
    let n = points.len();
    assert!(n > 0, "interpolation needs at least one point");
    let xs: Vec<T> = points.iter().map(|(x, _)| x.clone()).collect();
    let mut coef: Vec<T> = points.iter().map(|(_, y)| y.clone()).collect();
    for level in 1..n {
        for i in (level..n).rev() {
            let dx = xs[i].clone() - xs[i - level].clone();
            assert!(!dx.is_zero(), "interpolation nodes must be distinct");
            let t = (coef[i].clone() - coef[i - 1].clone()) / dx;
            coef[i] = t;
        }
    }
    // Unfold the Newton form into standard coefficients.
    let mut p = Poly::constant(coef[n - 1].clone());
    for i in (0..n - 1).rev() {
        let lin = Poly::new(vec![-xs[i].clone(), T::one()]);
        p = &(&p * &lin) + &Poly::constant(coef[i].clone());
    }
    p
}

/// Truncated division of power series: the first `len` coefficients of
/// `num / den`. Requires `den[0] != 0`.
pub fn series_div<T: Scalar>(num: &[T], den: &[T], len: usize) -> Result<Vec<T>, PolyError> {
    let d0 = den.first().cloned().unwrap_or_else(T::zero);
    if d0.is_zero() {
        return Err(PolyError::DivisionByZero);
    }
    let mut out: Vec<T> = Vec::with_capacity(len);
    for m in 0..len {
        let mut acc = if m < num.len() {
            num[m].clone()
        } else {
            T::zero()
        };
        for k in 1..=m.min(den.len().saturating_sub(1)) {
            acc = acc - den[k].clone() * out[m - k].clone();
        }
        out.push(acc / d0.clone());
    }
    Ok(out)
}

/// Exponential of a power series with zero constant term: the first
/// `a.len()` coefficients of `exp(a)`.
pub fn series_exp<T: Scalar>(a: &[T]) -> Result<Vec<T>, PolyError> {
    if a.first().is_some_and(|c| !c.is_zero()) {
        return Err(PolyError::BadSeriesInput("exp needs a zero constant term"));
    }
    let len = a.len();
    let mut b = Vec::with_capacity(len.max(1));
    b.push(T::one());
    for m in 1..len {
        // m * b_m = sum_{i=1..m} i * a_i * b_{m-i}
        let mut acc = T::zero();
        for i in 1..=m {
            let ai = a[i].clone();
            if ai.is_zero() {
                continue;
            }
            acc = acc + T::from_i64(i as i64) * ai * b[m - i].clone();
        }
        b.push(acc / T::from_i64(m as i64));
    }
    Ok(b)
}

/// Logarithm of a power series with constant term 1: the first `b.len()`
/// coefficients of `log(b)`.
pub fn series_log<T: Scalar>(b: &[T]) -> Result<Vec<T>, PolyError> {
    if !b.first().is_some_and(|c| c.is_one()) {
        return Err(PolyError::BadSeriesInput("log needs constant term 1"));
    }
    let len = b.len();
    let mut a = Vec::with_capacity(len);
    a.push(T::zero());
    for m in 1..len {
        // m * a_m = m * b_m - sum_{k=1..m-1} k * a_k * b_{m-k}
        let mut acc = T::from_i64(m as i64) * b[m].clone();
        for k in 1..m {
            acc = acc - T::from_i64(k as i64) * a[k].clone() * b[m - k].clone();
        }
        a.push(acc / T::from_i64(m as i64));
    }
    Ok(a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;
    use num_traits::Zero;

    type Q = BigRational;
    type QPoly = Poly<BigRational>;

    fn rat(n: i64, d: i64) -> Q {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn poly(coeffs: &[i64]) -> QPoly {
        Poly::from_i64(coeffs)
    }

    #[test]
    fn construction_trims_trailing_zeros() {
        assert_eq!(poly(&[1, 2, 0, 0]), poly(&[1, 2]));
        assert!(poly(&[0, 0]).is_zero());
        assert_eq!(poly(&[]).degree(), None);
        assert_eq!(poly(&[3]).degree(), Some(0));
        assert_eq!(poly(&[0, 0, 5]).degree(), Some(2));
    }

    #[test]
    fn arithmetic_matches_hand_expansion() {
        let a = poly(&[1, 1]); // 1 + z
        let b = poly(&[-1, 1]); // -1 + z
        assert_eq!(&a * &b, poly(&[-1, 0, 1]));
        assert_eq!(&a + &b, poly(&[0, 2]));
        assert_eq!(&a - &b, poly(&[2]));
        assert_eq!(-&a, poly(&[-1, -1]));
        assert_eq!(a.pow(3), poly(&[1, 3, 3, 1]));
    }

    #[test]
    fn eval_uses_horner() {
        let p = poly(&[1, -2, 1]); // (1 - z)^2
        assert_eq!(p.eval(&rat(3, 1)), rat(4, 1));
        assert_eq!(p.eval(&rat(1, 1)), rat(0, 1));
        assert_eq!(p.eval(&rat(1, 2)), rat(1, 4));
    }

    #[test]
    fn div_rem_recovers_quotient_and_remainder() {
        let num = poly(&[-1, 0, 0, 1]); // z^3 - 1
        let den = poly(&[-1, 1]); // z - 1
        let (q, r) = num.div_rem(&den).unwrap();
        assert_eq!(q, poly(&[1, 1, 1]));
        assert!(r.is_zero());

        let (q, r) = poly(&[1, 0, 1]).div_rem(&poly(&[1, 1])).unwrap();
        assert_eq!(q, poly(&[-1, 1]));
        assert_eq!(r, poly(&[2]));

        assert_eq!(
            poly(&[1]).div_rem(&QPoly::zero()).unwrap_err(),
            PolyError::DivisionByZero
        );
    }

    #[test]
    fn div_exact_rejects_remainders() {
        assert_eq!(
            poly(&[-1, 0, 1]).div_exact(&poly(&[-1, 1])).unwrap(),
            poly(&[1, 1])
        );
        assert_eq!(
            poly(&[1, 0, 1]).div_exact(&poly(&[1, 1])).unwrap_err(),
            PolyError::InexactDivision
        );
    }

    #[test]
    fn deflate_divides_by_linear_factor() {
        let p = poly(&[-6, 11, -6, 1]); // (z-1)(z-2)(z-3)
        let (q, r) = p.deflate(&rat(2, 1));
        assert_eq!(q, poly(&[3, -4, 1])); // (z-1)(z-3)
        assert!(r.is_zero());
        let (_, r) = p.deflate(&rat(5, 1));
        assert_eq!(r, p.eval(&rat(5, 1)));
    }

    #[test]
    fn taylor_shift_expands_binomials() {
        // (z + 1)^2 from z^2
        assert_eq!(poly(&[0, 0, 1]).taylor_shift(&rat(1, 1)), poly(&[1, 2, 1]));
        // p(z + a) evaluated at 0 equals p(a)
        let p = poly(&[2, -1, 3, 1]);
        let a = rat(-3, 2);
        assert_eq!(p.taylor_shift(&a).coeff(0), p.eval(&a));
        // Shifting back is the identity.
        assert_eq!(p.taylor_shift(&a).taylor_shift(&(-a.clone())), p);
    }

    #[test]
    fn reversal_swaps_coefficients() {
        let p = poly(&[1, -3, 1]);
        assert_eq!(p.reversed(2), poly(&[1, -3, 1]));
        let p = poly(&[1, -2]);
        assert_eq!(p.reversed(3), poly(&[0, 0, -2, 1]));
    }

    #[test]
    fn derivative_and_monic() {
        assert_eq!(poly(&[5, 3, 0, 2]).derivative(), poly(&[3, 0, 6]));
        assert_eq!(poly(&[7]).derivative(), QPoly::zero());
        assert_eq!(poly(&[2, 4]).monic(), Poly::new(vec![rat(1, 2), rat(1, 1)]));
        assert_eq!(QPoly::zero().monic(), QPoly::zero());
    }

    #[test]
    fn gcd_of_shared_factor() {
        let a = &poly(&[-1, 1]) * &poly(&[-2, 1]); // (z-1)(z-2)
        let b = &poly(&[-1, 1]) * &poly(&[-3, 1]); // (z-1)(z-3)
        assert_eq!(gcd_monic(&a, &b), poly(&[-1, 1]));
        assert_eq!(gcd_monic(&a, &QPoly::zero()), a.monic());
        assert_eq!(gcd_monic(&QPoly::zero(), &QPoly::zero()), QPoly::zero());
        // Coprime inputs give gcd 1.
        assert_eq!(gcd_monic(&poly(&[-1, 1]), &poly(&[-2, 1])), QPoly::one());
    }

    #[test]
    fn squarefree_decomposition_of_repeated_roots() {
        // (1 - z)^2 (1 - 2z) = 1 - 4z + 5z^2 - 2z^3
        let p = poly(&[1, -4, 5, -2]);
        let d = squarefree_decompose(&p).unwrap();
        assert_eq!(d.unit, rat(-2, 1));
        assert_eq!(d.factors.len(), 2);
        assert_eq!(d.factors[0].poly, Poly::new(vec![rat(-1, 2), rat(1, 1)]));
        assert_eq!(d.factors[0].multiplicity, 1);
        assert_eq!(d.factors[1].poly, poly(&[-1, 1]));
        assert_eq!(d.factors[1].multiplicity, 2);
        assert_eq!(d.reassemble(), p);
    }

    #[test]
    fn squarefree_decomposition_of_squarefree_input() {
        let p = poly(&[-6, 11, -6, 1]); // (z-1)(z-2)(z-3)
        let d = squarefree_decompose(&p).unwrap();
        assert_eq!(d.unit, rat(1, 1));
        assert_eq!(d.factors.len(), 1);
        assert_eq!(d.factors[0].multiplicity, 1);
        assert_eq!(d.factors[0].poly, p);
    }

    #[test]
    fn squarefree_decomposition_of_constant_and_zero() {
        let d = squarefree_decompose(&poly(&[4])).unwrap();
        assert_eq!(d.unit, rat(4, 1));
        assert!(d.factors.is_empty());
        assert_eq!(
            squarefree_decompose(&QPoly::zero()).unwrap_err(),
            PolyError::ZeroPolynomial
        );
    }

    #[test]
    fn squarefree_decomposition_with_high_multiplicity() {
        let p = &poly(&[-1, 1]).pow(3) * &poly(&[1, 1]); // (z-1)^3 (z+1)
        let d = squarefree_decompose(&p).unwrap();
        assert_eq!(d.factors.len(), 2);
        assert_eq!(d.factors[0].poly, poly(&[1, 1]));
        assert_eq!(d.factors[0].multiplicity, 1);
        assert_eq!(d.factors[1].poly, poly(&[-1, 1]));
        assert_eq!(d.factors[1].multiplicity, 3);
        assert_eq!(d.reassemble(), p);
    }

    #[test]
    fn interpolation_recovers_polynomials() {
        let p = poly(&[2, -1, 0, 3]);
        let points: Vec<(Q, Q)> = (0..=3)
            .map(|i| {
                let x = rat(i, 1);
                let y = p.eval(&x);
                (x, y)
            })
            .collect();
        assert_eq!(interpolate(&points), p);

        let points = vec![(rat(1, 1), rat(5, 1))];
        assert_eq!(interpolate(&points), poly(&[5]));
    }

    #[test]
    fn series_division_inverts_geometric_series() {
        // 1 / (1 - z) = 1 + z + z^2 + ...
        let out = series_div(&[rat(1, 1)], &[rat(1, 1), rat(-1, 1)], 5).unwrap();
        assert_eq!(out, vec![rat(1, 1); 5]);
        // (1 + z) / (1 + z) = 1
        let one = series_div(&[rat(1, 1), rat(1, 1)], &[rat(1, 1), rat(1, 1)], 4).unwrap();
        assert_eq!(one, vec![rat(1, 1), rat(0, 1), rat(0, 1), rat(0, 1)]);
        assert_eq!(
            series_div(&[rat(1, 1)], &[rat(0, 1), rat(1, 1)], 3).unwrap_err(),
            PolyError::DivisionByZero
        );
    }

    #[test]
    fn series_exp_matches_known_expansion() {
        // exp(z) = sum z^m / m!
        let a = vec![rat(0, 1), rat(1, 1), rat(0, 1), rat(0, 1), rat(0, 1)];
        let b = series_exp(&a).unwrap();
        assert_eq!(
            b,
            vec![rat(1, 1), rat(1, 1), rat(1, 2), rat(1, 6), rat(1, 24)]
        );
        assert_eq!(
            series_exp(&[rat(1, 1)]).unwrap_err(),
            PolyError::BadSeriesInput("exp needs a zero constant term")
        );
    }

    #[test]
    fn series_log_inverts_series_exp() {
        let a = vec![rat(0, 1), rat(3, 1), rat(-1, 2), rat(7, 3), rat(2, 5)];
        let b = series_exp(&a).unwrap();
        assert_eq!(series_log(&b).unwrap(), a);
        assert_eq!(
            series_log(&[rat(2, 1)]).unwrap_err(),
            PolyError::BadSeriesInput("log needs constant term 1")
        );
    }

    #[test]
    fn series_log_of_inverse_linear_factor() {
        // -log(1 - 2z) = sum 2^m z^m / m
        let geo = series_div(&[rat(1, 1)], &[rat(1, 1), rat(-2, 1)], 4).unwrap();
        let log = series_log(&geo).unwrap();
        assert_eq!(log, vec![rat(0, 1), rat(2, 1), rat(2, 1), rat(8, 3)]);
    }
}
