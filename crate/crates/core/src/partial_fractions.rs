//! Partial fraction decomposition of `num / den` over the roots of `den`,
//! with per-root exact or numeric coefficients.
//!
//! Writing `den = scale * prod_k (z - alpha_k)^{e_k}` (scale is the leading
//! coefficient), a proper fraction decomposes as
//!
//! ```text
//! num / den = (1/scale) * sum_k sum_{j=1..e_k} c_{k,j} / (z - alpha_k)^j
//! ```
//!
//! For each root the coefficients are read off a truncated power series:
//! shift both `num` and the cofactor `den_k = prod_{l != k} (z - alpha_l)^{e_l}`
//! to `alpha_k` and divide. For a rational root the cofactor is obtained by
//! exact deflation of the exact factor product, so the whole column of
//! coefficients is exact even when other roots are irrational.
//!
//! Every decomposition is gated by an independent evaluation check
//! ([`pf_residual`]) at sample points away from the poles.

use crate::poly::{series_div, Poly, PolyError};
use crate::roots::RootSet;
use crate::scalar::Scalar;
use crate::value::Value;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::Zero;
use thiserror::Error;

/// Errors raised while decomposing into partial fractions.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum PfError {
    /// The fraction is not proper: the numerator degree must be below the
    /// denominator degree.
    #[error(
        "fraction is not proper: numerator degree {num_degree} vs denominator degree {den_degree}"
    )]
    ImproperFraction {
        num_degree: usize,
        den_degree: usize,
    },
    /// The decomposition failed its own evaluation gate; indicates a numeric
    /// breakdown (or a bug), never bad input.
    #[error("decomposition residual {residual:.3e} exceeds the acceptance gate")]
    ResidualTooLarge { residual: f64 },
    #[error(transparent)]
    Poly(#[from] PolyError),
    /// An internal invariant failed; this is a bug.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

/// The coefficient column of one root, on the exact or numeric track.
/// Entry `j - 1` is the coefficient of `1 / (z - alpha)^j`.
#[derive(Debug, Clone, PartialEq)]
pub enum PfCoeffs {
    Exact(Vec<BigRational>),
    Numeric(Vec<Complex64>),
}

impl PfCoeffs {
    pub fn len(&self) -> usize {
        match self {
            PfCoeffs::Exact(v) => v.len(),
            PfCoeffs::Numeric(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Coefficient of `1 / (z - alpha)^j` as a complex double.
    pub fn get_c64(&self, j: u32) -> Complex64 {
        let i = (j - 1) as usize;
        match self {
            PfCoeffs::Exact(v) => Value::Exact(v[i].clone()).to_c64(),
            PfCoeffs::Numeric(v) => v[i],
        }
    }
}

/// One pole of the decomposition: the root, its order, and its coefficient
/// column.
#[derive(Debug, Clone, PartialEq)]
pub struct PfTerm {
    pub alpha: Value,
    pub multiplicity: u32,
    pub coeffs: PfCoeffs,
}

/// A full partial fraction decomposition; terms follow the root order of
/// the [`RootSet`] it was built from.
#[derive(Debug, Clone, PartialEq)]
pub struct PfDecomposition {
    pub terms: Vec<PfTerm>,
    /// Leading coefficient of the denominator.
    pub scale: BigRational,
}

impl PfDecomposition {
    /// True when every coefficient column is exact.
    pub fn all_exact(&self) -> bool {
        self.terms
            .iter()
            .all(|t| matches!(t.coeffs, PfCoeffs::Exact(_)))
    }

    /// Evaluate the decomposition at `z` in complex arithmetic.
    pub fn eval_c64(&self, z: Complex64) -> Complex64 {
        let mut sum = Complex64::zero();
        for term in &self.terms {
            let d = z - term.alpha.to_c64();
            let mut power = Complex64::new(1.0, 0.0);
            for j in 1..=term.multiplicity {
                power *= d;
                sum += term.coeffs.get_c64(j) / power;
            }
        }
        sum / Value::Exact(self.scale.clone()).to_c64()
    }
}

/// How far the decomposition must stay from the true rational function at
/// the internal acceptance gate.
const GATE_TOL: f64 = 1e-8;
/// Sample count for the internal gate.
const GATE_SAMPLES: usize = 16;

/// Decompose `num / den` into partial fractions, where `den` is described
/// by its root set (`den = roots.unit * prod factors^mult`).
///
/// Rational roots get exact coefficient columns; irrational roots numeric
/// ones. The result is checked against direct evaluation before being
/// returned.
pub fn partial_fractions(
    num: &Poly<BigRational>,
    roots: &RootSet,
) -> Result<PfDecomposition, PfError> {
    let den_degree = roots.total_multiplicity();
    let num_degree = num.degree().unwrap_or(0);
    if !num.is_zero() && num_degree >= den_degree {
        return Err(PfError::ImproperFraction {
            num_degree,
            den_degree,
        });
    }

    // Exact monic denominator prod factors^mult, shared by every exact
    // column.
    let mut monic_den: Poly<BigRational> = Poly::one();
    for f in &roots.factors {
        monic_den = &monic_den * &f.poly.pow(f.multiplicity);
    }

    let mut terms = Vec::with_capacity(roots.roots.len());
    for (k, root) in roots.roots.iter().enumerate() {
        let e = root.multiplicity;
        let coeffs = match &root.alpha {
            Value::Exact(alpha) => {
                let mut cofactor = monic_den.clone();
                for _ in 0..e {
                    let (quot, rem) = cofactor.deflate(alpha);
                    if !rem.is_zero() {
                        return Err(PfError::Internal("exact deflation left a remainder".into()));
                    }
                    cofactor = quot;
                }
                PfCoeffs::Exact(coefficient_column(num, &cofactor, alpha, e)?)
            }
            Value::Numeric(alpha) => {
                let mut cofactor: Poly<Complex64> = Poly::one();
                for (l, other) in roots.roots.iter().enumerate() {
                    if l == k {
                        continue;
                    }
                    let lin = Poly::new(vec![-other.alpha.to_c64(), Complex64::new(1.0, 0.0)]);
                    cofactor = &cofactor * &lin.pow(other.multiplicity);
                }
                let num_c = num.map_scalar(Scalar::to_c64);
                PfCoeffs::Numeric(coefficient_column(&num_c, &cofactor, alpha, e)?)
            }
        };
        terms.push(PfTerm {
            alpha: root.alpha.clone(),
            multiplicity: e,
            coeffs,
        });
    }

    let pf = PfDecomposition {
        terms,
        scale: roots.unit.clone(),
    };
    let den = monic_den.scale(&roots.unit);
    let samples = default_samples(roots, GATE_SAMPLES);
    let residual = pf_residual(&pf, num, &den, &samples);
    if residual.is_nan() || residual > GATE_TOL {
        return Err(PfError::ResidualTooLarge { residual });
    }
    Ok(pf)
}

/// The coefficient column of one root: with `T_i` the power series of
/// `num(alpha + w) / cofactor(alpha + w)` truncated at order `e`, the
/// coefficient of `1 / (z - alpha)^j` is `T_{e-j}`.
fn coefficient_column<T: Scalar>(
    num: &Poly<T>,
    cofactor: &Poly<T>,
    alpha: &T,
    e: u32,
) -> Result<Vec<T>, PfError> {
    let e = e as usize;
    let num_shifted = num.taylor_shift(alpha);
    let cof_shifted = cofactor.taylor_shift(alpha);
    let nv: Vec<T> = (0..e).map(|i| num_shifted.coeff(i)).collect();
    let dv: Vec<T> = (0..e).map(|i| cof_shifted.coeff(i)).collect();
    if dv[0].is_zero() {
        return Err(PfError::Internal(
            "cofactor vanishes at its own root".into(),
        ));
    }
    let t = series_div(&nv, &dv, e)?;
    Ok((1..=e).map(|j| t[e - j].clone()).collect())
}

/// Sample points for residual checks: a circle of radius
/// `1 + 2 * max |alpha|`, which keeps every sample well away from every
/// pole.
pub fn default_samples(roots: &RootSet, count: usize) -> Vec<Complex64> {
    let max_alpha = roots
        .roots
        .iter()
        .map(|r| r.alpha.to_c64().norm())
        .fold(0.0f64, f64::max);
    let radius = 1.0 + 2.0 * max_alpha;
    (0..count)
        .map(|t| {
            let theta = 2.0 * std::f64::consts::PI * (t as f64 + 0.37) / count as f64;
            radius * Complex64::new(theta.cos(), theta.sin())
        })
        .collect()
}

/// Largest relative deviation `|num/den - pf| / (1 + |num/den|)` over the
/// sample points: an independent check that the decomposition reproduces
/// the rational function it came from.
pub fn pf_residual(
    pf: &PfDecomposition,
    num: &Poly<BigRational>,
    den: &Poly<BigRational>,
    samples: &[Complex64],
) -> f64 {
    let num_c = num.map_scalar(Scalar::to_c64);
    let den_c = den.map_scalar(Scalar::to_c64);
    let mut worst = 0.0f64;
    for &s in samples {
        let reference = num_c.eval(&s) / den_c.eval(&s);
        let deviation = (reference - pf.eval_c64(s)).norm() / (1.0 + reference.norm());
        worst = worst.max(deviation);
    }
    worst
}
