//! The zeta function of a finite category, as a power series and in closed
//! form.
//!
//! For a category with adjacency matrix `A` (entry `(i, j)` counts the
//! morphisms `x_i -> x_j`), the zeta function is
//!
//! ```text
//! zeta(z) = exp( sum_{m >= 1} #N_m z^m / m )
//! ```
//!
//! where `#N_m = sum(A^m)` counts composable chains of length `m`. When
//! `det A != 0` the series has a closed form driven by the reciprocals
//! `lambda_k = 1/alpha_k` of the roots of `det(E - A z)`:
//!
//! ```text
//! zeta(z) = prod_k (1 - lambda_k z)^(-beta_k)
//!         * exp( sum_k sum_{j=1}^{e_k - 1} gamma_{k,j} z^j / (j (1 - lambda_k z)^j) )
//! ```
//!
//! with `beta_k` and `gamma_{k,j}` read off the partial fraction
//! decomposition of `sum(adj(E - A z) A) / det(E - A z)`. [`analyze`]
//! computes the whole chain — determinant, polynomials, roots, partial
//! fractions, closed form — with every internal identity checked along the
//! way.

use crate::charpoly::{self, CharPolyError};
use crate::matrix::{Matrix, MatrixError};
use crate::partial_fractions::{partial_fractions, PfCoeffs, PfDecomposition, PfError};
use crate::poly::{series_exp, Poly, PolyError};
use crate::roots::{find_roots, RootError, RootSet};
use crate::scalar::Scalar;
use crate::value::Value;
use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

/// Errors raised while computing zeta data.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum ZetaError {
    /// `det A = 0`: the category has no Möbius inversion, so the closed
    /// form and both Euler characteristics are undefined.
    #[error("no Möbius inversion: det A = 0")]
    NoMobiusInversion,
    /// Two computations that must agree did not; this is a bug, never bad
    /// input.
    #[error("internal identity violated: {0}")]
    Identity(String),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Root(#[from] RootError),
    #[error(transparent)]
    Pf(#[from] PfError),
}

impl From<CharPolyError> for ZetaError {
    fn from(e: CharPolyError) -> Self {
        match e {
            CharPolyError::Matrix(m) => ZetaError::Matrix(m),
            CharPolyError::IdentityViolation(s) => ZetaError::Identity(s),
        }
    }
}

/// Chain counts `#N_m = sum(A^m)` for `m = 0, ..., max_m` (entry 0 is the
/// number of objects).
///
/// Independent of the category-level chain enumeration, which makes the two
/// usable as oracles for each other.
pub fn nerve_counts(a: &Matrix<BigRational>, max_m: u32) -> Result<Vec<BigRational>, MatrixError> {
    if !a.is_square() {
        return Err(MatrixError::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let mut power = Matrix::identity(a.rows());
    let mut out = Vec::with_capacity(max_m as usize + 1);
    out.push(power.sum_entries());
    for _ in 1..=max_m {
        power = power.mul(a)?;
        out.push(power.sum_entries());
    }
    Ok(out)
}

/// The zeta power series `exp(sum #N_m z^m / m)` up to and including
/// `z^max_m`, computed exactly.
pub fn zeta_series(a: &Matrix<BigRational>, max_m: u32) -> Result<Vec<BigRational>, ZetaError> {
    let counts = nerve_counts(a, max_m)?;
    let log_coeffs: Vec<BigRational> = counts
        .iter()
        .enumerate()
        .map(|(m, c)| {
            if m == 0 {
                BigRational::zero()
            } else {
                c / BigRational::from_integer(BigInt::from(m))
            }
        })
        .collect();
    Ok(series_exp(&log_coeffs)?)
}

/// The closed-form data of one root: `lambda = 1/alpha`, the factor
/// exponent `beta`, and the exponential coefficients `gamma_j`
/// (`j = 1, ..., e - 1`; empty for simple roots).
#[derive(Debug, Clone, PartialEq)]
pub struct ClosedFormTerm<T> {
    pub lambda: T,
    pub beta: T,
    pub gammas: Vec<T>,
}

/// A closed-form term on the exact or numeric track, following the track of
/// the root it comes from.
#[derive(Debug, Clone, PartialEq)]
pub enum ClosedFormRoot {
    Exact(ClosedFormTerm<BigRational>),
    Numeric(ClosedFormTerm<Complex64>),
}

impl ClosedFormRoot {
    pub fn is_exact(&self) -> bool {
        matches!(self, ClosedFormRoot::Exact(_))
    }

    pub fn lambda(&self) -> Value {
        match self {
            ClosedFormRoot::Exact(t) => Value::Exact(t.lambda.clone()),
            ClosedFormRoot::Numeric(t) => Value::Numeric(t.lambda),
        }
    }

    pub fn beta(&self) -> Value {
        match self {
            ClosedFormRoot::Exact(t) => Value::Exact(t.beta.clone()),
            ClosedFormRoot::Numeric(t) => Value::Numeric(t.beta),
        }
    }

    pub fn gammas(&self) -> Vec<Value> {
        match self {
            ClosedFormRoot::Exact(t) => t.gammas.iter().cloned().map(Value::Exact).collect(),
            ClosedFormRoot::Numeric(t) => t.gammas.iter().copied().map(Value::Numeric).collect(),
        }
    }

    /// View on the numeric track (exact data converts with one rounding).
    pub fn to_numeric(&self) -> ClosedFormTerm<Complex64> {
        match self {
            ClosedFormRoot::Exact(t) => ClosedFormTerm {
                lambda: Value::Exact(t.lambda.clone()).to_c64(),
                beta: Value::Exact(t.beta.clone()).to_c64(),
                gammas: t
                    .gammas
                    .iter()
                    .map(|g| Value::Exact(g.clone()).to_c64())
                    .collect(),
            },
            ClosedFormRoot::Numeric(t) => t.clone(),
        }
    }
}

/// The closed form of the zeta function, one term per distinct root of
/// `det(E - A z)`.
#[derive(Debug, Clone, PartialEq)]
pub struct ZetaClosedForm {
    pub roots: Vec<ClosedFormRoot>,
}

impl ZetaClosedForm {
    pub fn all_exact(&self) -> bool {
        self.roots.iter().all(ClosedFormRoot::is_exact)
    }

    /// Every term on the numeric track.
    pub fn numeric_terms(&self) -> Vec<ClosedFormTerm<Complex64>> {
        self.roots.iter().map(ClosedFormRoot::to_numeric).collect()
    }

    /// Every term on the exact track, or `None` if any root is numeric.
    pub fn exact_terms(&self) -> Option<Vec<ClosedFormTerm<BigRational>>> {
        self.roots
            .iter()
            .map(|r| match r {
                ClosedFormRoot::Exact(t) => Some(t.clone()),
                ClosedFormRoot::Numeric(_) => None,
            })
            .collect()
    }
}

/// Everything computed on the way to the closed form, kept together so
/// reports and verification can reuse the intermediates.
#[derive(Debug, Clone, PartialEq)]
pub struct ZetaAnalysis {
    pub n: usize,
    pub det_a: BigRational,
    /// `det(E - A z)`.
    pub det_poly: Poly<BigRational>,
    /// `sum(adj(E - A z))`.
    pub adj_sum_poly: Poly<BigRational>,
    /// `sum(adj(E - A z) A)`.
    pub numerator_poly: Poly<BigRational>,
    pub roots: RootSet,
    pub pf: PfDecomposition,
    pub closed_form: ZetaClosedForm,
}

/// Run the whole closed-form pipeline for an adjacency matrix with
/// `det A != 0`.
///
/// Errors with [`ZetaError::NoMobiusInversion`] when `det A = 0`, and with
/// [`ZetaError::Identity`] if any internal cross-check fails.
pub fn analyze(a: &Matrix<BigRational>) -> Result<ZetaAnalysis, ZetaError> {
    let det_a = a.det()?;
    if det_a.is_zero() {
        return Err(ZetaError::NoMobiusInversion);
    }
    let n = a.rows();

    let det_poly = charpoly::det_poly(a)?;
    if det_poly.degree() != Some(n) {
        return Err(ZetaError::Identity(
            "det(E - A z) must have degree N when det A != 0".into(),
        ));
    }
    let adj_sum_poly = charpoly::adj_sum_poly(a)?;
    let numerator_poly = charpoly::numerator_poly(a)?;
    if n >= 1 && numerator_poly.degree() != Some(n - 1) {
        return Err(ZetaError::Identity(
            "sum(adj(E - A z) A) must have degree N - 1 when det A != 0".into(),
        ));
    }

    let roots = find_roots(&det_poly)?;
    if roots.total_multiplicity() != n {
        return Err(ZetaError::Identity(
            "root multiplicities must sum to N".into(),
        ));
    }
    let expected_unit = if n.is_multiple_of(2) {
        det_a.clone()
    } else {
        -det_a.clone()
    };
    if roots.unit != expected_unit {
        return Err(ZetaError::Identity(
            "leading coefficient of det(E - A z) must be (-1)^N det A".into(),
        ));
    }

    let pf = partial_fractions(&numerator_poly, &roots)?;
    let closed_form = closed_form_from_pf(&pf)?;

    Ok(ZetaAnalysis {
        n,
        det_a,
        det_poly,
        adj_sum_poly,
        numerator_poly,
        roots,
        pf,
        closed_form,
    })
}

/// The closed form alone; see [`analyze`] for the full intermediate data.
pub fn closed_form(a: &Matrix<BigRational>) -> Result<ZetaClosedForm, ZetaError> {
    Ok(analyze(a)?.closed_form)
}

/// Build the closed-form terms from a partial fraction decomposition:
/// `beta = -c_1 / scale` and
/// `gamma_j = (1/scale) * sum_{i=j}^{e-1} binom(i-1, j-1) (-1)^(i-1)
///            lambda^(i+j) c_{i+1}`.
///
/// The binomial weight is also derived a second way, as `j * binom(i, j) / i`,
/// and the two must agree exactly.
fn closed_form_from_pf(pf: &PfDecomposition) -> Result<ZetaClosedForm, ZetaError> {
    let scale = &pf.scale;
    let mut roots = Vec::with_capacity(pf.terms.len());
    for term in &pf.terms {
        let e = term.multiplicity;
        let root = match (&term.alpha, &term.coeffs) {
            (Value::Exact(alpha), PfCoeffs::Exact(column)) => {
                let lambda = alpha.recip();
                ClosedFormRoot::Exact(build_term(
                    lambda,
                    column,
                    &(BigRational::one() / scale.clone()),
                    e,
                )?)
            }
            (Value::Numeric(alpha), PfCoeffs::Numeric(column)) => {
                let lambda = alpha.finv();
                let scale_inv = Value::Exact(scale.clone()).to_c64().finv();
                ClosedFormRoot::Numeric(build_term(lambda, column, &scale_inv, e)?)
            }
            _ => {
                return Err(ZetaError::Identity(
                    "root and coefficient tracks must match".into(),
                ))
            }
        };
        roots.push(root);
    }
    Ok(ZetaClosedForm { roots })
}

fn build_term<T: Scalar>(
    lambda: T,
    column: &[T],
    scale_inv: &T,
    e: u32,
) -> Result<ClosedFormTerm<T>, ZetaError> {
    let e = e as usize;
    debug_assert_eq!(column.len(), e);
    let beta = -(column[0].clone() * scale_inv.clone());
    let mut gammas = Vec::with_capacity(e.saturating_sub(1));
    for j in 1..e {
        let mut acc = T::zero();
        for (i, entry) in column.iter().enumerate().skip(j) {
            let weight = binomial_weight(i, j)?;
            let signed = if (i - 1) % 2 == 0 { weight } else { -weight };
            let lam_pow = pow_of(&lambda, i + j);
            acc = acc + T::from_rational(&signed) * lam_pow * entry.clone();
        }
        gammas.push(acc * scale_inv.clone());
    }
    Ok(ClosedFormTerm {
        lambda,
        beta,
        gammas,
    })
}

/// `binom(i-1, j-1)`, cross-checked against the equal form
/// `j * binom(i, j) / i`.
fn binomial_weight(i: usize, j: usize) -> Result<BigRational, ZetaError> {
    let direct = BigRational::from_integer(binomial(
        BigInt::from(i as i64 - 1),
        BigInt::from(j as i64 - 1),
    ));
    let via_ratio = BigRational::new(
        BigInt::from(j as i64) * binomial(BigInt::from(i as i64), BigInt::from(j as i64)),
        BigInt::from(i as i64),
    );
    if direct != via_ratio {
        return Err(ZetaError::Identity(format!(
            "binomial forms disagree at (i, j) = ({i}, {j})"
        )));
    }
    Ok(direct)
}

fn pow_of<T: Scalar>(x: &T, n: usize) -> T {
    let mut acc = T::one();
    for _ in 0..n {
        acc = acc * x.clone();
    }
    acc
}

/// Chain counts reconstructed from closed-form terms:
///
/// ```text
/// #N_m = sum_k [ beta_k lambda_k^m
///              + sum_j gamma_{k,j} (m/j) binom(m-1, j-1) lambda_k^(m-j) ]
/// ```
///
/// (the `gamma` part contributes only for `j <= m`). Entry 0 is
/// `sum_k beta_k`, which must equal the object count.
pub fn counts_from_terms<T: Scalar>(terms: &[ClosedFormTerm<T>], max_m: u32) -> Vec<T> {
    let mut out = Vec::with_capacity(max_m as usize + 1);
    for m in 0..=max_m as usize {
        let mut total = T::zero();
        for term in terms {
            let mut c = term.beta.clone() * pow_of(&term.lambda, m);
            for (idx, gamma) in term.gammas.iter().enumerate() {
                let j = idx + 1;
                if j > m {
                    break;
                }
                let weight = BigRational::new(
                    BigInt::from(m as i64)
                        * binomial(BigInt::from(m as i64 - 1), BigInt::from(j as i64 - 1)),
                    BigInt::from(j as i64),
                );
                c = c + gamma.clone() * T::from_rational(&weight) * pow_of(&term.lambda, m - j);
            }
            total = total + c;
        }
        out.push(total);
    }
    out
}

/// Numeric chain counts from the closed form, for `m = 0, ..., max_m`.
pub fn counts_from_closed_form(cf: &ZetaClosedForm, max_m: u32) -> Vec<Complex64> {
    counts_from_terms(&cf.numeric_terms(), max_m)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[Vec<i64>]) -> Matrix<BigRational> {
        Matrix::from_i64_rows(rows)
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn rats(values: &[(i64, i64)]) -> Vec<BigRational> {
        values.iter().map(|&(n, d)| rat(n, d)).collect()
    }

    #[test]
    fn nerve_counts_of_known_matrices() {
        let arrow = m(&[vec![1, 1], vec![0, 1]]);
        assert_eq!(
            nerve_counts(&arrow, 5).unwrap(),
            rats(&[(2, 1), (3, 1), (4, 1), (5, 1), (6, 1), (7, 1)])
        );
        let z2 = m(&[vec![2]]);
        assert_eq!(
            nerve_counts(&z2, 3).unwrap(),
            rats(&[(1, 1), (2, 1), (4, 1), (8, 1)])
        );
    }

    #[test]
    fn zeta_series_of_arrow_category() {
        let arrow = m(&[vec![1, 1], vec![0, 1]]);
        assert_eq!(
            zeta_series(&arrow, 3).unwrap(),
            rats(&[(1, 1), (3, 1), (13, 2), (73, 6)])
        );
    }

    #[test]
    fn zeta_series_of_group_is_geometric() {
        // For the two-element group, zeta(z) = 1/(1 - 2z).
        let z2 = m(&[vec![2]]);
        assert_eq!(
            zeta_series(&z2, 4).unwrap(),
            rats(&[(1, 1), (2, 1), (4, 1), (8, 1), (16, 1)])
        );
    }

    #[test]
    fn analyze_arrow_category() {
        let analysis = analyze(&m(&[vec![1, 1], vec![0, 1]])).unwrap();
        assert_eq!(analysis.n, 2);
        assert_eq!(analysis.det_a, rat(1, 1));
        assert_eq!(analysis.det_poly, Poly::from_i64(&[1, -2, 1]));
        assert_eq!(analysis.numerator_poly, Poly::from_i64(&[3, -2]));
        assert_eq!(analysis.closed_form.roots.len(), 1);
        let ClosedFormRoot::Exact(term) = &analysis.closed_form.roots[0] else {
            panic!("arrow closed form must be exact");
        };
        assert_eq!(term.lambda, rat(1, 1));
        assert_eq!(term.beta, rat(2, 1));
        assert_eq!(term.gammas, rats(&[(1, 1)]));
    }

    #[test]
    fn analyze_two_element_group() {
        let analysis = analyze(&m(&[vec![2]])).unwrap();
        let ClosedFormRoot::Exact(term) = &analysis.closed_form.roots[0] else {
            panic!("expected exact closed form");
        };
        assert_eq!(term.lambda, rat(2, 1));
        assert_eq!(term.beta, rat(1, 1));
        assert!(term.gammas.is_empty());
    }

    #[test]
    fn analyze_terminal_category() {
        let analysis = analyze(&m(&[vec![1]])).unwrap();
        let ClosedFormRoot::Exact(term) = &analysis.closed_form.roots[0] else {
            panic!("expected exact closed form");
        };
        assert_eq!(term.lambda, rat(1, 1));
        assert_eq!(term.beta, rat(1, 1));
        assert!(term.gammas.is_empty());
    }

    #[test]
    fn analyze_fibonacci_category() {
        let analysis = analyze(&m(&[vec![1, 1], vec![1, 2]])).unwrap();
        assert!(!analysis.closed_form.all_exact());
        let terms = analysis.closed_form.numeric_terms();
        assert_eq!(terms.len(), 2);
        // Roots sort by real part, so the large lambda comes first.
        let phi_sq = (3.0 + 5.0f64.sqrt()) / 2.0;
        assert!((terms[0].lambda.re - phi_sq).abs() < 1e-13);
        let beta0 = 1.0 + 2.0 / 5.0f64.sqrt();
        let beta1 = 1.0 - 2.0 / 5.0f64.sqrt();
        assert!((terms[0].beta.re - beta0).abs() < 1e-13);
        assert!((terms[1].beta.re - beta1).abs() < 1e-13);
        // The exponents sum to the object count.
        let sum: Complex64 = terms.iter().map(|t| t.beta).sum();
        assert!((sum.re - 2.0).abs() < 1e-12 && sum.im.abs() < 1e-13);
    }

    #[test]
    fn counts_from_closed_form_match_nerve_counts() {
        let arrow = m(&[vec![1, 1], vec![0, 1]]);
        let analysis = analyze(&arrow).unwrap();
        let exact = analysis.closed_form.exact_terms().unwrap();
        let counts = counts_from_terms(&exact, 6);
        assert_eq!(counts, nerve_counts(&arrow, 6).unwrap());

        let fib = m(&[vec![1, 1], vec![1, 2]]);
        let analysis = analyze(&fib).unwrap();
        let numeric = counts_from_closed_form(&analysis.closed_form, 10);
        let reference = nerve_counts(&fib, 10).unwrap();
        for (got, want) in numeric.iter().zip(&reference) {
            let want = Value::Exact(want.clone()).to_c64();
            assert!(
                (got - want).norm() / (1.0 + want.norm()) < 1e-12,
                "{got} vs {want}"
            );
        }
    }

    #[test]
    fn closed_form_with_repeated_irrational_roots() {
        // Block-diagonal pair of Fibonacci matrices: det(E - A z) =
        // (1 - 3z + z^2)^2, so each irrational root has multiplicity 2 and
        // the gamma terms are exercised on the numeric track.
        let a = m(&[
            vec![1, 1, 0, 0],
            vec![1, 2, 0, 0],
            vec![0, 0, 1, 1],
            vec![0, 0, 1, 2],
        ]);
        let analysis = analyze(&a).unwrap();
        assert_eq!(analysis.closed_form.roots.len(), 2);
        for root in &analysis.closed_form.roots {
            let t = root.to_numeric();
            assert_eq!(t.gammas.len(), 1);
        }
        let counts = counts_from_closed_form(&analysis.closed_form, 12);
        let reference = nerve_counts(&a, 12).unwrap();
        for (got, want) in counts.iter().zip(&reference) {
            let want = Value::Exact(want.clone()).to_c64();
            assert!(
                (got - want).norm() / (1.0 + want.norm()) < 1e-10,
                "{got} vs {want}"
            );
        }
    }

    #[test]
    fn singular_matrix_has_no_closed_form() {
        let err = analyze(&m(&[vec![1, 1], vec![1, 1]])).unwrap_err();
        assert_eq!(err, ZetaError::NoMobiusInversion);
    }

    #[test]
    fn counts_entry_zero_is_sum_of_betas() {
        let chain3 = m(&[vec![1, 1, 1], vec![0, 1, 1], vec![0, 0, 1]]);
        let analysis = analyze(&chain3).unwrap();
        let exact = analysis.closed_form.exact_terms().unwrap();
        let counts = counts_from_terms(&exact, 0);
        assert_eq!(counts[0], rat(3, 1));
    }
}
