//! Root finding for rational polynomials on a dual exact/numeric track.
//!
//! The input is first split into monic squarefree factors with known
//! multiplicities (exact, via Yun's algorithm). Within each factor, rational
//! roots are found by the rational root theorem and removed by exact
//! deflation; whatever remains is irrational and goes to the Aberth-Ehrlich
//! simultaneous iteration, followed by a Newton polish, a residual gate,
//! and conjugate-pair symmetrization.
//!
//! Because deflation is exact, the polished numeric roots never compete with
//! the rational ones, and multiplicities come from the squarefree structure
//! rather than from numerically clustered roots.

use crate::poly::{squarefree_decompose, Poly, PolyError, SquarefreeFactor};
use crate::value::Value;
use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::collections::BTreeSet;
use thiserror::Error;

/// Errors raised during root finding.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum RootError {
    /// The polynomial has no reciprocal-root decomposition (zero, constant,
    /// or vanishing constant term).
    #[error("degenerate input: {0}")]
    Degenerate(String),
    /// The numeric iteration failed to meet its convergence or residual
    /// targets.
    #[error("numeric root finding failed: {0}")]
    Numerics(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// One root `alpha` of the polynomial, its reciprocal `lambda = 1/alpha`,
/// and its multiplicity.
#[derive(Debug, Clone, PartialEq)]
pub struct Root {
    pub alpha: Value,
    pub lambda: Value,
    pub multiplicity: u32,
}

/// Numeric conditioning information gathered during root finding.
#[derive(Debug, Clone, PartialEq)]
pub struct RootDiagnostics {
    /// How many roots are only known numerically.
    pub numeric_roots: usize,
    /// Largest `|p(root)|` left after polishing, over the numeric roots.
    pub max_residual: f64,
    /// Smallest pairwise distance between distinct roots (infinite when
    /// there are fewer than two).
    pub min_gap: f64,
}

/// All roots of a polynomial, together with its exact squarefree structure.
///
/// The polynomial factors as
/// `p = unit * prod_k factors[k].poly ^ factors[k].multiplicity`,
/// and `roots` lists every root of every factor, tagged exact or numeric.
#[derive(Debug, Clone, PartialEq)]
pub struct RootSet {
    pub roots: Vec<Root>,
    pub factors: Vec<SquarefreeFactor<BigRational>>,
    /// Leading coefficient of the input polynomial.
    pub unit: BigRational,
    pub diagnostics: RootDiagnostics,
}

impl RootSet {
    /// True when every root was found exactly.
    pub fn all_exact(&self) -> bool {
        self.roots.iter().all(|r| r.alpha.is_exact())
    }

    /// Sum of multiplicities; equals the degree of the input polynomial.
    pub fn total_multiplicity(&self) -> usize {
        self.roots.iter().map(|r| r.multiplicity as usize).sum()
    }
}

/// Newton polish iteration cap.
const POLISH_MAX_ITERS: usize = 50;
/// Newton stops when the step drops below `1e-15 * (1 + |z|)`.
const POLISH_STEP_TOL: f64 = 1e-15;
/// Accept a numeric root only if `|p(z)| <= 1e-13 * sum |a_i| |z|^i`.
const RESIDUAL_TOL: f64 = 1e-13;
/// Imaginary parts below `1e-12 * (1 + |re|)` are snapped to zero.
const SNAP_TOL: f64 = 1e-12;
/// Distinct roots of one squarefree factor closer than
/// `1e-10 * (1 + |z|)` indicate a numeric failure.
const CLUSTER_TOL: f64 = 1e-10;
/// Refuse to factor integers larger than this when enumerating rational
/// root candidates; the affected roots are then found numerically.
const FACTOR_BUDGET: u64 = 1_000_000_000_000;

/// Find all roots of `p` with multiplicities.
///
/// Requires `deg p >= 1` and `p(0) != 0` (so that every root has a
/// reciprocal). Rational roots are reported exactly; the rest numerically.
pub fn find_roots(p: &Poly<BigRational>) -> Result<RootSet, RootError> {
    match p.degree() {
        None => return Err(RootError::Degenerate("zero polynomial".into())),
        Some(0) => {
            return Err(RootError::Degenerate(
                "constant polynomial has no roots".into(),
            ))
        }
        Some(_) => {}
    }
    if p.coeff(0).is_zero() {
        return Err(RootError::Degenerate(
            "constant term is zero, so 0 is a root and has no reciprocal".into(),
        ));
    }

    let decomp = squarefree_decompose(p)?;
    let mut roots = vec![];
    let mut max_residual: f64 = 0.0;
    for factor in &decomp.factors {
        let (rational, remainder) = extract_rational_roots(&factor.poly);
        let mut factor_roots: Vec<Value> = rational.into_iter().map(Value::Exact).collect();
        if remainder.degree() > Some(0) {
            let (numeric, residual) = numeric_roots(&remainder, &factor.poly)?;
            max_residual = max_residual.max(residual);
            factor_roots.extend(numeric.into_iter().map(Value::Numeric));
        }
        check_cluster(&factor_roots)?;
        for alpha in factor_roots {
            let lambda = alpha.recip();
            roots.push(Root {
                alpha,
                lambda,
                multiplicity: factor.multiplicity,
            });
        }
    }

    let found: usize = roots.iter().map(|r| r.multiplicity as usize).sum();
    if found != p.degree().unwrap_or(0) {
        return Err(RootError::Numerics(format!(
            "found {found} roots with multiplicity, expected {}",
            p.degree().unwrap_or(0)
        )));
    }

    let numeric_count = roots.iter().filter(|r| !r.alpha.is_exact()).count();
    let min_gap = min_pairwise_gap(&roots);
    Ok(RootSet {
        roots,
        factors: decomp.factors,
        unit: decomp.unit,
        diagnostics: RootDiagnostics {
            numeric_roots: numeric_count,
            max_residual,
            min_gap,
        },
    })
}

/// Pull out the rational roots of a monic squarefree polynomial by the
/// rational root theorem; returns them sorted, plus the exactly deflated
/// remainder.
fn extract_rational_roots(factor: &Poly<BigRational>) -> (Vec<BigRational>, Poly<BigRational>) {
    let ints = primitive_integer_coeffs(factor);
    let candidates = match rational_candidates(&ints) {
        Some(c) => c,
        None => return (vec![], factor.clone()),
    };
    let mut found = vec![];
    let mut current = factor.clone();
    for cand in candidates {
        if current.degree() <= Some(0) {
            break;
        }
        if current.eval(&cand).is_zero() {
            let (quot, rem) = current.deflate(&cand);
            debug_assert!(rem.is_zero(), "deflation at an exact root is exact");
            current = quot;
            found.push(cand);
        }
    }
    found.sort();
    (found, current)
}

/// Clear denominators and content to get primitive integer coefficients.
fn primitive_integer_coeffs(p: &Poly<BigRational>) -> Vec<BigInt> {
    let lcm = p
        .coeffs()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = p
        .coeffs()
        .iter()
        .map(|c| c.numer() * (&lcm / c.denom()))
        .collect();
    let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if content.is_zero() || content.is_one() {
        ints
    } else {
        ints.iter().map(|c| c / &content).collect()
    }
}

/// All candidates `±(divisor of trailing) / (divisor of leading)`, or `None`
/// when the integers involved are too large to factor within budget.
fn rational_candidates(ints: &[BigInt]) -> Option<Vec<BigRational>> {
    let trailing = ints.first()?.abs();
    let leading = ints.last()?.abs();
    let p_divs = divisors(&trailing)?;
    let q_divs = divisors(&leading)?;
    let mut set = BTreeSet::new();
    for p in &p_divs {
        for q in &q_divs {
            let r = BigRational::new(p.clone(), q.clone());
            set.insert(-r.clone());
            set.insert(r);
        }
    }
    Some(set.into_iter().collect())
}

/// Positive divisors by trial division; `None` when `n` exceeds the
/// factoring budget.
fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let n = n.to_u64().filter(|&n| n <= FACTOR_BUDGET)?;
    if n == 0 {
        return None;
    }
    let mut divs = vec![];
    let mut d = 1u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            divs.push(BigInt::from(d));
            if d != n / d {
                divs.push(BigInt::from(n / d));
            }
        }
        d += 1;
    }
    divs.sort();
    Some(divs)
}

/// Find the roots of the (exactly deflated, squarefree) `remainder`
/// numerically: Aberth-Ehrlich start, Newton polish, residual gate against
/// the full `factor`, imaginary-part snapping, and conjugate-pair
/// symmetrization. Returns the roots sorted and the worst residual.
fn numeric_roots(
    remainder: &Poly<BigRational>,
    factor: &Poly<BigRational>,
) -> Result<(Vec<Complex64>, f64), RootError> {
    let rem_c: Vec<Complex64> = to_c64_coeffs(remainder);
    let fac_c: Vec<Complex64> = to_c64_coeffs(factor);
    let approx = aberth(&rem_c)?;

    let deriv: Vec<Complex64> = derivative_coeffs(&rem_c);
    let mut polished: Vec<Complex64> = approx
        .into_iter()
        .map(|z| newton_polish(&rem_c, &deriv, z))
        .collect();

    for z in &mut polished {
        if !z.re.is_finite() || !z.im.is_finite() {
            return Err(RootError::Numerics(
                "iteration produced a non-finite root".into(),
            ));
        }
        if z.im.abs() <= SNAP_TOL * (1.0 + z.re.abs()) {
            *z = Complex64::new(z.re, 0.0);
        }
    }
    symmetrize_conjugates(&mut polished)?;

    let mut worst = 0.0f64;
    for &z in &polished {
        let residual = horner(&fac_c, z).norm();
        let scale: f64 = fac_c
            .iter()
            .enumerate()
            .map(|(i, c)| c.norm() * z.norm().powi(i as i32))
            .sum();
        if residual > RESIDUAL_TOL * scale.max(1.0) {
            return Err(RootError::Numerics(format!(
                "root {z} has residual {residual:.3e} above the acceptance gate"
            )));
        }
        worst = worst.max(residual);
    }

    polished.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    Ok((polished, worst))
}

fn to_c64_coeffs(p: &Poly<BigRational>) -> Vec<Complex64> {
    p.coeffs()
        .iter()
        .map(|c| Complex64::new(c.to_f64().unwrap_or(f64::NAN), 0.0))
        .collect()
}

fn derivative_coeffs(c: &[Complex64]) -> Vec<Complex64> {
    c.iter()
        .enumerate()
        .skip(1)
        .map(|(i, a)| a * i as f64)
        .collect()
}

fn horner(c: &[Complex64], z: Complex64) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for a in c.iter().rev() {
        acc = acc * z + a;
    }
    acc
}

/// Aberth-Ehrlich simultaneous iteration on a polynomial given by
/// coefficients (constant first). Assumes a squarefree input with nonzero
/// constant term.
fn aberth(coeffs: &[Complex64]) -> Result<Vec<Complex64>, RootError> {
    let d = coeffs.len() - 1;
    let lead = coeffs[d];
    let monic: Vec<Complex64> = coeffs.iter().map(|c| c / lead).collect();
    match d {
        0 => Ok(vec![]),
        1 => Ok(vec![-monic[0]]),
        2 => Ok(quadratic_roots(monic[0], monic[1])),
        _ => {
            let deriv = derivative_coeffs(&monic);
            // Start on a circle of radius |c_0|^(1/d) (the geometric mean of
            // the root magnitudes), with an angular offset that avoids any
            // symmetry of the real axis.
            let radius = monic[0].norm().powf(1.0 / d as f64).clamp(1e-3, 1e6);
            let mut z: Vec<Complex64> = (0..d)
                .map(|k| {
                    let theta = 2.0 * std::f64::consts::PI * k as f64 / d as f64 + 0.4;
                    radius * Complex64::new(theta.cos(), theta.sin())
                })
                .collect();
            for _ in 0..200 {
                let mut moved = false;
                for i in 0..d {
                    let pz = horner(&monic, z[i]);
                    let dz = horner(&deriv, z[i]);
                    let ratio = if dz.norm() == 0.0 {
                        // Sitting on a critical point: nudge instead.
                        z[i] += Complex64::new(1e-6, 1e-6);
                        continue;
                    } else {
                        pz / dz
                    };
                    let mut sum = Complex64::new(0.0, 0.0);
                    for j in 0..d {
                        if j != i {
                            sum += (z[i] - z[j]).finv();
                        }
                    }
                    let denom = Complex64::new(1.0, 0.0) - ratio * sum;
                    let step = if denom.norm() == 0.0 {
                        ratio
                    } else {
                        ratio / denom
                    };
                    z[i] -= step;
                    if step.norm() > 1e-14 * (1.0 + z[i].norm()) {
                        moved = true;
                    }
                }
                if !moved {
                    break;
                }
            }
            if z.iter().any(|w| !w.re.is_finite() || !w.im.is_finite()) {
                return Err(RootError::Numerics(
                    "simultaneous iteration diverged".into(),
                ));
            }
            Ok(z)
        }
    }
}

/// Roots of `z^2 + bz + c`, choosing the numerically stable branch.
fn quadratic_roots(c: Complex64, b: Complex64) -> Vec<Complex64> {
    let disc = (b * b - 4.0 * c).sqrt();
    let q = if (b + disc).norm() >= (b - disc).norm() {
        -(b + disc) / 2.0
    } else {
        -(b - disc) / 2.0
    };
    // q is nonzero because the constant term c = r1 * r2 is nonzero.
    vec![q, c / q]
}

fn newton_polish(p: &[Complex64], dp: &[Complex64], mut z: Complex64) -> Complex64 {
    for _ in 0..POLISH_MAX_ITERS {
        let d = horner(dp, z);
        if d.norm() == 0.0 {
            break;
        }
        let step = horner(p, z) / d;
        z -= step;
        if step.norm() < POLISH_STEP_TOL * (1.0 + z.norm()) {
            break;
        }
    }
    z
}

/// Make the non-real roots exact conjugate pairs (the input polynomial has
/// real coefficients). Errors if some non-real root has no partner.
fn symmetrize_conjugates(roots: &mut [Complex64]) -> Result<(), RootError> {
    let mut paired = vec![false; roots.len()];
    for i in 0..roots.len() {
        if roots[i].im <= 0.0 || paired[i] {
            continue;
        }
        let mut best: Option<(usize, f64)> = None;
        for j in 0..roots.len() {
            if j == i || paired[j] || roots[j].im >= 0.0 {
                continue;
            }
            let dist = (roots[i] - roots[j].conj()).norm();
            if best.is_none_or(|(_, b)| dist < b) {
                best = Some((j, dist));
            }
        }
        match best {
            Some((j, dist)) if dist <= 1e-8 * (1.0 + roots[i].norm()) => {
                let avg = (roots[i] + roots[j].conj()) / 2.0;
                roots[i] = avg;
                roots[j] = avg.conj();
                paired[i] = true;
                paired[j] = true;
            }
            _ => {
                return Err(RootError::Numerics(format!(
                    "no conjugate partner for root {}",
                    roots[i]
                )))
            }
        }
    }
    if let Some(z) = roots
        .iter()
        .zip(paired)
        .find_map(|(z, p)| (z.im < 0.0 && !p).then_some(z))
    {
        return Err(RootError::Numerics(format!(
            "no conjugate partner for root {z}"
        )));
    }
    Ok(())
}

/// Error out if two roots of one squarefree factor nearly coincide; a
/// squarefree factor has simple roots, so clustering means the numerics
/// failed.
fn check_cluster(roots: &[Value]) -> Result<(), RootError> {
    for i in 0..roots.len() {
        for j in i + 1..roots.len() {
            let a = roots[i].to_c64();
            let b = roots[j].to_c64();
            let gap = (a - b).norm();
            if gap < CLUSTER_TOL * (1.0 + a.norm().max(b.norm())) {
                return Err(RootError::Numerics(format!(
                    "roots {a} and {b} of one squarefree factor nearly coincide"
                )));
            }
        }
    }
    Ok(())
}

fn min_pairwise_gap(roots: &[Root]) -> f64 {
    let mut min = f64::INFINITY;
    for i in 0..roots.len() {
        for j in i + 1..roots.len() {
            let gap = (roots[i].alpha.to_c64() - roots[j].alpha.to_c64()).norm();
            min = min.min(gap);
        }
    }
    min
}
