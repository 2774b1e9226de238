//! Exact zeta functions of finite categories.
//!
//! A finite category with `N` objects is summarised by its integer
//! adjacency matrix `A`, whose `(i, j)` entry counts morphisms from object
//! `i` to object `j`. The number of composable `m`-chains of non-identity
//! shape data is `#N_m = sum(A^m)` (sum of all entries), and the zeta
//! function of the category is the exponential generating identity
//!
//! ```text
//! zeta(z) = exp( sum_{m >= 1} #N_m / m * z^m ).
//! ```
//!
//! When `det A != 0` the category has Möbius inversion and `zeta`
//! collapses to a closed form
//!
//! ```text
//! zeta(z) = prod_k (1 - lambda_k z)^(-beta_k)
//!           * exp( sum_k sum_{j >= 1} gamma_{k,j} z^j / (j (1 - lambda_k z)^j) )
//! ```
//!
//! indexed by the distinct eigenvalue reciprocals `alpha_k = 1/lambda_k`
//! of `det(E - A z)`. This crate computes both representations with exact
//! rational arithmetic wherever the spectrum allows it (falling back to
//! validated floating point otherwise), derives the series and Möbius
//! Euler characteristics, and mechanically verifies the identities tying
//! all of these together; see [`zeta::analyze`], [`euler::euler_characteristic`],
//! and [`verify::verify_conjecture`].
//!
//! Categories are described by [`category::FiniteCategory`] — built from
//! explicit morphism/composition data, a poset, or a monoid table — and
//! everything downstream consumes only the adjacency matrix.

pub mod category;
pub mod charpoly;
pub mod euler;
pub mod matrix;
pub mod partial_fractions;
pub mod poly;
pub mod roots;
pub mod scalar;
pub mod value;
pub mod verify;
pub mod zeta;

pub use category::{CategoryError, FiniteCategory};
pub use euler::EulerResult;
pub use matrix::{Matrix, MatrixError};
pub use partial_fractions::{PfDecomposition, PfError};
pub use poly::{Poly, PolyError};
pub use roots::{Root, RootError, RootSet};
pub use scalar::Scalar;
pub use value::Value;
pub use verify::{ConjectureReport, LemmaSuite, PointClass};
pub use zeta::{ZetaAnalysis, ZetaClosedForm, ZetaError};

/// Matrix over exact rationals — the working type for adjacency matrices.
pub type RationalMatrix = Matrix<num_rational::BigRational>;
/// Polynomial over exact rationals.
pub type RationalPoly = Poly<num_rational::BigRational>;
/// Polynomial over complex doubles, for the numeric fallback track.
pub type ComplexPoly = Poly<num_complex::Complex64>;
