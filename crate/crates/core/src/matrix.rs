//! Dense matrices over an arbitrary [`Scalar`], with exact determinants,
//! adjugates, and inverses.
//!
//! The determinant uses the Bareiss fraction-free elimination, which keeps
//! intermediate values small over the rationals; the adjugate is built from
//! cofactors so it is defined for singular matrices too.

use crate::scalar::Scalar;
use std::fmt;
use std::ops::{Index, IndexMut};
use thiserror::Error;

/// Errors raised by matrix operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    /// The operation requires a square matrix.
    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },
    /// The operand shapes do not match.
    #[error("matrix shapes {left} and {right} are incompatible")]
    ShapeMismatch { left: String, right: String },
    /// Inversion of a singular matrix was requested.
    #[error("matrix is singular")]
    Singular,
}

/// A dense row-major matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> Matrix<T> {
    /// Build a matrix from rows.
    ///
    /// # Panics
    /// Panics if the rows have unequal lengths or if the matrix is empty.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        assert!(!rows.is_empty(), "matrix must have at least one row");
        let cols = rows[0].len();
        assert!(cols > 0, "matrix must have at least one column");
        assert!(
            rows.iter().all(|r| r.len() == cols),
            "all rows must have the same length"
        );
        let data: Vec<T> = rows.into_iter().flatten().collect();
        Matrix {
            rows: data.len() / cols,
            cols,
            data,
        }
    }

    /// Build a matrix from integer rows, embedding each entry via the scalar.
    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Self {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&n| T::from_i64(n)).collect())
                .collect(),
        )
    }

    /// The `n`-by-`n` zero matrix.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        Matrix {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    /// The `n`-by-`n` identity matrix.
    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    fn require_square(&self) -> Result<usize, MatrixError> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(MatrixError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    /// Apply a function entrywise, possibly changing the scalar type.
    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    /// Entrywise sum of two matrices of equal shape.
    pub fn add(&self, other: &Self) -> Result<Self, MatrixError> {
        self.zip_with(other, |a, b| a.clone() + b.clone())
    }

    /// Entrywise difference of two matrices of equal shape.
    pub fn sub(&self, other: &Self) -> Result<Self, MatrixError> {
        self.zip_with(other, |a, b| a.clone() - b.clone())
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&T, &T) -> T) -> Result<Self, MatrixError> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(MatrixError::ShapeMismatch {
                left: format!("{}x{}", self.rows, self.cols),
                right: format!("{}x{}", other.rows, other.cols),
            });
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| f(a, b))
                .collect(),
        })
    }

    /// Multiply every entry by `c`.
    pub fn scale(&self, c: &T) -> Self {
        self.map(|x| x.clone() * c.clone())
    }

    /// Matrix product.
    pub fn mul(&self, other: &Self) -> Result<Self, MatrixError> {
        if self.cols != other.rows {
            return Err(MatrixError::ShapeMismatch {
                left: format!("{}x{}", self.rows, self.cols),
                right: format!("{}x{}", other.rows, other.cols),
            });
        }
        let mut out: Matrix<T> = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let t = out[(i, j)].clone() + a.clone() * other[(k, j)].clone();
                    out[(i, j)] = t;
                }
            }
        }
        Ok(out)
    }

    /// The `m`-th power of a square matrix (`m = 0` gives the identity).
    pub fn pow(&self, m: u32) -> Result<Self, MatrixError> {
        let n = self.require_square()?;
        let mut acc = Matrix::identity(n);
        for _ in 0..m {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Sum of all entries.
    pub fn sum_entries(&self) -> T {
        self.data.iter().fold(T::zero(), |acc, x| acc + x.clone())
    }

    /// Determinant by Bareiss fraction-free elimination.
    ///
    /// Over the rationals every intermediate division is exact, which keeps
    /// numerators and denominators from exploding.
    pub fn det(&self) -> Result<T, MatrixError> {
        let n = self.require_square()?;
        let mut a = self.data.clone();
        let mut negate = false;
        let mut prev = T::one();
        for k in 0..n.saturating_sub(1) {
            let pivot = (k..n).find(|&r| !a[r * n + k].is_zero());
            let p = match pivot {
                Some(p) => p,
                None => return Ok(T::zero()),
            };
            if p != k {
                for j in 0..n {
                    a.swap(p * n + j, k * n + j);
                }
                negate = !negate;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let t = a[i * n + j].clone() * a[k * n + k].clone()
                        - a[i * n + k].clone() * a[k * n + j].clone();
                    a[i * n + j] = t / prev.clone();
                }
                a[i * n + k] = T::zero();
            }
            prev = a[k * n + k].clone();
        }
        let d = a[(n - 1) * n + (n - 1)].clone();
        Ok(if negate { -d } else { d })
    }

    /// Determinant of the submatrix obtained by deleting `row` and `col`.
    fn minor_det(&self, row: usize, col: usize) -> Result<T, MatrixError> {
        let n = self.require_square()?;
        if n == 1 {
            return Ok(T::one());
        }
        let mut rows = Vec::with_capacity(n - 1);
        for i in 0..n {
            if i == row {
                continue;
            }
            let mut r = Vec::with_capacity(n - 1);
            for j in 0..n {
                if j == col {
                    continue;
                }
                r.push(self[(i, j)].clone());
            }
            rows.push(r);
        }
        Matrix::from_rows(rows).det()
    }

    /// The adjugate (transposed cofactor matrix), satisfying
    /// `adj(M) * M = M * adj(M) = det(M) * E`.
    ///
    /// For a 1x1 matrix the adjugate is `[1]`, so the identity above holds
    /// even in the degenerate case.
    pub fn adjugate(&self) -> Result<Self, MatrixError> {
        let n = self.require_square()?;
        if n == 1 {
            return Ok(Matrix::identity(1));
        }
        let mut adj = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                let c = self.minor_det(j, i)?;
                adj[(i, j)] = if (i + j) % 2 == 0 { c } else { -c };
            }
        }
        Ok(adj)
    }

    /// Inverse by Gauss-Jordan elimination; errors on singular input.
    pub fn inverse(&self) -> Result<Self, MatrixError> {
        let n = self.require_square()?;
        let mut a = self.clone();
        let mut inv: Matrix<T> = Matrix::identity(n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a[(r, col)].is_zero());
            let p = pivot.ok_or(MatrixError::Singular)?;
            if p != col {
                for j in 0..n {
                    let t = a[(p, j)].clone();
                    a[(p, j)] = a[(col, j)].clone();
                    a[(col, j)] = t;
                    let t = inv[(p, j)].clone();
                    inv[(p, j)] = inv[(col, j)].clone();
                    inv[(col, j)] = t;
                }
            }
            let piv = a[(col, col)].clone();
            for j in 0..n {
                a[(col, j)] = a[(col, j)].clone() / piv.clone();
                inv[(col, j)] = inv[(col, j)].clone() / piv.clone();
            }
            for i in 0..n {
                if i == col || a[(i, col)].is_zero() {
                    continue;
                }
                let factor = a[(i, col)].clone();
                for j in 0..n {
                    let t = a[(i, j)].clone() - factor.clone() * a[(col, j)].clone();
                    a[(i, j)] = t;
                    let t = inv[(i, j)].clone() - factor.clone() * inv[(col, j)].clone();
                    inv[(i, j)] = t;
                }
            }
        }
        Ok(inv)
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;

    fn index(&self, (i, j): (usize, usize)) -> &T {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        &mut self.data[i * self.cols + j]
    }
}

impl<T: fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.data[i * self.cols + j])?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    type Q = BigRational;

    fn rat(n: i64) -> Q {
        BigRational::from_integer(BigInt::from(n))
    }

    fn m(rows: &[Vec<i64>]) -> Matrix<Q> {
        Matrix::from_i64_rows(rows)
    }

    #[test]
    fn det_of_small_matrices() {
        assert_eq!(m(&[vec![5]]).det().unwrap(), rat(5));
        assert_eq!(m(&[vec![1, 1], vec![0, 1]]).det().unwrap(), rat(1));
        assert_eq!(m(&[vec![1, 2], vec![3, 4]]).det().unwrap(), rat(-2));
        assert_eq!(m(&[vec![1, 1], vec![1, 1]]).det().unwrap(), rat(0));
    }

    #[test]
    fn det_needs_pivoting() {
        // First pivot is zero; elimination must swap rows.
        let a = m(&[vec![0, 1, 2], vec![1, 0, 3], vec![4, 5, 6]]);
        assert_eq!(a.det().unwrap(), rat(16));
    }

    #[test]
    fn det_of_4x4_with_zero_rows_mixed_in() {
        let a = m(&[
            vec![2, 0, 1, 3],
            vec![0, 1, 0, 1],
            vec![1, 1, 1, 0],
            vec![3, 0, 2, 1],
        ]);
        // Checked by hand via row reduction: det = -1.
        assert_eq!(a.det().unwrap(), rat(-1));
    }

    #[test]
    fn adjugate_times_matrix_is_det_identity() {
        let a = m(&[vec![1, 2, 0], vec![0, 1, 1], vec![2, 0, 1]]);
        let d = a.det().unwrap();
        let adj = a.adjugate().unwrap();
        let expect = Matrix::<Q>::identity(3).scale(&d);
        assert_eq!(adj.mul(&a).unwrap(), expect);
        assert_eq!(a.mul(&adj).unwrap(), expect);
    }

    #[test]
    fn adjugate_of_1x1_is_identity() {
        assert_eq!(m(&[vec![7]]).adjugate().unwrap(), Matrix::identity(1));
    }

    #[test]
    fn adjugate_of_known_2x2() {
        let a = m(&[vec![1, 1], vec![0, 1]]);
        assert_eq!(a.adjugate().unwrap(), m(&[vec![1, -1], vec![0, 1]]));
    }

    #[test]
    fn adjugate_of_singular_matrix_exists() {
        let a = m(&[vec![1, 1], vec![1, 1]]);
        let adj = a.adjugate().unwrap();
        assert_eq!(adj, m(&[vec![1, -1], vec![-1, 1]]));
        assert_eq!(
            adj.mul(&a).unwrap(),
            Matrix::zeros(2, 2),
            "adj(M) * M must vanish when det(M) = 0"
        );
    }

    #[test]
    fn inverse_round_trips() {
        let a = m(&[vec![1, 1], vec![1, 2]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv).unwrap(), Matrix::identity(2));
        assert_eq!(inv, m(&[vec![2, -1], vec![-1, 1]]));
    }

    #[test]
    fn inverse_of_singular_errors() {
        let a = m(&[vec![1, 1], vec![1, 1]]);
        assert_eq!(a.inverse().unwrap_err(), MatrixError::Singular);
    }

    #[test]
    fn pow_counts_paths() {
        let a = m(&[vec![1, 1], vec![0, 1]]);
        assert_eq!(a.pow(2).unwrap(), m(&[vec![1, 2], vec![0, 1]]));
        assert_eq!(a.pow(0).unwrap(), Matrix::identity(2));
        assert_eq!(m(&[vec![2]]).pow(5).unwrap(), m(&[vec![32]]));
    }

    #[test]
    fn sum_entries_adds_everything() {
        let a = m(&[vec![1, 2], vec![3, 4]]);
        assert_eq!(a.sum_entries(), rat(10));
        assert_eq!(a.pow(2).unwrap().sum_entries(), rat(54));
    }

    #[test]
    fn non_square_operations_error() {
        let a: Matrix<Q> = Matrix::zeros(2, 3);
        assert!(matches!(a.det(), Err(MatrixError::NotSquare { .. })));
        assert!(matches!(a.adjugate(), Err(MatrixError::NotSquare { .. })));
        let b: Matrix<Q> = Matrix::zeros(2, 2);
        assert!(matches!(a.add(&b), Err(MatrixError::ShapeMismatch { .. })));
    }
}
