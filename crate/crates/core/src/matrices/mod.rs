//! Exact square matrices over any [`Ring`], plus the `SL_2` generator and
//! factorization machinery in [`sl2`].
//!
//! Determinants use Laplace expansion along the row or column with the most
//! zeros, and inverses go through the adjugate, so everything stays exact
//! over non-field rings such as `k[t, t^-1]`.

pub mod sl2;

pub use sl2::{
    bruhat_decompose_sl2, ElementaryFactor, ElementaryWord, ELEMENTARY_FACTOR_BUDGET,
};

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::rings::Ring;

/// Errors from matrix construction and arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MatrixError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix rows do not form a square matrix")]
    NotSquare,
    #[error("matrix is not invertible over its ring")]
    NotInvertible,
    #[error("matrix determinant is not 1")]
    NotUnimodular,
    #[error("zero parameter for a generator that requires a unit")]
    ZeroParameter,
    #[error("word length {length} exceeds the factor budget {budget}")]
    BudgetExceeded { length: usize, budget: usize },
}

/// A square matrix with entries in a single exact ring.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix<R: Ring> {
    n: usize,
    entries: Vec<R>,
}

impl<R: Ring> Matrix<R> {
    /// Build from rows; fails unless the rows form a nonempty square array.
    pub fn from_rows(rows: Vec<Vec<R>>) -> Result<Self, MatrixError> {
        let n = rows.len();
        if n == 0 || rows.iter().any(|r| r.len() != n) {
            return Err(MatrixError::NotSquare);
        }
        Ok(Matrix {
            n,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> R) -> Self {
        assert!(n > 0, "matrices have positive dimension");
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(f(i, j));
            }
        }
        Matrix { n, entries }
    }

    /// Identity matrix of size `n` in the ring of `witness`.
    pub fn identity(n: usize, witness: &R) -> Self {
        Self::from_fn(n, |i, j| {
            if i == j {
                witness.one_of()
            } else {
                witness.zero_of()
            }
        })
    }

    /// Identity of the same size and ring as `self`.
    pub fn identity_like(&self) -> Self {
        Self::identity(self.n, &self.entries[0])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> &R {
        &self.entries[i * self.n + j]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[R]> {
        self.entries.chunks(self.n)
    }

    pub fn entries(&self) -> &[R] {
        &self.entries
    }

    pub fn is_identity(&self) -> bool {
        (0..self.n).all(|i| {
            (0..self.n).all(|j| {
                let e = self.entry(i, j);
                if i == j {
                    e.is_one()
                } else {
                    e.is_zero()
                }
            })
        })
    }

    pub fn map<S: Ring>(&self, mut f: impl FnMut(&R) -> S) -> Matrix<S> {
        Matrix {
            n: self.n,
            entries: self.entries.iter().map(&mut f).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.n, |i, j| self.entry(j, i).clone())
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self, MatrixError> {
        if self.n != rhs.n {
            return Err(MatrixError::DimensionMismatch {
                expected: self.n,
                found: rhs.n,
            });
        }
        Ok(Self::from_fn(self.n, |i, j| {
            let mut acc = self.entries[0].zero_of();
            for k in 0..self.n {
                acc = acc + self.entry(i, k).clone() * rhs.entry(k, j).clone();
            }
            acc
        }))
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self, MatrixError> {
        if self.n != rhs.n {
            return Err(MatrixError::DimensionMismatch {
                expected: self.n,
                found: rhs.n,
            });
        }
        Ok(Self::from_fn(self.n, |i, j| {
            self.entry(i, j).clone() + rhs.entry(i, j).clone()
        }))
    }

    pub fn scale(&self, c: &R) -> Self {
        self.map(|e| e.clone() * c.clone())
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = self.identity_like();
        for _ in 0..exp {
            acc = acc.checked_mul(self).expect("same dimension");
        }
        acc
    }

    /// Matrix–vector product.
    pub fn apply(&self, v: &[R]) -> Result<Vec<R>, MatrixError> {
        if v.len() != self.n {
            return Err(MatrixError::DimensionMismatch {
                expected: self.n,
                found: v.len(),
            });
        }
        Ok((0..self.n)
            .map(|i| {
                let mut acc = self.entries[0].zero_of();
                for k in 0..self.n {
                    acc = acc + self.entry(i, k).clone() * v[k].clone();
                }
                acc
            })
            .collect())
    }

    pub fn trace(&self) -> R {
        let mut acc = self.entries[0].zero_of();
        for i in 0..self.n {
            acc = acc + self.entry(i, i).clone();
        }
        acc
    }

    fn minor(&self, row: usize, col: usize) -> Self {
        debug_assert!(self.n > 1);
        Self::from_fn(self.n - 1, |i, j| {
            let ii = if i < row { i } else { i + 1 };
            let jj = if j < col { j } else { j + 1 };
            self.entry(ii, jj).clone()
        })
    }

    /// Exact determinant by Laplace expansion along the row or column with
    /// the most zero entries.
    pub fn det(&self) -> R {
        match self.n {
            1 => self.entries[0].clone(),
            2 => {
                self.entry(0, 0).clone() * self.entry(1, 1).clone()
                    - self.entry(0, 1).clone() * self.entry(1, 0).clone()
            }
            n => {
                let mut best_row = 0;
                let mut best_row_zeros = 0;
                let mut best_col = 0;
                let mut best_col_zeros = 0;
                for i in 0..n {
                    let zr = (0..n).filter(|&j| self.entry(i, j).is_zero()).count();
                    if zr > best_row_zeros {
                        best_row_zeros = zr;
                        best_row = i;
                    }
                    let zc = (0..n).filter(|&j| self.entry(j, i).is_zero()).count();
                    if zc > best_col_zeros {
                        best_col_zeros = zc;
                        best_col = i;
                    }
                }
                let mut acc = self.entries[0].zero_of();
                if best_row_zeros >= best_col_zeros {
                    let i = best_row;
                    for j in 0..n {
                        let e = self.entry(i, j);
                        if e.is_zero() {
                            continue;
                        }
                        let cof = self.minor(i, j).det();
                        let term = e.clone() * cof;
                        acc = if (i + j) % 2 == 0 { acc + term } else { acc - term };
                    }
                } else {
                    let j = best_col;
                    for i in 0..n {
                        let e = self.entry(i, j);
                        if e.is_zero() {
                            continue;
                        }
                        let cof = self.minor(i, j).det();
                        let term = e.clone() * cof;
                        acc = if (i + j) % 2 == 0 { acc + term } else { acc - term };
                    }
                }
                acc
            }
        }
    }

    /// The adjugate matrix, satisfying `self · adj = det · I` exactly.
    pub fn adjugate(&self) -> Self {
        if self.n == 1 {
            return Self::from_fn(1, |_, _| self.entries[0].one_of());
        }
        Self::from_fn(self.n, |i, j| {
            // Transposed cofactor: entry (i, j) is the (j, i) cofactor.
            let cof = self.minor(j, i).det();
            if (i + j) % 2 == 0 {
                cof
            } else {
                cof.zero_of() - cof
            }
        })
    }

    /// Exact inverse via adjugate over determinant; requires `det` to be a
    /// unit of the ring.
    pub fn inverse(&self) -> Result<Self, MatrixError> {
        let d = self.det();
        let dinv = d.try_inverse().ok_or(MatrixError::NotInvertible)?;
        Ok(self.adjugate().scale(&dinv))
    }

    pub fn is_unimodular(&self) -> bool {
        self.det().is_one()
    }

    /// Canonical dedup key: dimension plus the canonical entry strings.
    pub fn canonical_key(&self) -> String {
        let mut s = format!("{}:", self.n);
        for (idx, e) in self.entries.iter().enumerate() {
            if idx > 0 {
                s.push(';');
            }
            s.push_str(&e.to_string());
        }
        s
    }

    /// Serialize into the shared record format under the given ring tag.
    pub fn to_record(&self, ring_tag: &str) -> MatrixRecord {
        MatrixRecord {
            n: self.n,
            ring: ring_tag.to_string(),
            min_poly: None,
            entries: self.entries.iter().map(|e| e.to_string()).collect(),
        }
    }
}

impl<R: Ring> std::ops::Mul for &Matrix<R> {
    type Output = Matrix<R>;
    fn mul(self, rhs: &Matrix<R>) -> Matrix<R> {
        self.checked_mul(rhs).expect("matrix dimension mismatch")
    }
}

impl<R: Ring> fmt::Display for Matrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.rows().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (j, e) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", e)?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Ring tags used by the shared matrix serialization.
pub mod ring_tags {
    pub const RATIONAL: &str = "rational";
    pub const RATIONAL_FUNCTION: &str = "rational_function";
    pub const LAURENT: &str = "laurent";
    pub const NUMBER_FIELD: &str = "number_field";
}

/// The shared serialization of a matrix: dimension, ring tag, and row-major
/// canonical scalar strings. Number-field matrices carry their defining
/// minimal polynomial so the record is self-contained.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct MatrixRecord {
    pub n: usize,
    pub ring: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub min_poly: Option<Vec<String>>,
    pub entries: Vec<String>,
}

/// Row rank of a set of vectors over a field, by exact Gaussian elimination.
/// Entries must come from a ring in which every nonzero element is a unit.
pub(crate) fn row_rank<F: Ring>(rows: &[Vec<F>]) -> usize {
    let mut work: Vec<Vec<F>> = rows.to_vec();
    let width = work.first().map(|r| r.len()).unwrap_or(0);
    let mut rank = 0;
    for col in 0..width {
        let Some(pivot) = (rank..work.len()).find(|&r| !work[r][col].is_zero()) else {
            continue;
        };
        work.swap(rank, pivot);
        let inv = work[rank][col]
            .try_inverse()
            .expect("nonzero field element is invertible");
        for j in 0..width {
            work[rank][j] = work[rank][j].clone() * inv.clone();
        }
        for r in 0..work.len() {
            if r != rank && !work[r][col].is_zero() {
                let factor = work[r][col].clone();
                for j in 0..width {
                    work[r][j] =
                        work[r][j].clone() - factor.clone() * work[rank][j].clone();
                }
            }
        }
        rank += 1;
        if rank == work.len() {
            break;
        }
    }
    rank
}

/// Solve the square system `m · x = rhs` over a field; `None` when singular.
pub(crate) fn solve_square<F: Ring>(m: &Matrix<F>, rhs: &[F]) -> Option<Vec<F>> {
    let n = m.n();
    assert_eq!(rhs.len(), n);
    let mut a: Vec<Vec<F>> = m.rows().map(|r| r.to_vec()).collect();
    let mut b: Vec<F> = rhs.to_vec();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        b.swap(col, pivot);
        let inv = a[col][col].try_inverse()?;
        for j in 0..n {
            a[col][j] = a[col][j].clone() * inv.clone();
        }
        b[col] = b[col].clone() * inv.clone();
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let factor = a[r][col].clone();
                for j in 0..n {
                    a[r][j] = a[r][j].clone() - factor.clone() * a[col][j].clone();
                }
                b[r] = b[r].clone() - factor * b[col].clone();
            }
        }
    }
    Some(b)
}
