//! Dense matrices over arbitrary-precision integers.
//!
//! Every matrix in the engine (adjacency matrices, Chebyshev values, the
//! blocks of the block recursion, the companion operator of the resolution
//! module) is an [`IntMatrix`]. Arithmetic is exact; shape mismatches are
//! reported through [`Error::DimensionMismatch`] by the checked methods and
//! panic in the operator impls, which are reserved for internally consistent
//! shapes.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Dense row-major integer matrix.
///
/// Most matrices are square, but the block machinery needs rectangular
/// off-diagonal blocks, so the shape is `rows x cols`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn from_vec(rows: usize, cols: usize, data: Vec<BigInt>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::Empty);
        }
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                op: "from_vec",
                left: (rows, cols),
                right: (data.len(), 1),
            });
        }
        Ok(Self { rows, cols, data })
    }

    /// Builds a matrix from nested rows; every row must have the same length.
    pub fn from_rows<T: Into<BigInt>>(rows: Vec<Vec<T>>) -> Result<Self> {
        let nrows = rows.len();
        if nrows == 0 {
            return Err(Error::Empty);
        }
        let ncols = rows[0].len();
        let mut data = Vec::with_capacity(nrows * ncols);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != ncols {
                return Err(Error::Ragged {
                    row: i,
                    len: row.len(),
                    expected: ncols,
                });
            }
            data.extend(row.into_iter().map(Into::into));
        }
        Self::from_vec(nrows, ncols, data)
    }

    /// Convenience constructor for literals in code and tests.
    ///
    /// Panics on ragged or empty input.
    pub fn from_i64<const C: usize>(rows: &[[i64; C]]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.to_vec()).collect()).expect("well-formed literal")
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        assert!(rows > 0 && cols > 0, "empty matrix");
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |_, _| BigInt::zero())
    }

    pub fn zero(n: usize) -> Self {
        Self::zeros(n, n)
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { BigInt::one() } else { BigInt::zero() })
    }

    /// The antidiagonal identity `I⁰`: ones at `(i, n-1-i)`.
    pub fn anti_identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| {
            if i + j + 1 == n {
                BigInt::one()
            } else {
                BigInt::zero()
            }
        })
    }

    /// The all-ones matrix `U`.
    pub fn ones(n: usize) -> Self {
        Self::from_fn(n, n, |_, _| BigInt::one())
    }

    /// The matrix unit `E_ij` (0-based indices).
    pub fn unit(n: usize, i: usize, j: usize) -> Self {
        Self::from_fn(n, n, |r, c| {
            if r == i && c == j {
                BigInt::one()
            } else {
                BigInt::zero()
            }
        })
    }

    /// Permutation matrix whose row `i` is `ε_{perm[i]}`.
    pub fn permutation(perm: &[usize]) -> Self {
        let n = perm.len();
        Self::from_fn(n, n, |i, j| {
            if perm[i] == j {
                BigInt::one()
            } else {
                BigInt::zero()
            }
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    /// Side length of a square matrix (the row count otherwise).
    pub fn dim(&self) -> usize {
        self.rows
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn ensure_square(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigInt) {
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn entries(&self) -> impl Iterator<Item = &BigInt> {
        self.data.iter()
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let v = self.get(i, j);
                    if i == j {
                        v.is_one()
                    } else {
                        v.is_zero()
                    }
                })
            })
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (i + 1..self.cols).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn is_nonnegative(&self) -> bool {
        self.data.iter().all(|v| !v.is_negative())
    }

    /// Largest absolute value of any entry.
    pub fn max_abs(&self) -> BigInt {
        self.data
            .iter()
            .map(|v| v.abs())
            .max()
            .unwrap_or_else(BigInt::zero)
    }

    pub fn min_entry(&self) -> BigInt {
        self.data.iter().min().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn trace(&self) -> BigInt {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i)).sum()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// `X⁰`: every row with its entries reversed, i.e. `X·I⁰`.
    pub fn row_reverse(&self) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| {
            self.get(i, self.cols - 1 - j).clone()
        })
    }

    /// `I⁰·X·I⁰`: the matrix with the vertex order reversed.
    pub fn reverse_labeling(&self) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| {
            self.get(self.rows - 1 - i, self.cols - 1 - j).clone()
        })
    }

    /// Relabels vertices: the result has entry `(i, j)` equal to
    /// `self[perm[i]][perm[j]]`. Equivalent to `P·X·Pᵗ` with
    /// `P = IntMatrix::permutation(perm)`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.rows, "permutation length");
        assert!(self.is_square(), "permuted needs a square matrix");
        Self::from_fn(self.rows, self.cols, |i, j| self.get(perm[i], perm[j]).clone())
    }

    pub fn submatrix(&self, row0: usize, col0: usize, rows: usize, cols: usize) -> Self {
        assert!(row0 + rows <= self.rows && col0 + cols <= self.cols, "submatrix out of range");
        Self::from_fn(rows, cols, |i, j| self.get(row0 + i, col0 + j).clone())
    }

    /// Assembles `[[tl, tr], [bl, br]]`.
    pub fn from_blocks(tl: &Self, tr: &Self, bl: &Self, br: &Self) -> Result<Self> {
        if tl.rows != tr.rows || bl.rows != br.rows || tl.cols != bl.cols || tr.cols != br.cols {
            return Err(Error::DimensionMismatch {
                op: "from_blocks",
                left: tl.shape(),
                right: br.shape(),
            });
        }
        let rows = tl.rows + bl.rows;
        let cols = tl.cols + tr.cols;
        Ok(Self::from_fn(rows, cols, |i, j| {
            match (i < tl.rows, j < tl.cols) {
                (true, true) => tl.get(i, j),
                (true, false) => tr.get(i, j - tl.cols),
                (false, true) => bl.get(i - tl.rows, j),
                (false, false) => br.get(i - tl.rows, j - tl.cols),
            }
            .clone()
        }))
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch {
                op: "mul",
                left: self.shape(),
                right: rhs.shape(),
            });
        }
        let mut out = vec![BigInt::zero(); self.rows * rhs.cols];
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                let out_row = &mut out[i * rhs.cols..(i + 1) * rhs.cols];
                for (o, b) in out_row.iter_mut().zip(rhs.row(k)) {
                    if !b.is_zero() {
                        *o += a * b;
                    }
                }
            }
        }
        Ok(Self {
            rows: self.rows,
            cols: rhs.cols,
            data: out,
        })
    }

    fn zip_with(&self, rhs: &Self, op: &'static str, f: impl Fn(&BigInt, &BigInt) -> BigInt) -> Result<Self> {
        if self.shape() != rhs.shape() {
            return Err(Error::DimensionMismatch {
                op,
                left: self.shape(),
                right: rhs.shape(),
            });
        }
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| f(a, b)).collect(),
        })
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self> {
        self.zip_with(rhs, "add", |a, b| a + b)
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self> {
        self.zip_with(rhs, "sub", |a, b| a - b)
    }

    pub fn scale(&self, factor: &BigInt) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| v * factor).collect(),
        }
    }

    pub fn scale_i64(&self, factor: i64) -> Self {
        self.scale(&BigInt::from(factor))
    }

    /// Integer `λ` with `self == λ·other`, if one exists. `other` must be nonzero.
    pub fn scalar_multiple_of(&self, other: &Self) -> Option<BigInt> {
        if self.shape() != other.shape() {
            return None;
        }
        let pivot = other.data.iter().position(|v| !v.is_zero())?;
        let (lambda, rem) = num_integer::Integer::div_rem(&self.data[pivot], &other.data[pivot]);
        if !rem.is_zero() {
            return None;
        }
        self.data
            .iter()
            .zip(&other.data)
            .all(|(a, b)| *a == &lambda * b)
            .then_some(lambda)
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.cols, "vector length");
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }
}

/// Exact matrix product; errors on a shape mismatch.
pub fn mat_mul(a: &IntMatrix, b: &IntMatrix) -> Result<IntMatrix> {
    a.checked_mul(b)
}

/// `X⁰`, see [`IntMatrix::row_reverse`].
pub fn row_reverse(x: &IntMatrix) -> IntMatrix {
    x.row_reverse()
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;

    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        self.checked_mul(rhs).expect("matrix product shape")
    }
}

impl Add for &IntMatrix {
    type Output = IntMatrix;

    fn add(self, rhs: &IntMatrix) -> IntMatrix {
        self.checked_add(rhs).expect("matrix sum shape")
    }
}

impl Sub for &IntMatrix {
    type Output = IntMatrix;

    fn sub(self, rhs: &IntMatrix) -> IntMatrix {
        self.checked_sub(rhs).expect("matrix difference shape")
    }
}

impl Neg for &IntMatrix {
    type Output = IntMatrix;

    fn neg(self) -> IntMatrix {
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| -v).collect(),
        }
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntMatrix{:?} ", self.shape())?;
        f.debug_list().entries(self.to_rows()).finish()
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.data.iter().map(ToString::to_string).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(1);
        for i in 0..self.rows {
            let line: Vec<String> = (0..self.cols)
                .map(|j| format!("{:>width$}", cells[i * self.cols + j]))
                .collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}
