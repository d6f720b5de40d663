use std::fmt;

use super::ExactError;
use crate::scalar::Scalar;

/// Dense row-major matrix with exact integer entries.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

/// The operations exposed by [`matrix_arithmetic`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MatrixOp {
    Multiply,
    Add,
    Power(i64),
    Inverse,
}

/// Applies `op` to `a` (and `b` for the binary operations).
pub fn matrix_arithmetic<T: Scalar>(
    a: &Matrix<T>,
    b: Option<&Matrix<T>>,
    op: MatrixOp,
) -> Result<Matrix<T>, ExactError> {
    let rhs = || b.ok_or_else(|| ExactError::DimensionMismatch("missing right operand".into()));
    match op {
        MatrixOp::Multiply => a.mul(rhs()?),
        MatrixOp::Add => a.add(rhs()?),
        MatrixOp::Power(k) => a.pow(k),
        MatrixOp::Inverse => a.inverse(),
    }
}

impl<T: Scalar> Matrix<T> {
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Result<Self, ExactError> {
        if rows == 0 || cols == 0 || rows * cols != data.len() {
            return Err(ExactError::DimensionMismatch(format!(
                "{rows}x{cols} matrix cannot hold {} entries",
                data.len()
            )));
        }
        Ok(Self { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self, ExactError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(ExactError::DimensionMismatch("ragged rows".into()));
        }
        Self::new(r, c, rows.into_iter().flatten().collect())
    }

    /// Convenience constructor from small literals, e.g. `Matrix::from_i64(&[[2, 1], [1, 1]])`.
    pub fn from_i64<const R: usize, const C: usize>(rows: &[[i64; C]; R]) -> Self {
        let data = rows
            .iter()
            .flatten()
            .map(|&v| T::from_i64_exact(v))
            .collect();
        Self::new(R, C, data).expect("literal matrix must be non-empty")
    }

    pub fn identity(n: usize) -> Self {
        let mut data = vec![T::zero(); n * n];
        for i in 0..n {
            data[i * n + i] = T::one();
        }
        Self {
            rows: n,
            cols: n,
            data,
        }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
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

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: T) {
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let e = self.get(i, j);
                    if i == j {
                        e.is_one()
                    } else {
                        e.is_zero()
                    }
                })
            })
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.get(i, j).clone());
            }
        }
        Self {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self, ExactError> {
        if self.cols != other.rows {
            return Err(ExactError::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut data = Vec::with_capacity(self.rows * other.cols);
        for i in 0..self.rows {
            let row = self.row(i);
            for j in 0..other.cols {
                let mut acc = T::zero();
                for (k, a) in row.iter().enumerate() {
                    let b = other.get(k, j);
                    if !a.is_zero() && !b.is_zero() {
                        acc = acc + a.clone() * b.clone();
                    }
                }
                data.push(acc);
            }
        }
        Ok(Self {
            rows: self.rows,
            cols: other.cols,
            data,
        })
    }

    pub fn add(&self, other: &Self) -> Result<Self, ExactError> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(ExactError::DimensionMismatch(format!(
                "cannot add {}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a.clone() + b.clone())
            .collect();
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, ExactError> {
        self.add(&other.scale(&-T::one()))
    }

    pub fn scale(&self, c: &T) -> Self {
        let data = self.data.iter().map(|a| a.clone() * c.clone()).collect();
        Self {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    /// `self · v` for a column vector `v`.
    pub fn mul_vec(&self, v: &[T]) -> Result<Vec<T>, ExactError> {
        if v.len() != self.cols {
            return Err(ExactError::DimensionMismatch(format!(
                "{}x{} matrix applied to vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(T::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect())
    }

    pub fn trace(&self) -> T {
        (0..self.rows.min(self.cols)).fold(T::zero(), |acc, i| acc + self.get(i, i).clone())
    }

    fn require_square(&self) -> Result<(), ExactError> {
        if self.is_square() {
            Ok(())
        } else {
            Err(ExactError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    /// Determinant by Bareiss fraction-free elimination.
    pub fn determinant(&self) -> Result<T, ExactError> {
        self.require_square()?;
        let n = self.rows;
        let mut m = self.to_rows();
        let mut sign = T::one();
        let mut prev = T::one();
        for k in 0..n {
            if m[k][k].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                    return Ok(T::zero());
                };
                m.swap(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = m[i][j].clone() * m[k][k].clone() - m[i][k].clone() * m[k][j].clone();
                    m[i][j] = num / prev.clone();
                }
            }
            prev = m[k][k].clone();
        }
        Ok(sign * m[n - 1][n - 1].clone())
    }

    pub fn is_unimodular(&self) -> bool {
        self.determinant()
            .map(|d| d.abs().is_one())
            .unwrap_or(false)
    }

    /// Faddeev–LeVerrier in exact-division form.
    ///
    /// Returns the characteristic polynomial coefficients (highest degree
    /// first, leading 1) and the final auxiliary matrix `M_n`, which satisfies
    /// `A·M_n + c_0·I = 0`.
    pub(crate) fn faddeev_leverrier(&self) -> Result<(Vec<T>, Self), ExactError> {
        self.require_square()?;
        let n = self.rows;
        let mut coeffs = vec![T::one()];
        let mut m = Self::zeros(n, n);
        for k in 1..=n {
            let mut next = self.mul(&m)?;
            let c_prev = coeffs[k - 1].clone();
            for i in 0..n {
                let d = next.get(i, i).clone() + c_prev.clone();
                next.set(i, i, d);
            }
            m = next;
            let tr = self.mul(&m)?.trace();
            let k_t = T::from_usize(k).expect("dimension fits the scalar type");
            // exact: the trace is always divisible by k for integer matrices
            coeffs.push(-(tr / k_t));
        }
        Ok((coeffs, m))
    }

    /// Exact inverse of a unimodular matrix.
    pub fn inverse(&self) -> Result<Self, ExactError> {
        let (coeffs, m_n) = self.faddeev_leverrier()?;
        let c0 = coeffs
            .last()
            .expect("coefficient list is non-empty")
            .clone();
        if !c0.abs().is_one() {
            let det = if self.rows.is_multiple_of(2) { c0 } else { -c0 };
            return Err(ExactError::NotUnimodular {
                determinant: det.to_string(),
            });
        }
        // A^{-1} = -M_n / c_0 and 1/c_0 = c_0 when c_0 = ±1.
        Ok(m_n.scale(&-c0))
    }

    /// `self^k`; negative `k` requires a unimodular matrix.
    pub fn pow(&self, k: i64) -> Result<Self, ExactError> {
        self.require_square()?;
        let mut base = if k < 0 { self.inverse()? } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = Self::identity(self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }
}

impl<T: Scalar> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (j, e) in self.row(i).iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{e}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}
