//! Dense complex matrices with Householder QR.

use std::ops::Index;

use num_complex::Complex;

use super::{ComplexVector, LinalgError};
use crate::scalar::Scalar;

/// A dense row-major complex matrix; the carrier for density operators,
/// measurement elements, and unitaries.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexMatrix<T> {
    rows: usize,
    cols: usize,
    entries: Vec<Complex<T>>,
}

impl<T: Scalar> ComplexMatrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        debug_assert!(rows > 0 && cols > 0);
        Self {
            rows,
            cols,
            entries: vec![Complex::new(T::zero(), T::zero()); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Complex::new(T::one(), T::zero()));
        }
        m
    }

    pub fn from_entries(
        rows: usize,
        cols: usize,
        entries: Vec<Complex<T>>,
    ) -> Result<Self, LinalgError> {
        if rows == 0 || cols == 0 {
            return Err(LinalgError::ZeroDimension);
        }
        if entries.len() != rows * cols {
            return Err(LinalgError::DimensionMismatch {
                op: "from_entries",
                left: entries.len(),
                right: rows * cols,
            });
        }
        Ok(Self {
            rows,
            cols,
            entries,
        })
    }

    /// Assembles a matrix whose j-th column is `columns[j]`.
    pub fn from_columns(columns: &[ComplexVector<T>]) -> Result<Self, LinalgError> {
        if columns.is_empty() {
            return Err(LinalgError::ZeroDimension);
        }
        let rows = columns[0].dim();
        for c in columns {
            if c.dim() != rows {
                return Err(LinalgError::DimensionMismatch {
                    op: "from_columns",
                    left: c.dim(),
                    right: rows,
                });
            }
        }
        let mut m = Self::zeros(rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            for i in 0..rows {
                m.set(i, j, c.entry(i));
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> Complex<T> {
        self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Complex<T>) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn column(&self, j: usize) -> ComplexVector<T> {
        ComplexVector::new((0..self.rows).map(|i| self.get(i, j)).collect())
    }

    pub fn columns(&self) -> Vec<ComplexVector<T>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn adjoint(&self) -> Self {
        let mut m = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(j, i, self.get(i, j).conj());
            }
        }
        m
    }

    pub fn mul(&self, other: &Self) -> Result<Self, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::DimensionMismatch {
                op: "matrix multiply",
                left: self.cols,
                right: other.rows,
            });
        }
        let mut m = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                for j in 0..other.cols {
                    let cur = m.get(i, j);
                    m.set(i, j, cur + a * other.get(k, j));
                }
            }
        }
        Ok(m)
    }

    /// Matrix-vector product `A|v>`.
    pub fn apply(&self, v: &ComplexVector<T>) -> Result<ComplexVector<T>, LinalgError> {
        if self.cols != v.dim() {
            return Err(LinalgError::DimensionMismatch {
                op: "matrix apply",
                left: self.cols,
                right: v.dim(),
            });
        }
        let mut out = Vec::with_capacity(self.rows);
        for i in 0..self.rows {
            let mut acc = Complex::new(T::zero(), T::zero());
            for j in 0..self.cols {
                acc = acc + self.get(i, j) * v.entry(j);
            }
            out.push(acc);
        }
        Ok(ComplexVector::new(out))
    }

    pub fn add(&self, other: &Self) -> Result<Self, LinalgError> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(LinalgError::DimensionMismatch {
                op: "matrix add",
                left: self.rows * self.cols,
                right: other.rows * other.cols,
            });
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            entries,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, LinalgError> {
        self.add(&other.scaled(Complex::new(-T::one(), T::zero())))
    }

    pub fn scaled(&self, factor: Complex<T>) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|z| z * factor).collect(),
        }
    }

    pub fn trace(&self) -> Complex<T> {
        debug_assert_eq!(self.rows, self.cols);
        (0..self.rows).map(|i| self.get(i, i)).sum()
    }

    /// Largest entry magnitude; the matrix max-norm used by all checks.
    pub fn max_abs_entry(&self) -> T {
        self.entries
            .iter()
            .map(|z| z.norm())
            .fold(T::zero(), T::max)
    }

    /// `max|A - A^dag|` over entries. Zero for Hermitian matrices.
    pub fn hermiticity_error(&self) -> T {
        debug_assert_eq!(self.rows, self.cols);
        let mut worst = T::zero();
        for i in 0..self.rows {
            for j in 0..self.cols {
                let dev = (self.get(i, j) - self.get(j, i).conj()).norm();
                worst = worst.max(dev);
            }
        }
        worst
    }

    pub fn is_hermitian(&self, tol: T) -> bool {
        self.rows == self.cols && self.hermiticity_error() <= tol
    }

    /// `max(max|A^dag A - I|, max|A A^dag - I|)` over entries.
    pub fn unitarity_error(&self) -> T {
        debug_assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let adj = self.adjoint();
        let left = adj.mul(self).unwrap().sub(&Self::identity(n)).unwrap();
        let right = self.mul(&adj).unwrap().sub(&Self::identity(n)).unwrap();
        left.max_abs_entry().max(right.max_abs_entry())
    }

    pub fn is_unitary(&self, tol: T) -> bool {
        self.rows == self.cols && self.unitarity_error() <= tol
    }

    /// Positive semidefiniteness within `tol`, via Cholesky of `A + tol*I`.
    ///
    /// Succeeds exactly when every pivot of the shifted matrix stays
    /// positive, i.e. the eigenvalue floor of `A` is above `-tol` up to
    /// rounding. Assumes the matrix is (near-)Hermitian; check that first.
    pub fn is_positive_semidefinite(&self, tol: T) -> bool {
        if self.rows != self.cols {
            return false;
        }
        let n = self.rows;
        let mut a = self.clone();
        for i in 0..n {
            let d = a.get(i, i);
            a.set(i, i, d + Complex::new(tol, T::zero()));
        }
        // In-place lower Cholesky; bail out on a non-positive pivot.
        let mut l = vec![Complex::new(T::zero(), T::zero()); n * n];
        for j in 0..n {
            let mut pivot = a.get(j, j).re;
            for k in 0..j {
                pivot = pivot - l[j * n + k].norm_sqr();
            }
            if pivot <= T::zero() {
                return false;
            }
            let ljj = pivot.sqrt();
            l[j * n + j] = Complex::new(ljj, T::zero());
            for i in (j + 1)..n {
                let mut acc = a.get(i, j);
                for k in 0..j {
                    acc = acc - l[i * n + k] * l[j * n + k].conj();
                }
                l[i * n + j] = acc / ljj;
            }
        }
        true
    }

    /// Frobenius norm.
    pub fn frobenius_norm(&self) -> T {
        self.entries
            .iter()
            .map(|z| z.norm_sqr())
            .sum::<T>()
            .sqrt()
    }

    /// Real part of the Frobenius inner product `Re Tr(A^dag B)`.
    pub fn frobenius_inner_re(&self, other: &Self) -> T {
        debug_assert_eq!(self.rows, other.rows);
        debug_assert_eq!(self.cols, other.cols);
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (a.conj() * b).re)
            .sum()
    }

    /// Householder QR of a square matrix: `A = Q R` with `Q` unitary and `R`
    /// upper triangular.
    pub fn qr(&self) -> Result<(Self, Self), LinalgError> {
        if self.rows != self.cols {
            return Err(LinalgError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut r = self.clone();
        // Householder vectors, stored per elimination step.
        let mut reflectors: Vec<Vec<Complex<T>>> = Vec::with_capacity(n.saturating_sub(1));
        let zero = Complex::new(T::zero(), T::zero());

        for k in 0..n.saturating_sub(1) {
            let mut v: Vec<Complex<T>> = (k..n).map(|i| r.get(i, k)).collect();
            let norm_x = v.iter().map(|z| z.norm_sqr()).sum::<T>().sqrt();
            if norm_x <= T::epsilon() {
                reflectors.push(Vec::new());
                continue;
            }
            let phase = if v[0].norm() <= T::epsilon() {
                Complex::new(T::one(), T::zero())
            } else {
                v[0] / Complex::new(v[0].norm(), T::zero())
            };
            let alpha = -phase * Complex::new(norm_x, T::zero());
            v[0] = v[0] - alpha;
            let vnorm = v.iter().map(|z| z.norm_sqr()).sum::<T>().sqrt();
            if vnorm <= T::epsilon() {
                reflectors.push(Vec::new());
                continue;
            }
            let inv = Complex::new(vnorm.recip(), T::zero());
            for z in v.iter_mut() {
                *z = *z * inv;
            }
            // R <- (I - 2 v v^dag) R on the trailing block.
            for j in k..n {
                let mut dot = zero;
                for (t, vi) in v.iter().enumerate() {
                    dot = dot + vi.conj() * r.get(k + t, j);
                }
                let two_dot = dot * Complex::new(T::real(2.0), T::zero());
                for (t, vi) in v.iter().enumerate() {
                    let cur = r.get(k + t, j);
                    r.set(k + t, j, cur - *vi * two_dot);
                }
            }
            reflectors.push(v);
        }

        // Accumulate Q by applying reflectors to the identity in reverse.
        let mut q = Self::identity(n);
        for k in (0..reflectors.len()).rev() {
            let v = &reflectors[k];
            if v.is_empty() {
                continue;
            }
            for j in 0..n {
                let mut dot = zero;
                for (t, vi) in v.iter().enumerate() {
                    dot = dot + vi.conj() * q.get(k + t, j);
                }
                let two_dot = dot * Complex::new(T::real(2.0), T::zero());
                for (t, vi) in v.iter().enumerate() {
                    let cur = q.get(k + t, j);
                    q.set(k + t, j, cur - *vi * two_dot);
                }
            }
        }

        // Zero the strictly-lower part of R against rounding crumbs.
        for i in 1..n {
            for j in 0..i {
                r.set(i, j, zero);
            }
        }
        Ok((q, r))
    }

    /// Canonical re-unitarization: thin QR with the R-diagonal phase folded
    /// into Q, so the result is the unique unitary factor with `R` having a
    /// non-negative real diagonal. This is the one retraction used by the
    /// Haar sampler and the optimizer.
    pub fn unitary_retraction(&self) -> Self {
        let (mut q, r) = self.qr().expect("retraction requires a square matrix");
        for j in 0..q.cols {
            let rjj = r.get(j, j);
            let phase = if rjj.norm() <= T::epsilon() {
                Complex::new(T::one(), T::zero())
            } else {
                rjj / Complex::new(rjj.norm(), T::zero())
            };
            for i in 0..q.rows {
                let cur = q.get(i, j);
                q.set(i, j, cur * phase);
            }
        }
        q
    }
}

impl<T: Scalar> Index<(usize, usize)> for ComplexMatrix<T> {
    type Output = Complex<T>;

    fn index(&self, (i, j): (usize, usize)) -> &Self::Output {
        &self.entries[i * self.cols + j]
    }
}
