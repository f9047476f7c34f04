//! Dense complex vectors.

use num_complex::Complex;

use super::{ComplexMatrix, LinalgError};
use crate::scalar::Scalar;

/// A dense complex vector; the carrier for state vectors and rank-1
/// measurement elements.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexVector<T> {
    entries: Vec<Complex<T>>,
}

impl<T: Scalar> ComplexVector<T> {
    pub fn new(entries: Vec<Complex<T>>) -> Self {
        debug_assert!(!entries.is_empty(), "vectors have positive dimension");
        Self { entries }
    }

    /// Zero vector of the given dimension.
    pub fn zeros(dim: usize) -> Self {
        Self::new(vec![Complex::new(T::zero(), T::zero()); dim])
    }

    /// Canonical basis vector e_k.
    pub fn basis(dim: usize, k: usize) -> Self {
        debug_assert!(k < dim);
        let mut v = Self::zeros(dim);
        v.entries[k] = Complex::new(T::one(), T::zero());
        v
    }

    /// Builds a vector from `[re, im]` pairs, the wire format for amplitudes.
    pub fn from_pairs(pairs: &[[f64; 2]]) -> Self {
        Self::new(
            pairs
                .iter()
                .map(|p| Complex::new(T::real(p[0]), T::real(p[1])))
                .collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entry(&self, i: usize) -> Complex<T> {
        self.entries[i]
    }

    pub fn entries(&self) -> &[Complex<T>] {
        &self.entries
    }

    pub fn norm_sqr(&self) -> T {
        self.entries.iter().map(|z| z.norm_sqr()).sum()
    }

    pub fn norm(&self) -> T {
        self.norm_sqr().sqrt()
    }

    /// `|<v|v> - 1|`, the deviation from unit norm.
    pub fn normalization_error(&self) -> T {
        (self.norm_sqr() - T::one()).abs()
    }

    /// Returns a unit-norm copy.
    pub fn normalized(&self) -> Self {
        let inv = self.norm().recip();
        self.scaled(Complex::new(inv, T::zero()))
    }

    /// Hermitian inner product `<self|other>` = sum conj(a_i) b_i.
    pub fn inner(&self, other: &Self) -> Result<Complex<T>, LinalgError> {
        if self.dim() != other.dim() {
            return Err(LinalgError::DimensionMismatch {
                op: "inner_product",
                left: self.dim(),
                right: other.dim(),
            });
        }
        Ok(self.inner_unchecked(other))
    }

    pub(crate) fn inner_unchecked(&self, other: &Self) -> Complex<T> {
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    /// Magnitude of the overlap `|<self|other>|`.
    pub fn overlap(&self, other: &Self) -> Result<T, LinalgError> {
        Ok(self.inner(other)?.norm())
    }

    /// Rank-1 projector `|v><v|` for a vector normalized within `tol`.
    pub fn outer_product(&self, tol: T) -> Result<ComplexMatrix<T>, LinalgError> {
        let deviation = self.normalization_error();
        if deviation > tol {
            return Err(LinalgError::NotNormalized {
                deviation: deviation.as_f64(),
                tol: tol.as_f64(),
            });
        }
        Ok(self.outer_product_unchecked())
    }

    /// `|v><v|` without the normalization gate; used where the deviation of
    /// the input is itself the quantity under study.
    pub fn outer_product_unchecked(&self) -> ComplexMatrix<T> {
        let n = self.dim();
        let mut m = ComplexMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                m.set(i, j, self.entries[i] * self.entries[j].conj());
            }
        }
        m
    }

    pub fn scaled(&self, factor: Complex<T>) -> Self {
        Self::new(self.entries.iter().map(|z| z * factor).collect())
    }

    /// `self + coeff * other`.
    pub fn axpy(&self, coeff: Complex<T>, other: &Self) -> Self {
        debug_assert_eq!(self.dim(), other.dim());
        Self::new(
            self.entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + coeff * b)
                .collect(),
        )
    }

    pub fn add(&self, other: &Self) -> Self {
        self.axpy(Complex::new(T::one(), T::zero()), other)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::complex;

    fn v(entries: &[(f64, f64)]) -> ComplexVector<f64> {
        ComplexVector::new(entries.iter().map(|&(re, im)| complex(re, im)).collect())
    }

    #[test]
    fn inner_product_identity_and_orthogonality() {
        let a = v(&[(1.0, 0.0), (0.0, 0.0), (0.0, 0.0)]);
        let b = v(&[(0.0, 0.0), (1.0, 0.0), (0.0, 0.0)]);
        assert_eq!(a.inner(&a).unwrap(), complex(1.0, 0.0));
        assert_eq!(a.inner(&b).unwrap(), complex(0.0, 0.0));
    }

    #[test]
    fn inner_product_conjugate_symmetry() {
        let a = v(&[(0.3, -0.2), (0.1, 0.9)]);
        let b = v(&[(-0.5, 0.4), (0.2, 0.2)]);
        let ab = a.inner(&b).unwrap();
        let ba = b.inner(&a).unwrap();
        assert!((ab - ba.conj()).norm() <= 1e-15);
    }

    #[test]
    fn inner_product_rejects_dimension_mismatch() {
        let a = v(&[(1.0, 0.0)]);
        let b = v(&[(1.0, 0.0), (0.0, 0.0)]);
        assert!(matches!(
            a.inner(&b),
            Err(LinalgError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn outer_product_of_basis_states() {
        let m = v(&[(1.0, 0.0), (0.0, 0.0)]).outer_product(1e-9).unwrap();
        assert_eq!(m[(0, 0)], complex(1.0, 0.0));
        assert_eq!(m[(0, 1)], complex(0.0, 0.0));
        assert_eq!(m[(1, 1)], complex(0.0, 0.0));

        let m = v(&[(0.0, 0.0), (1.0, 0.0)]).outer_product(1e-9).unwrap();
        assert_eq!(m[(1, 1)], complex(1.0, 0.0));
        assert_eq!(m[(0, 0)], complex(0.0, 0.0));
    }

    #[test]
    fn outer_product_of_uniform_superposition() {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let m = v(&[(s, 0.0), (s, 0.0)]).outer_product(1e-9).unwrap();
        for i in 0..2 {
            for j in 0..2 {
                assert!((m[(i, j)] - complex(0.5, 0.0)).norm() <= 1e-15);
            }
        }
    }

    #[test]
    fn outer_product_names_the_norm_deviation() {
        let err = v(&[(2.0, 0.0), (0.0, 0.0)]).outer_product(1e-9).unwrap_err();
        match err {
            LinalgError::NotNormalized { deviation, .. } => {
                assert!((deviation - 3.0).abs() <= 1e-12)
            }
            other => panic!("unexpected error {other}"),
        }
    }

    #[test]
    fn outer_product_is_hermitian_rank1_trace1() {
        let s = 0.6;
        let c = 0.8;
        let m = v(&[(s, 0.0), (0.0, c)]).outer_product(1e-9).unwrap();
        assert!(m.hermiticity_error() <= 1e-15);
        assert!((m.trace().re - 1.0).abs() <= 1e-15);
        assert!(m.trace().im.abs() <= 1e-15);
    }
}
