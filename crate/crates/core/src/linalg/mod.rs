//! Minimal dense complex linear algebra.
//!
//! Vectors and matrices are immutable value types over a [`Scalar`] float.
//! The only decomposition provided is Householder QR, which backs both the
//! unitary retraction used by the optimizer and Haar-random unitary sampling.
//! There is deliberately no eigensolver and no sparse storage.

mod matrix;
mod rng;
mod vector;

pub use matrix::ComplexMatrix;
pub use rng::SplitRng;
pub use vector::ComplexVector;

use num_complex::Complex;
use thiserror::Error;

use crate::scalar::Scalar;

/// Errors from vector and matrix construction and composition.
#[derive(Debug, Error)]
pub enum LinalgError {
    #[error("dimension mismatch in {op}: {left} vs {right}")]
    DimensionMismatch {
        op: &'static str,
        left: usize,
        right: usize,
    },
    #[error("vector is not normalized: |<v|v> - 1| = {deviation:.3e} exceeds {tol:.3e}")]
    NotNormalized { deviation: f64, tol: f64 },
    #[error("dimension must be at least 1")]
    ZeroDimension,
    #[error("matrix is not square: {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("input vector {index} is linearly dependent on its predecessors")]
    DependentVectors { index: usize },
    #[error("cannot complete {count} vectors to a basis of dimension {dim}")]
    BadCompletionCount { count: usize, dim: usize },
}

/// Haar-distributed random unitary of the given dimension.
///
/// Samples a complex Ginibre matrix from `rng` and retracts it with the
/// phase-fixed QR used everywhere else in the crate. Identical seeds give
/// identical matrices.
pub fn random_unitary<T: Scalar>(
    dim: usize,
    rng: &mut SplitRng,
) -> Result<ComplexMatrix<T>, LinalgError> {
    if dim == 0 {
        return Err(LinalgError::ZeroDimension);
    }
    let entries: Vec<Complex<T>> = (0..dim * dim).map(|_| rng.standard_complex()).collect();
    let g = ComplexMatrix::from_entries(dim, dim, entries)?;
    Ok(g.unitary_retraction())
}

/// Extends a linearly independent set to an orthonormal basis.
///
/// The input set is orthonormalized in order, then the canonical basis
/// vectors e_0, e_1, ... are swept in index order and each one with a
/// significant residual is orthonormalized and appended, until the basis is
/// complete. The output is the list of appended vectors, deterministic for a
/// given input.
pub fn orthonormal_completion<T: Scalar>(
    partial: &[ComplexVector<T>],
    dim: usize,
) -> Result<Vec<ComplexVector<T>>, LinalgError> {
    if dim == 0 {
        return Err(LinalgError::ZeroDimension);
    }
    if partial.len() >= dim {
        return Err(LinalgError::BadCompletionCount {
            count: partial.len(),
            dim,
        });
    }
    for v in partial {
        if v.dim() != dim {
            return Err(LinalgError::DimensionMismatch {
                op: "orthonormal_completion",
                left: v.dim(),
                right: dim,
            });
        }
    }

    // Residuals below this are treated as "already in the span".
    let dep_tol = T::real(1e-6);

    let mut basis: Vec<ComplexVector<T>> = Vec::with_capacity(dim);
    for (index, v) in partial.iter().enumerate() {
        let w = project_out(v, &basis);
        let norm = w.norm();
        if norm <= dep_tol {
            return Err(LinalgError::DependentVectors { index });
        }
        basis.push(w.scaled(Complex::new(norm.recip(), T::zero())));
    }

    let keep = partial.len();
    let mut appended = Vec::with_capacity(dim - keep);
    for k in 0..dim {
        if basis.len() == dim {
            break;
        }
        let w = project_out(&ComplexVector::basis(dim, k), &basis);
        let norm = w.norm();
        if norm > dep_tol {
            let unit = w.scaled(Complex::new(norm.recip(), T::zero()));
            basis.push(unit.clone());
            appended.push(unit);
        }
    }
    if basis.len() != dim {
        // Unreachable for independent input: the canonical vectors span.
        return Err(LinalgError::DependentVectors { index: keep });
    }
    Ok(appended)
}

/// Two-pass modified Gram-Schmidt projection of `v` against an orthonormal set.
fn project_out<T: Scalar>(v: &ComplexVector<T>, basis: &[ComplexVector<T>]) -> ComplexVector<T> {
    let mut w = v.clone();
    for _ in 0..2 {
        for u in basis {
            let coeff = u.inner_unchecked(&w);
            w = w.axpy(-coeff, u);
        }
    }
    w
}
