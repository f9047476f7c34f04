//! d-level parity-oblivious random access codes.
//!
//! Two parties play the following game: Alice receives a uniformly random
//! two-dit string over the alphabet `{0, ..., d-1}`, Bob receives an index
//! `y` in `{1, 2}` and must guess the y-th dit, and Alice's message to Bob
//! may carry no information about the modular parity of her string. This
//! crate computes the optimal classical (equivalently, preparation
//! noncontextual) success probability `(d+1)/(2d)` exactly, evaluates
//! quantum strategies under the Born rule, certifies that an encoding is
//! parity oblivious, ships the known quantum protocols for `d = 3, 4, 5`
//! that beat the classical bound, and searches for violating protocols in
//! arbitrary dimension by Riemannian gradient ascent over unitaries.
//!
//! Modules:
//!
//! - [`linalg`]: dense complex vectors/matrices, QR retraction, Haar
//!   sampling, seeded splitting RNG.
//! - [`game`]: parity partitions, deterministic strategies, the
//!   information-leak criterion, exact brute-force classical bounds.
//! - [`quantum`]: protocol representation, Born-rule evaluation,
//!   parity-obliviousness certification, overlap analysis, built-in
//!   protocols, protocol JSON.
//! - [`optimizer`]: multi-restart Riemannian gradient ascent over the
//!   product of unitary groups that parameterizes parity-oblivious
//!   protocols.
//!
//! Inexact arithmetic is generic over [`scalar::Scalar`] (`f32` or `f64`);
//! the aliases below pin the default `f64` instantiation.

pub mod game;
pub mod linalg;
pub mod optimizer;
pub mod quantum;
pub mod scalar;

/// Default complex scalar.
pub type C64 = num_complex::Complex<f64>;
/// Default-precision vector.
pub type Vector64 = linalg::ComplexVector<f64>;
/// Default-precision matrix.
pub type Matrix64 = linalg::ComplexMatrix<f64>;
/// Default-precision protocol.
pub type Protocol64 = quantum::QuantumProtocol<f64>;
/// Default-precision optimizer result.
pub type OptResult64 = optimizer::OptResult<f64>;
