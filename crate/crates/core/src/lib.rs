// Copyright 2026 The nptcert Authors
// SPDX-License-Identifier: Apache-2.0

//! Entanglement certificates for negative-partial-transpose (NPT) states built
//! from uncertainty relations.
//!
//! Given a state `ρ` and a bipartition, the partial transpose `ρ^PT` is
//! diagonalised; when it carries a negative eigenvalue, two pseudo-spin
//! observables are built on a positive/negative eigenvector pair and the
//! Schrödinger-Robertson (SR) inequality between them is shown to fail.
//! The same machinery yields the weak Heisenberg form, the associated
//! entanglement witness, and, in truncated Fock space, the continuous-variable
//! moment inequalities used to detect beam-splitter entanglement.
//!
//! The crate is `no_std` (it needs `alloc`); enable the `std` feature to get
//! `std::error::Error` on [`Error`].
//!
//! Basis ordering for multipartite operators is row-major lexicographic:
//! `|i₀ i₁ … i_{k-1}⟩` with the last subsystem index running fastest.
#![cfg_attr(not(feature = "std"), no_std)]
// `!(x > 0.0)` is used on purpose so that NaN is rejected.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;

pub mod certificate;
pub mod cv;
mod error;
pub mod hermitian;
pub mod matrix;
pub mod rng;
pub mod spectral;
pub mod zoo;

pub use error::{Error, Result};
pub use hermitian::{Bipartition, DimensionProfile, HermitianOperator};
pub use matrix::ComplexMatrix;
pub use num_complex::Complex64;
pub use spectral::{NptVerdict, Spectrum};

/// Default relative tolerance on Hermiticity deviations.
pub const HERMITICITY_TOL: f64 = 1e-9;
/// Allowed `|Tr ρ − 1|` before a state is rejected as unnormalized.
pub const TRACE_TOL: f64 = 1e-9;
/// Eigenvalues below `-NEGATIVITY_TOL` count as genuinely negative.
pub const NEGATIVITY_TOL: f64 = 1e-10;
/// Margins below `-VIOLATION_TOL` count as violations.
pub const VIOLATION_TOL: f64 = 1e-10;
