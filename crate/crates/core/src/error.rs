// Copyright 2026 The nptcert Authors
// SPDX-License-Identifier: Apache-2.0

use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is not Hermitian (max deviation {deviation:e}, allowed {allowed:e})")]
    NotHermitian { deviation: f64, allowed: f64 },
    #[error("matrix contains a non-finite entry at ({row}, {col})")]
    NonFinite { row: usize, col: usize },
    #[error("invalid bipartition: {0}")]
    InvalidBipartition(String),
    #[error("state is not normalized: trace {trace}")]
    UnnormalizedState { trace: f64 },
    #[error("eigensolver did not converge after {sweeps} sweeps (off-diagonal norm {off_norm:e})")]
    ConvergenceFailure { sweeps: usize, off_norm: f64 },
    #[error("vectors are not orthogonal (overlap {overlap:e})")]
    NotOrthogonal { overlap: f64 },
    #[error("Im(α₁α₂*) vanishes; the uncertainty bound is vacuous for this pair")]
    DegenerateCoefficients,
    #[error("witness requires a negative eigenvalue, got {0}")]
    NonNegativeEigenvalue(f64),
    #[error("construction condition not met: {0}")]
    ConditionNotMet(String),
    #[error("parameter out of range: {0}")]
    ParameterOutOfRange(String),
    #[error("Fock truncation unreliable: tail weight {tail_weight:e} (cutoff {cutoff})")]
    TruncationUnreliable { tail_weight: f64, cutoff: usize },
    #[error("matrix is singular")]
    Singular,
}
