// Copyright 2026 The nptcert Authors
// SPDX-License-Identifier: Apache-2.0

//! Hermitian eigendecomposition and NPT classification.

use alloc::vec::Vec;

use num_complex::Complex64;
// Float math is inherent on recent `core`; the trait covers older toolchains.
#[allow(unused_imports)]
use num_traits::Float;

use crate::hermitian::{partial_transpose, Bipartition, HermitianOperator};
use crate::matrix::ComplexMatrix;
use crate::{Error, Result, NEGATIVITY_TOL, TRACE_TOL};

const MAX_SWEEPS: usize = 100;
const OFF_DIAGONAL_REL_TOL: f64 = 1e-13;

/// Eigenvalues in descending order with their orthonormal eigenvectors.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    eigenvalues: Vec<f64>,
    eigenvectors: Vec<Vec<Complex64>>,
}

impl Spectrum {
    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }

    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    pub fn eigenvalue(&self, i: usize) -> f64 {
        self.eigenvalues[i]
    }

    pub fn eigenvector(&self, i: usize) -> &[Complex64] {
        &self.eigenvectors[i]
    }

    pub fn max(&self) -> f64 {
        self.eigenvalues.first().copied().unwrap_or(f64::NAN)
    }

    pub fn min(&self) -> f64 {
        self.eigenvalues.last().copied().unwrap_or(f64::NAN)
    }

    /// `V Λ V†`.
    pub fn reconstruct(&self) -> ComplexMatrix {
        let n = self.len();
        ComplexMatrix::from_fn(n, n, |r, c| {
            self.eigenvalues.iter().zip(&self.eigenvectors).map(|(&l, v)| v[r] * v[c].conj() * l).sum()
        })
    }

    /// Matrix whose columns are the eigenvectors.
    pub fn vectors_as_columns(&self) -> ComplexMatrix {
        let n = self.len();
        ComplexMatrix::from_fn(n, n, |r, c| self.eigenvectors[c][r])
    }
}

/// Cyclic complex Jacobi diagonalization.
///
/// Each rotation `G = [[c, s·e^{iφ}], [−s·e^{−iφ}, c]]` in the `(p, q)` plane
/// annihilates `a_pq = |a_pq|·e^{iφ}`. Sweeps stop once the off-diagonal
/// Frobenius norm falls below `1e-13·‖M‖_F`; 100 sweeps without reaching it is
/// a [`Error::ConvergenceFailure`]. Eigenvalues with equal values keep the
/// order of their diagonal positions.
pub fn eig_hermitian(m: &HermitianOperator) -> Result<Spectrum> {
    let n = m.dim();
    let mut a = m.matrix().clone();
    let mut v = ComplexMatrix::identity(n);
    let threshold = OFF_DIAGONAL_REL_TOL * a.frobenius_norm();

    let off_norm = |a: &ComplexMatrix| -> f64 {
        let mut s = 0.0;
        for r in 0..n {
            for c in 0..n {
                if r != c {
                    s += a[(r, c)].norm_sqr();
                }
            }
        }
        s.sqrt()
    };

    let mut converged = false;
    let mut last_off = off_norm(&a);
    for _ in 0..MAX_SWEEPS {
        if last_off <= threshold {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut a, &mut v, p, q);
            }
        }
        last_off = off_norm(&a);
    }
    if !converged && last_off > threshold {
        return Err(Error::ConvergenceFailure { sweeps: MAX_SWEEPS, off_norm: last_off });
    }

    let mut order: Vec<usize> = (0..n).collect();
    // Stable: ties keep their original index order.
    order.sort_by(|&i, &j| a[(j, j)].re.total_cmp(&a[(i, i)].re));
    let eigenvalues = order.iter().map(|&i| a[(i, i)].re).collect();
    let eigenvectors = order.iter().map(|&i| fix_phase(v.column(i))).collect();
    Ok(Spectrum { eigenvalues, eigenvectors })
}

fn rotate(a: &mut ComplexMatrix, v: &mut ComplexMatrix, p: usize, q: usize) {
    let apq = a[(p, q)];
    let mag = apq.norm();
    if mag == 0.0 {
        return;
    }
    let app = a[(p, p)].re;
    let aqq = a[(q, q)].re;
    // Skip elements already negligible against both diagonal entries.
    if mag < f64::EPSILON * 1e-3 * (app.abs() + aqq.abs()) {
        a[(p, q)] = Complex64::new(0.0, 0.0);
        a[(q, p)] = Complex64::new(0.0, 0.0);
        return;
    }
    let phase = apq / mag;
    let tau = (aqq - app) / (2.0 * mag);
    let t = if tau >= 0.0 { 1.0 / (tau + (1.0 + tau * tau).sqrt()) } else { -1.0 / (-tau + (1.0 + tau * tau).sqrt()) };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;
    let g_pq = phase * s; // s·e^{iφ}
    let g_qp = -phase.conj() * s; // −s·e^{−iφ}
    let n = a.rows();

    for k in 0..n {
        let akp = a[(k, p)];
        let akq = a[(k, q)];
        a[(k, p)] = akp * c + akq * g_qp;
        a[(k, q)] = akp * g_pq + akq * c;
    }
    for k in 0..n {
        let apk = a[(p, k)];
        let aqk = a[(q, k)];
        a[(p, k)] = apk * c + aqk * g_qp.conj();
        a[(q, k)] = apk * g_pq.conj() + aqk * c;
    }
    a[(p, q)] = Complex64::new(0.0, 0.0);
    a[(q, p)] = Complex64::new(0.0, 0.0);
    a[(p, p)] = Complex64::new(a[(p, p)].re, 0.0);
    a[(q, q)] = Complex64::new(a[(q, q)].re, 0.0);
    for k in 0..n {
        let vkp = v[(k, p)];
        let vkq = v[(k, q)];
        v[(k, p)] = vkp * c + vkq * g_qp;
        v[(k, q)] = vkp * g_pq + vkq * c;
    }
}

/// Rotates the global phase so the largest-magnitude component is real positive.
fn fix_phase(mut vec: Vec<Complex64>) -> Vec<Complex64> {
    let mut best = 0;
    for (i, z) in vec.iter().enumerate() {
        if z.norm() > vec[best].norm() * (1.0 + 1e-12) {
            best = i;
        }
    }
    let pivot = vec[best];
    if pivot.norm() > 0.0 {
        let phase = pivot.conj() / pivot.norm();
        for z in &mut vec {
            *z *= phase;
        }
    }
    vec
}

/// Outcome of the negativity check on `ρ^PT`.
#[derive(Debug, Clone, PartialEq)]
pub struct NptVerdict {
    pub is_npt: bool,
    pub min_eigenvalue: f64,
    pub negativity_count: usize,
    /// Index (into the descending spectrum) of the positive eigenvalue used as λ₁.
    pub chosen_positive_index: Option<usize>,
    /// Index of the most negative eigenvalue, used as λ₂ when NPT.
    pub chosen_negative_index: Option<usize>,
    pub tolerance: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClassifyOptions {
    pub negativity_tol: f64,
    pub trace_tol: f64,
    /// Rescale positive-trace inputs instead of rejecting them.
    pub auto_normalize: bool,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        Self { negativity_tol: NEGATIVITY_TOL, trace_tol: TRACE_TOL, auto_normalize: false }
    }
}

impl ClassifyOptions {
    pub fn with_tolerance(negativity_tol: f64) -> Self {
        Self { negativity_tol, ..Self::default() }
    }
}

/// Builds the verdict for an already computed spectrum of `ρ^PT`.
pub fn verdict_from_spectrum(spectrum: &Spectrum, tol: f64) -> NptVerdict {
    let n = spectrum.len();
    let min = spectrum.min();
    let negativity_count = spectrum.eigenvalues().iter().filter(|&&l| l < -tol).count();
    let is_npt = min < -tol;
    NptVerdict {
        is_npt,
        min_eigenvalue: min,
        negativity_count,
        chosen_positive_index: (n > 0 && spectrum.max() > 0.0).then_some(0),
        chosen_negative_index: is_npt.then(|| n - 1),
        tolerance: tol,
    }
}

/// Partially transposes `rho` over `bip` and classifies it as NPT or PPT.
pub fn classify_npt(
    rho: &HermitianOperator,
    bip: &Bipartition,
    opts: &ClassifyOptions,
) -> Result<(Spectrum, NptVerdict)> {
    let rho = if opts.auto_normalize {
        rho.normalized()?
    } else {
        rho.ensure_unit_trace(opts.trace_tol)?;
        rho.clone()
    };
    let pt = partial_transpose(&rho, bip)?;
    let spectrum = eig_hermitian(&pt)?;
    let verdict = verdict_from_spectrum(&spectrum, opts.negativity_tol);
    Ok((spectrum, verdict))
}
