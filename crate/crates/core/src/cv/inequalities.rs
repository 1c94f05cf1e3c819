// Copyright 2026 The nptcert Authors
// SPDX-License-Identifier: Apache-2.0

//! Two-mode separability inequalities built from higher-order quadratures.
//!
//! With `Xᵢ = a†ᵢᵐ + aᵢᵐ`, `Yᵢ = −i(a†ᵢᵐ − aᵢᵐ)` and `Cᵢ = [aᵢᵐ, a†ᵢᵐ]`:
//!
//! ```text
//! (10)  Δ²H₁·Δ²H̃₂ ≥ ⟨C₁ + C₂⟩² + ⟨ΔH₁ΔH̃₂⟩_S²
//!       H₁ = X₁ + X₂,  H̃₂ = Y₁ − Y₂
//! (11)  (Δ²X_mn + ⟨C₁C₂⟩)(Δ²Y_mn + ⟨C₁C₂⟩) ≥ ⟨[a₁ᵐa₂ⁿ, a₁†ᵐa₂†ⁿ]⟩² + ⟨ΔX_mnΔY_mn⟩_S²
//!       X_mn = a₁†ᵐa₂ⁿ + a₁ᵐa₂†ⁿ,  Y_mn = −i(a₁†ᵐa₂ⁿ − a₁ᵐa₂†ⁿ)
//! ```
//!
//! All moments are taken over `ρ` itself. `⟨ΔAΔB⟩_S` denotes
//! `½⟨ΔAΔB + ΔBΔA⟩`; with that normalization both inequalities coincide with
//! the generic uncertainty test over the explicit `ρ^PT`, which
//! [`cv_pipeline_crosscheck`] confirms numerically.

use alloc::format;

use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

use super::fock::{ladder_ops, FockSpace, SparseOp};
use super::states::{CvState, TruncationDiagnostics};
use crate::certificate::{SrMoments, SrReport};
use crate::hermitian::{partial_transpose, Bipartition};
use crate::matrix::ComplexMatrix;
use crate::{Error, Result};

/// The named observables for orders `(m, n)` on a two-mode space.
#[derive(Debug, Clone, PartialEq)]
pub struct CvObservableSet {
    pub space: FockSpace,
    pub m: usize,
    pub n: usize,
    /// `a₁ᵐ`
    pub a1m: SparseOp,
    /// `a₂ⁿ`
    pub a2n: SparseOp,
    pub x1: SparseOp,
    pub y1: SparseOp,
    pub x2: SparseOp,
    pub y2: SparseOp,
    /// `X₁ + X₂`
    pub h1: SparseOp,
    /// `Y₁ + Y₂`
    pub h2: SparseOp,
    /// `Y₁ − Y₂`
    pub h2_tilde: SparseOp,
    pub c1: SparseOp,
    pub c2: SparseOp,
    pub x_mn: SparseOp,
    pub y_mn: SparseOp,
    /// `[a₁ᵐa₂ⁿ, a₁†ᵐa₂†ⁿ]`
    pub pair_commutator: SparseOp,
    /// `a₁†ᵐa₂†ⁿ + h.c.`
    pub k1: SparseOp,
    /// `−i(a₁†ᵐa₂†ⁿ − h.c.)`
    pub k2: SparseOp,
}

fn quadratures(lowering: &SparseOp) -> (SparseOp, SparseOp) {
    let raising = lowering.adjoint();
    let x = raising.add(lowering).expect("same dim");
    let y = raising.sub(lowering).expect("same dim").scale(Complex64::new(0.0, -1.0));
    (x, y)
}

impl CvObservableSet {
    pub fn new(space: FockSpace, m: usize, n: usize) -> Result<Self> {
        if space.modes() != 2 {
            return Err(Error::DimensionMismatch("CV observables need a two-mode space".into()));
        }
        if m == 0 || n == 0 {
            return Err(Error::ParameterOutOfRange(format!("orders (m, n) = ({m}, {n}) must be ≥ 1")));
        }
        let ops = ladder_ops(space);
        let a1m = ops.a[0].pow(m);
        let a2n = ops.a[1].pow(n);
        let (x1, y1) = quadratures(&a1m);
        let (x2, y2) = quadratures(&a2n);
        let h1 = x1.add(&x2)?;
        let h2 = y1.add(&y2)?;
        let h2_tilde = y1.sub(&y2)?;
        let c1 = a1m.commutator(&a1m.adjoint())?;
        let c2 = a2n.commutator(&a2n.adjoint())?;
        let (x_mn, y_mn) = quadratures(&a1m.mul(&a2n.adjoint())?);
        let lower_pair = a1m.mul(&a2n)?;
        let pair_commutator = lower_pair.commutator(&lower_pair.adjoint())?;
        let (k1, k2) = quadratures(&lower_pair);
        Ok(Self {
            space,
            m,
            n,
            a1m,
            a2n,
            x1,
            y1,
            x2,
            y2,
            h1,
            h2,
            h2_tilde,
            c1,
            c2,
            x_mn,
            y_mn,
            pair_commutator,
            k1,
            k2,
        })
    }

    /// Largest Hermiticity defect over all named observables.
    pub fn hermiticity_defect(&self) -> f64 {
        [
            &self.x1,
            &self.y1,
            &self.x2,
            &self.y2,
            &self.h1,
            &self.h2,
            &self.h2_tilde,
            &self.c1,
            &self.c2,
            &self.x_mn,
            &self.y_mn,
            &self.pair_commutator,
            &self.k1,
            &self.k2,
        ]
        .iter()
        .map(|o| o.hermiticity_defect())
        .fold(0.0, f64::max)
    }
}

/// Margin record for one CV inequality.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CvReport {
    /// First and second variance-like factors on the left-hand side.
    pub factor1: f64,
    pub factor2: f64,
    /// Commutator term on the right-hand side (already squared).
    pub commutator_term: f64,
    /// `⟨ΔAΔB⟩_S = ½⟨ΔAΔB + ΔBΔA⟩`.
    pub covariance: f64,
    pub lhs: f64,
    pub rhs: f64,
    pub margin: f64,
    pub violated: bool,
    /// Margin without the covariance term.
    pub hur_margin: f64,
    /// `factor1 + factor2 − 2√(commutator_term)`.
    pub sum_margin: f64,
    pub diagnostics: TruncationDiagnostics,
    pub tolerance: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CvInequality {
    Ten,
    Eleven,
}

impl CvInequality {
    pub fn label(self) -> &'static str {
        match self {
            Self::Ten => "10",
            Self::Eleven => "11",
        }
    }
}

fn two_mode(state: &CvState, m: usize, n: usize) -> Result<TruncationDiagnostics> {
    if state.space().modes() != 2 {
        return Err(Error::DimensionMismatch("expected a two-mode state".into()));
    }
    state.require_reliable(m.max(n))
}

fn ex(op: &SparseOp, rho: &ComplexMatrix) -> Result<f64> {
    Ok(op.expect(rho)?.re)
}

fn variance(op: &SparseOp, rho: &ComplexMatrix) -> Result<f64> {
    let mean = ex(op, rho)?;
    Ok(ex(&op.mul(op)?, rho)? - mean * mean)
}

/// `½⟨ΔAΔB + ΔBΔA⟩`.
fn covariance(a: &SparseOp, b: &SparseOp, rho: &ComplexMatrix) -> Result<f64> {
    Ok(0.5 * ex(&a.anticommutator(b)?, rho)? - ex(a, rho)? * ex(b, rho)?)
}

fn report(
    factor1: f64,
    factor2: f64,
    commutator_term: f64,
    covariance: f64,
    diagnostics: TruncationDiagnostics,
    tol: f64,
) -> CvReport {
    let lhs = factor1 * factor2;
    let rhs = commutator_term + covariance * covariance;
    let margin = lhs - rhs;
    CvReport {
        factor1,
        factor2,
        commutator_term,
        covariance,
        lhs,
        rhs,
        margin,
        violated: margin < -tol,
        hur_margin: lhs - commutator_term,
        sum_margin: factor1 + factor2 - 2.0 * commutator_term.sqrt(),
        diagnostics,
        tolerance: tol,
    }
}

pub fn ineq10(state: &CvState, m: usize, n: usize, tol: f64) -> Result<CvReport> {
    let obs = CvObservableSet::new(state.space(), m, n)?;
    ineq10_with(&obs, state, tol)
}

pub fn ineq10_with(obs: &CvObservableSet, state: &CvState, tol: f64) -> Result<CvReport> {
    let diagnostics = two_mode(state, obs.m, obs.n)?;
    let rho = state.rho().matrix();
    let c = ex(&obs.c1, rho)? + ex(&obs.c2, rho)?;
    Ok(report(
        variance(&obs.h1, rho)?,
        variance(&obs.h2_tilde, rho)?,
        c * c,
        covariance(&obs.h1, &obs.h2_tilde, rho)?,
        diagnostics,
        tol,
    ))
}

pub fn ineq11(state: &CvState, m: usize, n: usize, tol: f64) -> Result<CvReport> {
    let obs = CvObservableSet::new(state.space(), m, n)?;
    ineq11_with(&obs, state, tol)
}

pub fn ineq11_with(obs: &CvObservableSet, state: &CvState, tol: f64) -> Result<CvReport> {
    let diagnostics = two_mode(state, obs.m, obs.n)?;
    let rho = state.rho().matrix();
    let cc = ex(&obs.c1.mul(&obs.c2)?, rho)?;
    let k = ex(&obs.pair_commutator, rho)?;
    Ok(report(
        variance(&obs.x_mn, rho)? + cc,
        variance(&obs.y_mn, rho)? + cc,
        k * k,
        covariance(&obs.x_mn, &obs.y_mn, rho)?,
        diagnostics,
        tol,
    ))
}

pub fn evaluate(which: CvInequality, state: &CvState, m: usize, n: usize, tol: f64) -> Result<CvReport> {
    match which {
        CvInequality::Ten => ineq10(state, m, n, tol),
        CvInequality::Eleven => ineq11(state, m, n, tol),
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CrossCheck {
    pub margin_eq: f64,
    pub margin_generic: f64,
    pub defect: f64,
}

fn sparse_moments(h1: &SparseOp, h2: &SparseOp, rho: &ComplexMatrix) -> Result<SrMoments> {
    let h1h2 = h1.mul(h2)?.expect(rho)?;
    let h2h1 = h2.mul(h1)?.expect(rho)?;
    Ok(SrMoments {
        mean1: ex(h1, rho)?,
        mean2: ex(h2, rho)?,
        second1: ex(&h1.mul(h1)?, rho)?,
        second2: ex(&h2.mul(h2)?, rho)?,
        commutator: h1h2 - h2h1,
        anticommutator: (h1h2 + h2h1).re,
    })
}

/// Compares the printed inequality over `ρ` with the generic uncertainty
/// test for its generating pair over the explicit Fock-basis `ρ^PT`.
pub fn cv_pipeline_crosscheck(state: &CvState, m: usize, n: usize, which: CvInequality) -> Result<CrossCheck> {
    let obs = CvObservableSet::new(state.space(), m, n)?;
    let margin_eq = match which {
        CvInequality::Ten => ineq10_with(&obs, state, 0.0)?,
        CvInequality::Eleven => ineq11_with(&obs, state, 0.0)?,
    }
    .margin;
    let pt = partial_transpose(state.rho(), &Bipartition::new(&[0], 2)?)?;
    let (g1, g2) = match which {
        CvInequality::Ten => (&obs.h1, &obs.h2),
        CvInequality::Eleven => (&obs.k1, &obs.k2),
    };
    let margin_generic = SrReport::from_moments(&sparse_moments(g1, g2, pt.matrix())?, 0.0).margin;
    Ok(CrossCheck { margin_eq, margin_generic, defect: (margin_eq - margin_generic).abs() })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RelationCheck {
    /// `⟨a₁†ᵐa₁ⁿa₂†ᵖa₂^q⟩` over `ρ^PT`.
    pub lhs: Complex64,
    /// `⟨a₁†ᵐa₁ⁿa₂†^q a₂ᵖ⟩` over `ρ`.
    pub rhs: Complex64,
    pub defect: f64,
}

/// Partial transposition of mode 2 swaps the roles of `a₂` and `a₂†`.
pub fn pt_moment_relation_check(state: &CvState, m: usize, n: usize, p: usize, q: usize) -> Result<RelationCheck> {
    if state.space().modes() != 2 {
        return Err(Error::DimensionMismatch("expected a two-mode state".into()));
    }
    state.require_reliable(m.max(n).max(p).max(q))?;
    let ops = ladder_ops(state.space());
    let word = |j1: usize, k1: usize, j2: usize, k2: usize| -> Result<SparseOp> {
        ops.a_dag[0].pow(j1).mul(&ops.a[0].pow(k1))?.mul(&ops.a_dag[1].pow(j2))?.mul(&ops.a[1].pow(k2))
    };
    let pt = partial_transpose(state.rho(), &Bipartition::new(&[0], 2)?)?;
    let lhs = word(m, n, p, q)?.expect(pt.matrix())?;
    let rhs = word(m, n, q, p)?.expect(state.rho().matrix())?;
    Ok(RelationCheck { lhs, rhs, defect: (lhs - rhs).norm() })
}
