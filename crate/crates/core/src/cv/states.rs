// Copyright 2026 The nptcert Authors
// SPDX-License-Identifier: Apache-2.0

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

use super::fock::{FockSpace, DEFAULT_CUTOFF};
use crate::hermitian::{tensor_product, validate_hermitian, HermitianOperator};
use crate::matrix::ComplexMatrix;
use crate::{Error, Result, TRACE_TOL};

/// Tail populations at or above this weight make a truncation unreliable.
pub const TAIL_THRESHOLD: f64 = 1e-8;

/// Population within `m_max` levels of the cutoff, plus any norm that the
/// truncation discarded.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TruncationDiagnostics {
    pub tail_weight: f64,
    pub lost_norm: f64,
    pub m_max: usize,
    pub cutoff: usize,
    pub reliable: bool,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FockSettings {
    pub cutoff: usize,
    pub allow_unreliable: bool,
}

impl Default for FockSettings {
    fn default() -> Self {
        Self { cutoff: DEFAULT_CUTOFF, allow_unreliable: false }
    }
}

impl FockSettings {
    pub fn with_cutoff(cutoff: usize) -> Self {
        Self { cutoff, ..Self::default() }
    }
}

/// A density operator on a truncated one- or two-mode Fock space.
#[derive(Debug, Clone, PartialEq)]
pub struct CvState {
    rho: HermitianOperator,
    space: FockSpace,
    lost_norm: f64,
    allow_unreliable: bool,
}

impl CvState {
    /// Wraps a unit-trace density matrix whose profile matches `space`.
    pub fn from_density(rho: HermitianOperator, space: FockSpace, allow_unreliable: bool) -> Result<Self> {
        if rho.profile() != &space.profile() {
            return Err(Error::DimensionMismatch(format!(
                "state dims {:?} vs Fock space {:?}",
                rho.profile().dims(),
                space.profile().dims()
            )));
        }
        rho.ensure_unit_trace(TRACE_TOL)?;
        Ok(Self { rho, space, lost_norm: 0.0, allow_unreliable })
    }

    pub fn rho(&self) -> &HermitianOperator {
        &self.rho
    }

    pub fn space(&self) -> FockSpace {
        self.space
    }

    pub fn lost_norm(&self) -> f64 {
        self.lost_norm
    }

    pub fn allows_unreliable(&self) -> bool {
        self.allow_unreliable
    }

    pub fn with_allow_unreliable(mut self, allow: bool) -> Self {
        self.allow_unreliable = allow;
        self
    }

    pub fn diagnostics(&self, m_max: usize) -> TruncationDiagnostics {
        let levels = self.space.levels();
        let edge = self.space.cutoff().saturating_sub(m_max);
        let m = self.rho.matrix();
        let mut edge_weight = 0.0;
        for i in 0..self.space.dim() {
            let near = match self.space.modes() {
                1 => i >= edge,
                _ => i / levels >= edge || i % levels >= edge,
            };
            if near {
                edge_weight += m[(i, i)].re;
            }
        }
        let tail_weight = (edge_weight + self.lost_norm).clamp(0.0, 1.0);
        TruncationDiagnostics {
            tail_weight,
            lost_norm: self.lost_norm,
            m_max,
            cutoff: self.space.cutoff(),
            reliable: tail_weight < TAIL_THRESHOLD,
        }
    }

    /// Diagnostics, or `TruncationUnreliable` unless the state opts out.
    pub fn require_reliable(&self, m_max: usize) -> Result<TruncationDiagnostics> {
        let d = self.diagnostics(m_max);
        if !d.reliable && !self.allow_unreliable {
            return Err(Error::TruncationUnreliable { tail_weight: d.tail_weight, cutoff: d.cutoff });
        }
        Ok(d)
    }

    /// Two-mode product of two single-mode states with the same cutoff.
    pub fn tensor(&self, other: &Self) -> Result<Self> {
        if self.space.modes() != 1 || other.space.modes() != 1 || self.space.cutoff() != other.space.cutoff() {
            return Err(Error::DimensionMismatch("tensor needs two single-mode states with equal cutoff".into()));
        }
        Ok(Self {
            rho: tensor_product(&self.rho, &other.rho),
            space: self.space.two_mode(),
            lost_norm: 1.0 - (1.0 - self.lost_norm) * (1.0 - other.lost_norm),
            allow_unreliable: self.allow_unreliable || other.allow_unreliable,
        })
    }

    /// `ρ ⊗ |0⟩⟨0|`.
    pub fn with_vacuum(&self) -> Result<Self> {
        let settings = FockSettings { cutoff: self.space.cutoff(), allow_unreliable: self.allow_unreliable };
        self.tensor(&fock(0, &settings)?)
    }

    /// Reduced state of one mode of a two-mode state.
    pub fn reduced(&self, mode: usize) -> Result<Self> {
        if self.space.modes() != 2 || mode > 1 {
            return Err(Error::DimensionMismatch(format!(
                "cannot reduce mode {mode} of a {}-mode state",
                self.space.modes()
            )));
        }
        let l = self.space.levels();
        let m = self.rho.matrix();
        let reduced = ComplexMatrix::from_fn(l, l, |r, c| {
            (0..l).map(|k| if mode == 0 { m[(r * l + k, c * l + k)] } else { m[(k * l + r, k * l + c)] }).sum()
        });
        let single = self.space.single_mode();
        Ok(Self {
            rho: validate_hermitian(reduced, single.profile(), crate::HERMITICITY_TOL)?,
            space: single,
            lost_norm: self.lost_norm,
            allow_unreliable: self.allow_unreliable,
        })
    }

    /// Convex mixture of states on the same space.
    pub fn mix(parts: &[(f64, &CvState)]) -> Result<Self> {
        let (_, first) = parts.first().ok_or_else(|| Error::ParameterOutOfRange("empty mixture".into()))?;
        let total: f64 = parts.iter().map(|(w, _)| w).sum();
        if parts.iter().any(|(w, _)| !(*w >= 0.0)) || !(total > 0.0) {
            return Err(Error::ParameterOutOfRange("mixture weights must be non-negative with positive sum".into()));
        }
        let terms: Vec<(f64, &HermitianOperator)> = parts.iter().map(|(w, s)| (w / total, &s.rho)).collect();
        if parts.iter().any(|(_, s)| s.space != first.space) {
            return Err(Error::DimensionMismatch("mixture of states on different spaces".into()));
        }
        Ok(Self {
            rho: HermitianOperator::combine(&terms)?,
            space: first.space,
            lost_norm: parts.iter().map(|(w, s)| w / total * s.lost_norm).sum(),
            allow_unreliable: parts.iter().any(|(_, s)| s.allow_unreliable),
        })
    }

    pub(crate) fn from_parts(rho: HermitianOperator, space: FockSpace, lost_norm: f64, allow_unreliable: bool) -> Self {
        Self { rho, space, lost_norm, allow_unreliable }
    }
}

fn check_finite(name: &str, x: f64) -> Result<()> {
    if !x.is_finite() {
        return Err(Error::ParameterOutOfRange(format!("{name} = {x} is not finite")));
    }
    Ok(())
}

/// Normalizes truncated amplitudes and checks the factory-level truncation
/// guard (`m_max = 1`).
fn finish_pure(amps: Vec<Complex64>, space: FockSpace, settings: &FockSettings) -> Result<CvState> {
    let kept: f64 = amps.iter().map(|z| z.norm_sqr()).sum();
    let lost = (1.0 - kept).max(0.0);
    let inv = 1.0 / kept.sqrt();
    let psi: Vec<Complex64> = amps.iter().map(|z| z * inv).collect();
    let rho = HermitianOperator::projector(&psi, space.profile())?;
    finish(CvState::from_parts(rho, space, lost, settings.allow_unreliable))
}

fn finish(state: CvState) -> Result<CvState> {
    state.require_reliable(1)?;
    Ok(state)
}

/// Coherent state `e^{−|α|²/2} Σ αⁿ/√n! |n⟩`.
pub fn coherent(alpha: Complex64, settings: &FockSettings) -> Result<CvState> {
    check_finite("alpha", alpha.re)?;
    check_finite("alpha", alpha.im)?;
    let space = FockSpace::new(1, settings.cutoff)?;
    let mut amps = Vec::with_capacity(space.levels());
    let mut c = Complex64::new((-alpha.norm_sqr() / 2.0).exp(), 0.0);
    for n in 0..space.levels() {
        if n > 0 {
            c = c * alpha / (n as f64).sqrt();
        }
        amps.push(c);
    }
    finish_pure(amps, space, settings)
}

pub fn fock(n: usize, settings: &FockSettings) -> Result<CvState> {
    let space = FockSpace::new(1, settings.cutoff)?;
    if n > space.cutoff() {
        return Err(Error::ParameterOutOfRange(format!("Fock level {n} exceeds cutoff {}", space.cutoff())));
    }
    let mut amps = vec![Complex64::new(0.0, 0.0); space.levels()];
    amps[n] = Complex64::new(1.0, 0.0);
    finish_pure(amps, space, settings)
}

/// `exp[(r/2)(e^{iφ}a†² − e^{−iφ}a²)]|0⟩`, for which `⟨a²⟩ = e^{iφ} sinh r cosh r`.
pub fn squeezed_vacuum(r: f64, phi: f64, settings: &FockSettings) -> Result<CvState> {
    check_finite("r", r)?;
    check_finite("phi", phi)?;
    let space = FockSpace::new(1, settings.cutoff)?;
    let ratio = Complex64::from_polar(r.tanh(), phi);
    let mut amps = vec![Complex64::new(0.0, 0.0); space.levels()];
    let mut c = Complex64::new(1.0 / r.cosh().sqrt(), 0.0);
    for k in 0..=space.cutoff() / 2 {
        if k > 0 {
            let two_k = 2.0 * k as f64;
            c = c * ratio * ((two_k * (two_k - 1.0)).sqrt() / two_k);
        }
        amps[2 * k] = c;
    }
    finish_pure(amps, space, settings)
}

/// Thermal state with mean photon number `n̄`.
pub fn thermal(nbar: f64, settings: &FockSettings) -> Result<CvState> {
    if !(nbar >= 0.0) || !nbar.is_finite() {
        return Err(Error::ParameterOutOfRange(format!("mean photon number {nbar} must be finite and ≥ 0")));
    }
    let space = FockSpace::new(1, settings.cutoff)?;
    let q = nbar / (1.0 + nbar);
    let probs: Vec<f64> = (0..space.levels()).map(|n| q.powi(n as i32) / (1.0 + nbar)).collect();
    let kept: f64 = probs.iter().sum();
    let lost = (1.0 - kept).max(0.0);
    let probs: Vec<f64> = probs.iter().map(|p| p / kept).collect();
    let rho = HermitianOperator::from_real_diagonal(&probs, space.profile())?;
    finish(CvState::from_parts(rho, space, lost, settings.allow_unreliable))
}

/// `sech r Σ (−tanh r)ⁿ |n, n⟩`.
pub fn two_mode_squeezed(r: f64, settings: &FockSettings) -> Result<CvState> {
    check_finite("r", r)?;
    let space = FockSpace::new(2, settings.cutoff)?;
    let mut amps = vec![Complex64::new(0.0, 0.0); space.dim()];
    let t = -r.tanh();
    let mut c = 1.0 / r.cosh();
    for n in 0..space.levels() {
        amps[space.index(n, n)] = Complex64::new(c, 0.0);
        c *= t;
    }
    finish_pure(amps, space, settings)
}

/// `(|0, 1⟩ + |1, 0⟩)/√2`.
pub fn single_photon_entangled(settings: &FockSettings) -> Result<CvState> {
    let space = FockSpace::new(2, settings.cutoff)?;
    let h = Complex64::new(core::f64::consts::FRAC_1_SQRT_2, 0.0);
    let mut amps = vec![Complex64::new(0.0, 0.0); space.dim()];
    amps[space.index(0, 1)] = h;
    amps[space.index(1, 0)] = h;
    finish_pure(amps, space, settings)
}
