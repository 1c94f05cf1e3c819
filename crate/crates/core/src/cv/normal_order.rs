// Copyright 2026 The nptcert Authors
// SPDX-License-Identifier: Apache-2.0

//! Single-mode polynomials in normal-ordered monomials `a†ʲaᵏ`, evaluated
//! through the moments `⟨a†ʲaᵏ⟩` of a truncated density matrix.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

use super::states::CvState;
use crate::matrix::ComplexMatrix;
use crate::{Error, Result};

/// `Σ c_{jk} a†ʲaᵏ`, keyed by `(j, k)`.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct NormalPoly {
    terms: BTreeMap<(u32, u32), Complex64>,
}

fn binomial(n: u32, k: u32) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * f64::from(n - i) / f64::from(i + 1))
}

fn factorial(n: u32) -> f64 {
    (1..=n).fold(1.0, |acc, i| acc * f64::from(i))
}

impl NormalPoly {
    pub fn monomial(j: u32, k: u32, coefficient: Complex64) -> Self {
        let mut p = Self::default();
        p.push(j, k, coefficient);
        p
    }

    fn push(&mut self, j: u32, k: u32, c: Complex64) {
        *self.terms.entry((j, k)).or_insert(Complex64::new(0.0, 0.0)) += c;
    }

    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), Complex64)> + '_ {
        self.terms.iter().map(|(&k, &v)| (k, v))
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for ((j, k), c) in other.terms() {
            out.push(j, k, c);
        }
        out
    }

    pub fn scale(&self, s: Complex64) -> Self {
        Self { terms: self.terms.iter().map(|(&k, &v)| (k, v * s)).collect() }
    }

    /// `:PQ:`, which concatenates exponents without reordering terms.
    pub fn normal_product(&self, other: &Self) -> Self {
        let mut out = Self::default();
        for ((j1, k1), c1) in self.terms() {
            for ((j2, k2), c2) in other.terms() {
                out.push(j1 + j2, k1 + k2, c1 * c2);
            }
        }
        out
    }

    /// The operator product `PQ`, normal ordered with
    /// `aⁿa†ᵐ = Σ_l l!·C(n,l)·C(m,l)·a†^{m−l}a^{n−l}`.
    pub fn operator_product(&self, other: &Self) -> Self {
        let mut out = Self::default();
        for ((j1, k1), c1) in self.terms() {
            for ((j2, k2), c2) in other.terms() {
                for l in 0..=k1.min(j2) {
                    let w = factorial(l) * binomial(k1, l) * binomial(j2, l);
                    out.push(j1 + j2 - l, k1 - l + k2, c1 * c2 * w);
                }
            }
        }
        out
    }

    pub fn adjoint(&self) -> Self {
        Self { terms: self.terms.iter().map(|(&(j, k), &v)| ((k, j), v.conj())).collect() }
    }

    pub fn expect(&self, rho: &ComplexMatrix) -> Complex64 {
        self.terms().map(|((j, k), c)| c * moment(rho, j, k)).sum()
    }
}

/// `⟨a†ʲaᵏ⟩ = Σ_l √((l+j)!/l!)·√((l+k)!/l!)·ρ[l+k][l+j]`.
pub fn moment(rho: &ComplexMatrix, j: u32, k: u32) -> Complex64 {
    let levels = rho.rows();
    let (j, k) = (j as usize, k as usize);
    let mut acc = Complex64::new(0.0, 0.0);
    for l in 0..levels.saturating_sub(j.max(k)) {
        let fj: f64 = (1..=j).map(|i| ((l + i) as f64).sqrt()).product();
        let fk: f64 = (1..=k).map(|i| ((l + i) as f64).sqrt()).product();
        acc += rho[(l + k, l + j)] * (fj * fk);
    }
    acc
}

fn single_mode(state: &CvState, m: usize) -> Result<&ComplexMatrix> {
    if state.space().modes() != 1 {
        return Err(Error::DimensionMismatch("expected a single-mode state".into()));
    }
    if m == 0 {
        return Err(Error::ParameterOutOfRange("order must be ≥ 1".into()));
    }
    state.require_reliable(2 * m)?;
    Ok(state.rho().matrix())
}

/// `⟨:(Δ(aᵐe^{−iφ} + a†ᵐe^{iφ}))²:⟩`; negative values indicate m-th order
/// amplitude squeezing.
pub fn amplitude_squeezing(state: &CvState, m: usize, phi: f64) -> Result<f64> {
    let rho = single_mode(state, m)?;
    let m = m as u32;
    let f = NormalPoly::monomial(0, m, Complex64::from_polar(1.0, -phi)).add(&NormalPoly::monomial(
        m,
        0,
        Complex64::from_polar(1.0, phi),
    ));
    let mean = f.expect(rho).re;
    Ok(f.normal_product(&f).expect(rho).re - mean * mean)
}

/// Minimizes [`amplitude_squeezing`] over `φ ∈ [0, π)` by a grid scan and a
/// golden-section refinement; returns `(φ, value)`.
pub fn optimal_amplitude_squeezing(state: &CvState, m: usize) -> Result<(f64, f64)> {
    const GRID: usize = 360;
    let step = core::f64::consts::PI / GRID as f64;
    let mut best = (0.0, amplitude_squeezing(state, m, 0.0)?);
    for i in 1..GRID {
        let phi = i as f64 * step;
        let v = amplitude_squeezing(state, m, phi)?;
        if v < best.1 {
            best = (phi, v);
        }
    }
    let g = (5f64.sqrt() - 1.0) / 2.0;
    let (mut lo, mut hi) = (best.0 - step, best.0 + step);
    for _ in 0..60 {
        let a = hi - g * (hi - lo);
        let b = lo + g * (hi - lo);
        if amplitude_squeezing(state, m, a)? < amplitude_squeezing(state, m, b)? {
            hi = b;
        } else {
            lo = a;
        }
    }
    let phi = 0.5 * (lo + hi);
    let v = amplitude_squeezing(state, m, phi)?;
    Ok(if v < best.1 { (num_traits::Euclid::rem_euclid(&phi, &core::f64::consts::PI), v) } else { best })
}

/// `⟨:(Δa†ᵐaᵐ)²:⟩ = ⟨a†^{2m}a^{2m}⟩ − ⟨a†ᵐaᵐ⟩²`; `m = 1` is the
/// sub-Poissonian test.
pub fn photon_stat_nonclassicality(state: &CvState, m: usize) -> Result<f64> {
    let rho = single_mode(state, m)?;
    let m = m as u32;
    let n = NormalPoly::monomial(m, m, Complex64::new(1.0, 0.0));
    let mean = n.expect(rho).re;
    Ok(n.normal_product(&n).expect(rho).re - mean * mean)
}

/// Words in `a`, `a†` given as `true` for `a†`, normal ordered term by term.
pub fn normal_order_word(word: &[bool]) -> NormalPoly {
    let mut acc = NormalPoly::monomial(0, 0, Complex64::new(1.0, 0.0));
    for &dag in word {
        let letter = if dag {
            NormalPoly::monomial(1, 0, Complex64::new(1.0, 0.0))
        } else {
            NormalPoly::monomial(0, 1, Complex64::new(1.0, 0.0))
        };
        acc = acc.operator_product(&letter);
    }
    acc
}

/// Collects the coefficients of `aⁿa†ᵐ` in normal order, for inspection.
pub fn normal_order_coefficients(n: u32, m: u32) -> Vec<((u32, u32), f64)> {
    NormalPoly::monomial(0, n, Complex64::new(1.0, 0.0))
        .operator_product(&NormalPoly::monomial(m, 0, Complex64::new(1.0, 0.0)))
        .terms()
        .map(|(k, c)| (k, c.re))
        .collect()
}
