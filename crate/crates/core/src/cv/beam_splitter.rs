// Copyright 2026 The nptcert Authors
// SPDX-License-Identifier: Apache-2.0

//! `U = exp[θ(a₁†a₂ − a₁a₂†)]`, so that `U†a₁U = a₁cosθ + a₂sinθ` and
//! `U†a₂U = a₂cosθ − a₁sinθ`; `θ = π/4` is the balanced splitter.
//!
//! The truncated generator conserves `n₁ + n₂`, so it is block diagonal over
//! photon-number sectors and each block is exponentiated on its own.

use alloc::vec::Vec;

use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

use super::states::CvState;
use crate::hermitian::validate_hermitian;
use crate::matrix::ComplexMatrix;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct BeamSplitterOutput {
    pub state: CvState,
    /// `‖U†U − I‖_max` over all sectors.
    pub unitarity_defect: f64,
}

/// Block-diagonal unitary: `(indices, block)` per photon-number sector.
#[derive(Debug, Clone, PartialEq)]
pub struct SectorUnitary {
    pub sectors: Vec<(Vec<usize>, ComplexMatrix)>,
    pub dim: usize,
}

impl SectorUnitary {
    pub fn new(cutoff: usize, theta: f64) -> Result<Self> {
        let levels = cutoff + 1;
        let mut sectors = Vec::with_capacity(2 * cutoff + 1);
        for total in 0..=2 * cutoff {
            let lo = total.saturating_sub(cutoff);
            let hi = total.min(cutoff);
            let indices: Vec<usize> = (lo..=hi).map(|n1| n1 * levels + (total - n1)).collect();
            let size = indices.len();
            // Basis element k of the sector is |lo + k, total − lo − k⟩.
            let mut g = ComplexMatrix::zeros(size, size);
            for k in 0..size {
                let n1 = (lo + k) as f64;
                let n2 = (total - lo - k) as f64;
                if k + 1 < size {
                    // a₁†a₂|n₁, n₂⟩ = √((n₁+1)n₂)|n₁+1, n₂−1⟩
                    g[(k + 1, k)] += Complex64::new(theta * ((n1 + 1.0) * n2).sqrt(), 0.0);
                }
                if k > 0 {
                    // a₁a₂†|n₁, n₂⟩ = √(n₁(n₂+1))|n₁−1, n₂+1⟩
                    g[(k - 1, k)] -= Complex64::new(theta * (n1 * (n2 + 1.0)).sqrt(), 0.0);
                }
            }
            sectors.push((indices, g.expm()?));
        }
        Ok(Self { sectors, dim: levels * levels })
    }

    pub fn unitarity_defect(&self) -> f64 {
        self.sectors
            .iter()
            .map(|(_, u)| {
                let p = u.adjoint().matmul(u).expect("square");
                p.max_abs_diff(&ComplexMatrix::identity(u.rows())).expect("square")
            })
            .fold(0.0, f64::max)
    }

    pub fn to_dense(&self) -> ComplexMatrix {
        let mut out = ComplexMatrix::zeros(self.dim, self.dim);
        for (idx, u) in &self.sectors {
            for (i, &r) in idx.iter().enumerate() {
                for (j, &c) in idx.iter().enumerate() {
                    out[(r, c)] = u[(i, j)];
                }
            }
        }
        out
    }

    /// `U ρ U†`, block by block.
    pub fn conjugate(&self, rho: &ComplexMatrix) -> Result<ComplexMatrix> {
        if rho.rows() != self.dim || rho.cols() != self.dim {
            return Err(Error::DimensionMismatch("state does not match the splitter dimension".into()));
        }
        let mut out = ComplexMatrix::zeros(self.dim, self.dim);
        let adjoints: Vec<ComplexMatrix> = self.sectors.iter().map(|(_, u)| u.adjoint()).collect();
        for (ia, ua) in &self.sectors {
            for ((ib, _), ub_dag) in self.sectors.iter().zip(&adjoints) {
                let block = ComplexMatrix::from_fn(ia.len(), ib.len(), |i, j| rho[(ia[i], ib[j])]);
                if block.max_abs() == 0.0 {
                    continue;
                }
                let t = ua.matmul(&block)?.matmul(ub_dag)?;
                for (i, &r) in ia.iter().enumerate() {
                    for (j, &c) in ib.iter().enumerate() {
                        out[(r, c)] = t[(i, j)];
                    }
                }
            }
        }
        Ok(out)
    }
}

/// Applies the splitter to a two-mode state whose truncation is reliable.
pub fn beam_splitter(input: &CvState, theta: f64) -> Result<BeamSplitterOutput> {
    let space = input.space();
    if space.modes() != 2 {
        return Err(Error::DimensionMismatch("beam splitter needs a two-mode state".into()));
    }
    if !theta.is_finite() {
        return Err(Error::ParameterOutOfRange("theta must be finite".into()));
    }
    input.require_reliable(1)?;
    let u = SectorUnitary::new(space.cutoff(), theta)?;
    let out = u.conjugate(input.rho().matrix())?;
    let rho = validate_hermitian(out, space.profile(), crate::HERMITICITY_TOL)?;
    let state = CvState::from_parts(rho, space, input.lost_norm(), input.allows_unreliable());
    Ok(BeamSplitterOutput { state, unitarity_defect: u.unitarity_defect() })
}
