// Copyright 2026 The nptcert Authors
// SPDX-License-Identifier: Apache-2.0

//! Benchmark states: the mixed GHZ family, Bell-type pure states, the
//! two-qubit Werner family, and seeded random samplers.
//!
//! The Werner family is a standard soundness fixture and is not part of the
//! certificate's own example set.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;

use crate::hermitian::{tensor_product, validate_hermitian, DimensionProfile, HermitianOperator};
use crate::matrix::ComplexMatrix;
use crate::rng::SeededRng;
use crate::{Error, Result};

const FACTORY_TOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq)]
pub enum StateSpec {
    GhzMixed {
        p: f64,
    },
    Bell,
    /// Two-qubit Werner state `p|Ψ⁻⟩⟨Ψ⁻| + (1−p)I/4`.
    Werner {
        p: f64,
    },
    SinglePhotonEntangled,
    RandomDensity {
        dims: Vec<usize>,
        seed: u64,
    },
    RandomSeparable {
        dims: Vec<usize>,
        terms: usize,
        seed: u64,
    },
    Product(Vec<StateSpec>),
}

impl StateSpec {
    pub fn build(&self) -> Result<HermitianOperator> {
        match self {
            Self::GhzMixed { p } => make_ghz_mixed(*p),
            Self::Bell => Ok(make_bell()),
            Self::Werner { p } => werner(*p),
            Self::SinglePhotonEntangled => Ok(make_single_photon_entangled()),
            Self::RandomDensity { dims, seed } => random_density(dims, *seed),
            Self::RandomSeparable { dims, terms, seed } => random_separable(dims, *terms, *seed),
            Self::Product(parts) => {
                let mut iter = parts.iter();
                let first = iter.next().ok_or_else(|| Error::ParameterOutOfRange("empty product".into()))?;
                iter.try_fold(first.build()?, |acc, s| Ok(tensor_product(&acc, &s.build()?)))
            }
        }
    }

    pub fn family(&self) -> &'static str {
        match self {
            Self::GhzMixed { .. } => "ghz_mixed",
            Self::Bell => "bell",
            Self::Werner { .. } => "werner",
            Self::SinglePhotonEntangled => "single_photon_entangled",
            Self::RandomDensity { .. } => "random_density",
            Self::RandomSeparable { .. } => "random_separable",
            Self::Product(_) => "product",
        }
    }
}

fn check_probability(name: &str, p: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::ParameterOutOfRange(format!("{name} = {p} is outside [0, 1]")));
    }
    Ok(())
}

fn pure(amplitudes: &[(usize, f64)], dims: Vec<usize>) -> HermitianOperator {
    let profile = DimensionProfile::new(dims).expect("static dims");
    let mut psi = vec![Complex64::new(0.0, 0.0); profile.total()];
    for &(i, a) in amplitudes {
        psi[i] = Complex64::new(a, 0.0);
    }
    HermitianOperator::projector(&psi, profile).expect("static state")
}

/// `p|GHZ⟩⟨GHZ| + (1−p)I/8` with `|GHZ⟩ = (|000⟩ + |111⟩)/√2`.
pub fn make_ghz_mixed(p: f64) -> Result<HermitianOperator> {
    check_probability("p", p)?;
    let h = core::f64::consts::FRAC_1_SQRT_2;
    let ghz = pure(&[(0, h), (7, h)], vec![2, 2, 2]);
    let mixed = HermitianOperator::identity(ghz.profile().clone()).scale((1.0 - p) / 8.0);
    HermitianOperator::combine(&[(p, &ghz), (1.0, &mixed)])
}

/// `(|00⟩ + |11⟩)/√2`.
pub fn make_bell() -> HermitianOperator {
    let h = core::f64::consts::FRAC_1_SQRT_2;
    pure(&[(0, h), (3, h)], vec![2, 2])
}

/// `(|0⟩|1⟩ + |1⟩|0⟩)/√2` on two qubits (photon number 0 or 1 per mode).
pub fn make_single_photon_entangled() -> HermitianOperator {
    let h = core::f64::consts::FRAC_1_SQRT_2;
    pure(&[(1, h), (2, h)], vec![2, 2])
}

pub fn werner(p: f64) -> Result<HermitianOperator> {
    check_probability("p", p)?;
    let h = core::f64::consts::FRAC_1_SQRT_2;
    let singlet = pure(&[(1, h), (2, -h)], vec![2, 2]);
    let mixed = HermitianOperator::identity(singlet.profile().clone()).scale((1.0 - p) / 4.0);
    HermitianOperator::combine(&[(p, &singlet), (1.0, &mixed)])
}

fn density_from_rng(rng: &mut SeededRng, n: usize) -> ComplexMatrix {
    let g = ComplexMatrix::from_fn(n, n, |_, _| rng.complex_normal());
    let gg = g.matmul(&g.adjoint()).expect("square");
    let t = gg.trace().re;
    gg.scale_real(1.0 / t)
}

fn check_dims(dims: &[usize]) -> Result<DimensionProfile> {
    if dims.is_empty() || dims.iter().any(|&d| d < 2) {
        return Err(Error::ParameterOutOfRange(format!("dims {dims:?} must be non-empty and each ≥ 2")));
    }
    DimensionProfile::new(dims.to_vec())
}

/// `GG†/Tr(GG†)` with `G` a complex Ginibre matrix on the full space.
pub fn random_density(dims: &[usize], seed: u64) -> Result<HermitianOperator> {
    let profile = check_dims(dims)?;
    let mut rng = SeededRng::new(seed);
    validate_hermitian(density_from_rng(&mut rng, profile.total()), profile, FACTORY_TOL)
}

/// Mixture of `terms` product states with Dirichlet(1, …, 1) weights. Each
/// product factor is an independent [`random_density`]-style draw.
pub fn random_separable(dims: &[usize], terms: usize, seed: u64) -> Result<HermitianOperator> {
    let profile = check_dims(dims)?;
    if terms == 0 {
        return Err(Error::ParameterOutOfRange("terms must be ≥ 1".into()));
    }
    let mut rng = SeededRng::new(seed);
    let raw: Vec<f64> = (0..terms).map(|_| rng.exponential()).collect();
    let total: f64 = raw.iter().sum();
    let n = profile.total();
    let mut acc = ComplexMatrix::zeros(n, n);
    for w in raw {
        let mut term = ComplexMatrix::identity(1);
        for &d in dims {
            term = term.kron(&density_from_rng(&mut rng, d));
        }
        acc = acc.add(&term.scale_real(w / total))?;
    }
    validate_hermitian(acc, profile, FACTORY_TOL)
}
