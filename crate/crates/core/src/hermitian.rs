// Copyright 2026 The nptcert Authors
// SPDX-License-Identifier: Apache-2.0

//! Hermitian operators on multipartite tensor-product spaces.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_complex::Complex64;

use crate::matrix::ComplexMatrix;
use crate::{Error, Result, HERMITICITY_TOL};

/// Ordered subsystem dimensions of a tensor-product space.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DimensionProfile {
    dims: Vec<usize>,
}

impl DimensionProfile {
    pub fn new(dims: Vec<usize>) -> Result<Self> {
        if dims.is_empty() || dims.contains(&0) {
            return Err(Error::DimensionMismatch(format!("invalid subsystem dimensions {dims:?}")));
        }
        Ok(Self { dims })
    }

    pub fn single(dim: usize) -> Result<Self> {
        Self::new(alloc::vec![dim])
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn num_subsystems(&self) -> usize {
        self.dims.len()
    }

    pub fn total(&self) -> usize {
        self.dims.iter().product()
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut dims = self.dims.clone();
        dims.extend_from_slice(&other.dims);
        Self { dims }
    }

    /// Row-major strides: the last subsystem has stride 1.
    pub fn strides(&self) -> Vec<usize> {
        let mut strides = alloc::vec![1; self.dims.len()];
        for k in (0..self.dims.len().saturating_sub(1)).rev() {
            strides[k] = strides[k + 1] * self.dims[k + 1];
        }
        strides
    }

    /// Per-subsystem digits of a flat basis index.
    pub fn digits(&self, mut index: usize) -> Vec<usize> {
        let mut out = alloc::vec![0; self.dims.len()];
        for k in (0..self.dims.len()).rev() {
            out[k] = index % self.dims[k];
            index /= self.dims[k];
        }
        out
    }
}

/// A split of the subsystems into two non-empty parties. The partial
/// transpose acts on `party_two`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Bipartition {
    party_one: Vec<usize>,
    party_two: Vec<usize>,
}

impl Bipartition {
    pub fn new(party_one: &[usize], num_subsystems: usize) -> Result<Self> {
        let mut one: Vec<usize> = party_one.to_vec();
        one.sort_unstable();
        one.dedup();
        if one.is_empty() {
            return Err(Error::InvalidBipartition("first party is empty".into()));
        }
        if let Some(&bad) = one.iter().find(|&&i| i >= num_subsystems) {
            return Err(Error::InvalidBipartition(format!(
                "subsystem {bad} out of range for {num_subsystems} subsystems"
            )));
        }
        if one.len() == num_subsystems {
            return Err(Error::InvalidBipartition("second party is empty".into()));
        }
        let two = (0..num_subsystems).filter(|i| !one.contains(i)).collect();
        Ok(Self { party_one: one, party_two: two })
    }

    /// Bipartition transposing exactly the listed subsystems.
    pub fn transposing(party_two: &[usize], num_subsystems: usize) -> Result<Self> {
        let one: Vec<usize> = (0..num_subsystems).filter(|i| !party_two.contains(i)).collect();
        Self::new(&one, num_subsystems)
    }

    /// Parses `"0,1|2"`. Both sides must be listed and together cover every
    /// subsystem exactly once.
    pub fn parse(s: &str, num_subsystems: usize) -> Result<Self> {
        let (left, right) =
            s.split_once('|').ok_or_else(|| Error::InvalidBipartition(format!("expected 'i,j|k', got {s:?}")))?;
        let parse_side = |side: &str| -> Result<Vec<usize>> {
            side.split(',')
                .map(str::trim)
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<usize>().map_err(|_| Error::InvalidBipartition(format!("bad index {t:?}"))))
                .collect()
        };
        let one = parse_side(left)?;
        let two = parse_side(right)?;
        let bip = Self::new(&one, num_subsystems)?;
        let mut two_sorted = two.clone();
        two_sorted.sort_unstable();
        if two_sorted != bip.party_two || two.len() != two_sorted.len() {
            return Err(Error::InvalidBipartition(format!(
                "{s:?} does not split {num_subsystems} subsystems into complementary parties"
            )));
        }
        Ok(bip)
    }

    pub fn party_one(&self) -> &[usize] {
        &self.party_one
    }

    pub fn party_two(&self) -> &[usize] {
        &self.party_two
    }

    pub fn num_subsystems(&self) -> usize {
        self.party_one.len() + self.party_two.len()
    }

    pub fn label(&self) -> String {
        let join = |v: &[usize]| v.iter().map(|i| format!("{i}")).collect::<Vec<_>>().join(",");
        format!("{}|{}", join(&self.party_one), join(&self.party_two))
    }

    /// Every bipartition of `n` subsystems up to exchange of the parties,
    /// with subsystem 0 always in the first party.
    pub fn all(num_subsystems: usize) -> Vec<Self> {
        let mut out = Vec::new();
        if num_subsystems < 2 {
            return out;
        }
        for mask in 0u64..(1u64 << (num_subsystems - 1)) {
            // bit k of mask set => subsystem k+1 goes with subsystem 0
            let one: Vec<usize> =
                core::iter::once(0).chain((1..num_subsystems).filter(|&k| mask & (1 << (k - 1)) != 0)).collect();
            if let Ok(b) = Self::new(&one, num_subsystems) {
                out.push(b);
            }
        }
        out
    }
}

/// A validated Hermitian matrix annotated with its subsystem structure.
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianOperator {
    matrix: ComplexMatrix,
    profile: DimensionProfile,
    tolerance: f64,
    deviation: f64,
}

/// `Re Tr{Oρ}` together with the imaginary residue.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Expectation {
    pub value: f64,
    pub imag: f64,
}

impl HermitianOperator {
    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.matrix
    }

    pub fn profile(&self) -> &DimensionProfile {
        &self.profile
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn tolerance(&self) -> f64 {
        self.tolerance
    }

    /// Largest `|M − M†|` entry seen when the operator was validated.
    pub fn deviation(&self) -> f64 {
        self.deviation
    }

    pub fn trace(&self) -> f64 {
        self.matrix.trace().re
    }

    pub fn identity(profile: DimensionProfile) -> Self {
        let n = profile.total();
        Self { matrix: ComplexMatrix::identity(n), profile, tolerance: HERMITICITY_TOL, deviation: 0.0 }
    }

    pub fn from_real_diagonal(diag: &[f64], profile: DimensionProfile) -> Result<Self> {
        validate_hermitian(ComplexMatrix::from_real_diagonal(diag), profile, HERMITICITY_TOL)
    }

    /// `|ψ⟩⟨ψ|` for a (not necessarily normalized) vector.
    pub fn projector(psi: &[Complex64], profile: DimensionProfile) -> Result<Self> {
        validate_hermitian(ComplexMatrix::outer(psi, psi), profile, HERMITICITY_TOL)
    }

    pub fn scale(&self, s: f64) -> Self {
        Self { matrix: self.matrix.scale_real(s), ..self.clone() }
    }

    /// Real linear combination of operators sharing a profile.
    pub fn combine(terms: &[(f64, &HermitianOperator)]) -> Result<Self> {
        let (_, first) = terms.first().ok_or_else(|| Error::DimensionMismatch("empty combination".into()))?;
        let mut acc = ComplexMatrix::zeros(first.dim(), first.dim());
        for (w, op) in terms {
            if op.profile != first.profile {
                return Err(Error::DimensionMismatch(format!(
                    "profiles {:?} and {:?}",
                    first.profile.dims(),
                    op.profile.dims()
                )));
            }
            acc = acc.add(&op.matrix.scale_real(*w))?;
        }
        validate_hermitian(acc, first.profile.clone(), first.tolerance)
    }

    /// Rescales to unit trace. Fails for non-positive trace.
    pub fn normalized(&self) -> Result<Self> {
        let t = self.trace();
        if !(t > 0.0) {
            return Err(Error::UnnormalizedState { trace: t });
        }
        Ok(self.scale(1.0 / t))
    }

    pub fn ensure_unit_trace(&self, tol: f64) -> Result<()> {
        let t = self.trace();
        if (t - 1.0).abs() > tol {
            return Err(Error::UnnormalizedState { trace: t });
        }
        Ok(())
    }
}

/// Checks `‖M − M†‖_max ≤ tol·max(1, ‖M‖_max)` and returns the symmetrized
/// operator `(M + M†)/2`.
pub fn validate_hermitian(m: ComplexMatrix, profile: DimensionProfile, tol: f64) -> Result<HermitianOperator> {
    if !m.is_square() {
        return Err(Error::DimensionMismatch(format!("{}x{} matrix is not square", m.rows(), m.cols())));
    }
    if profile.total() != m.rows() {
        return Err(Error::DimensionMismatch(format!(
            "profile {:?} (total {}) does not match matrix dimension {}",
            profile.dims(),
            profile.total(),
            m.rows()
        )));
    }
    if let Some((row, col)) = m.first_non_finite() {
        return Err(Error::NonFinite { row, col });
    }
    let n = m.rows();
    let mut deviation: f64 = 0.0;
    for r in 0..n {
        for c in r..n {
            deviation = deviation.max((m[(r, c)] - m[(c, r)].conj()).norm());
        }
    }
    let allowed = tol * m.max_abs().max(1.0);
    if deviation > allowed {
        return Err(Error::NotHermitian { deviation, allowed });
    }
    let mut sym = m;
    for r in 0..n {
        sym[(r, r)] = Complex64::new(sym[(r, r)].re, 0.0);
        for c in r + 1..n {
            let avg = (sym[(r, c)] + sym[(c, r)].conj()) * 0.5;
            sym[(r, c)] = avg;
            sym[(c, r)] = avg.conj();
        }
    }
    Ok(HermitianOperator { matrix: sym, profile, tolerance: tol, deviation })
}

/// Kronecker product with concatenated profiles.
pub fn tensor_product(a: &HermitianOperator, b: &HermitianOperator) -> HermitianOperator {
    HermitianOperator {
        matrix: a.matrix.kron(&b.matrix),
        profile: a.profile.concat(&b.profile),
        tolerance: a.tolerance.max(b.tolerance),
        deviation: 0.0,
    }
}

/// Offset that the `party_two` digits contribute to each flat index.
fn party_two_offsets(profile: &DimensionProfile, bip: &Bipartition) -> Result<Vec<usize>> {
    if bip.num_subsystems() != profile.num_subsystems() {
        return Err(Error::InvalidBipartition(format!(
            "bipartition {} over {} subsystems, operator has {}",
            bip.label(),
            bip.num_subsystems(),
            profile.num_subsystems()
        )));
    }
    let strides = profile.strides();
    Ok((0..profile.total())
        .map(|idx| {
            let digits = profile.digits(idx);
            bip.party_two().iter().map(|&k| digits[k] * strides[k]).sum()
        })
        .collect())
}

/// Partial transpose of an arbitrary square matrix over `bip.party_two()`.
/// This is a pure entry permutation: `⟨i j|M^PT|i' j'⟩ = ⟨i j'|M|i' j⟩`.
pub fn partial_transpose_matrix(
    m: &ComplexMatrix,
    profile: &DimensionProfile,
    bip: &Bipartition,
) -> Result<ComplexMatrix> {
    if !m.is_square() || m.rows() != profile.total() {
        return Err(Error::DimensionMismatch(format!(
            "{}x{} matrix with profile {:?}",
            m.rows(),
            m.cols(),
            profile.dims()
        )));
    }
    let off = party_two_offsets(profile, bip)?;
    Ok(ComplexMatrix::from_fn(m.rows(), m.cols(), |r, c| {
        let (r1, r2) = (r - off[r], off[r]);
        let (c1, c2) = (c - off[c], off[c]);
        m[(r1 + c2, c1 + r2)]
    }))
}

pub fn partial_transpose(rho: &HermitianOperator, bip: &Bipartition) -> Result<HermitianOperator> {
    let pt = partial_transpose_matrix(&rho.matrix, &rho.profile, bip)?;
    validate_hermitian(pt, rho.profile.clone(), rho.tolerance)
}

pub fn expectation_with_diagnostic(o: &HermitianOperator, rho: &HermitianOperator) -> Result<Expectation> {
    if o.dim() != rho.dim() {
        return Err(Error::DimensionMismatch(format!("observable dim {} vs state dim {}", o.dim(), rho.dim())));
    }
    let z = o.matrix.trace_of_product(&rho.matrix)?;
    Ok(Expectation { value: z.re, imag: z.im })
}

/// `Re Tr{Oρ}`.
pub fn expectation(o: &HermitianOperator, rho: &HermitianOperator) -> Result<f64> {
    expectation_with_diagnostic(o, rho).map(|e| e.value)
}

/// `AB − BA` (anti-Hermitian, so returned as a plain matrix).
pub fn commutator(a: &HermitianOperator, b: &HermitianOperator) -> Result<ComplexMatrix> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch(format!("{} vs {}", a.dim(), b.dim())));
    }
    a.matrix.matmul(&b.matrix)?.sub(&b.matrix.matmul(&a.matrix)?)
}

/// `AB + BA`.
pub fn anticommutator(a: &HermitianOperator, b: &HermitianOperator) -> Result<HermitianOperator> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch(format!("{} vs {}", a.dim(), b.dim())));
    }
    let m = a.matrix.matmul(&b.matrix)?.add(&b.matrix.matmul(&a.matrix)?)?;
    validate_hermitian(m, a.profile.clone(), a.tolerance.max(b.tolerance))
}
