// Copyright 2026 The nptcert Authors
// SPDX-License-Identifier: Apache-2.0

//! Uncertainty-relation certificates built from pseudo-spin observables.
//!
//! For orthonormal `|v₁⟩, |v₂⟩` and complex `α₁, α₂` the pair
//!
//! ```text
//! H₁ = α₁|v₁⟩⟨v₂| + α₁*|v₂⟩⟨v₁|
//! H₂ = α₂|v₁⟩⟨v₂| + α₂*|v₂⟩⟨v₁|
//! ```
//!
//! satisfies `[H₁,H₂] = 2iy(|v₁⟩⟨v₁| − |v₂⟩⟨v₂|)` with `y = Im(α₁α₂*)`.
//! When `v₁, v₂` are eigenvectors of a unit-trace Hermitian `M` with
//! eigenvalues `λ₁, λ₂`, the Schrödinger-Robertson (SR) margin over `M`
//! collapses to `4y²λ₁λ₂`, which is negative exactly when the two eigenvalues
//! have opposite signs. Applied to `ρ^PT` this certifies every NPT state.

use alloc::format;
use alloc::vec::Vec;

use num_complex::Complex64;

use crate::hermitian::{partial_transpose, validate_hermitian, Bipartition, DimensionProfile, HermitianOperator};
use crate::matrix::{inner, norm, ComplexMatrix};
use crate::spectral::{classify_npt, ClassifyOptions, NptVerdict, Spectrum};
use crate::{Error, Result, TRACE_TOL, VIOLATION_TOL};

/// `α₁ = 1/2`.
pub const DEFAULT_ALPHA1: Complex64 = Complex64::new(0.5, 0.0);
/// `α₂ = −i/2`, so that `H₂ = (|v₁⟩⟨v₂| − |v₂⟩⟨v₁|)/(2i)`.
pub const DEFAULT_ALPHA2: Complex64 = Complex64::new(0.0, -0.5);
const ORTHO_TOL: f64 = 1e-10;

/// The observable pair `(H₁, H₂)` on the span of two orthonormal vectors.
#[derive(Debug, Clone, PartialEq)]
pub struct PseudoSpinPair {
    pub h1: HermitianOperator,
    pub h2: HermitianOperator,
    pub alpha1: Complex64,
    pub alpha2: Complex64,
    /// `Re(α₁α₂*)`
    pub x: f64,
    /// `Im(α₁α₂*)`
    pub y: f64,
    pub v1: Vec<Complex64>,
    pub v2: Vec<Complex64>,
}

fn check_orthonormal(v1: &[Complex64], v2: &[Complex64]) -> Result<()> {
    if v1.len() != v2.len() {
        return Err(Error::DimensionMismatch(format!("vectors of length {} and {}", v1.len(), v2.len())));
    }
    for v in [v1, v2] {
        let n = norm(v);
        if (n - 1.0).abs() > ORTHO_TOL {
            return Err(Error::ConditionNotMet(format!("source vector has norm {n}, expected 1")));
        }
    }
    let overlap = inner(v1, v2).norm();
    if overlap > ORTHO_TOL {
        return Err(Error::NotOrthogonal { overlap });
    }
    Ok(())
}

fn dyad_pair(
    alpha: Complex64,
    v1: &[Complex64],
    v2: &[Complex64],
    profile: &DimensionProfile,
) -> Result<HermitianOperator> {
    let n = v1.len();
    let m = ComplexMatrix::from_fn(n, n, |r, c| alpha * v1[r] * v2[c].conj() + alpha.conj() * v2[r] * v1[c].conj());
    validate_hermitian(m, profile.clone(), crate::HERMITICITY_TOL)
}

pub fn build_pseudospin(
    v1: &[Complex64],
    v2: &[Complex64],
    alpha1: Complex64,
    alpha2: Complex64,
    profile: &DimensionProfile,
) -> Result<PseudoSpinPair> {
    check_orthonormal(v1, v2)?;
    if v1.len() != profile.total() {
        return Err(Error::DimensionMismatch(format!(
            "vector length {} vs profile total {}",
            v1.len(),
            profile.total()
        )));
    }
    let prod = alpha1 * alpha2.conj();
    if prod.im == 0.0 {
        return Err(Error::DegenerateCoefficients);
    }
    Ok(PseudoSpinPair {
        h1: dyad_pair(alpha1, v1, v2, profile)?,
        h2: dyad_pair(alpha2, v1, v2, profile)?,
        alpha1,
        alpha2,
        x: prod.re,
        y: prod.im,
        v1: v1.to_vec(),
        v2: v2.to_vec(),
    })
}

/// [`build_pseudospin`] with `α₁ = 1/2`, `α₂ = −i/2` (`x = 0`, `y = 1/4`).
pub fn build_default_pseudospin(
    v1: &[Complex64],
    v2: &[Complex64],
    profile: &DimensionProfile,
) -> Result<PseudoSpinPair> {
    build_pseudospin(v1, v2, DEFAULT_ALPHA1, DEFAULT_ALPHA2, profile)
}

/// Raw first and second moments of an observable pair.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SrMoments {
    pub mean1: f64,
    pub mean2: f64,
    pub second1: f64,
    pub second2: f64,
    /// `⟨[H₁,H₂]⟩`, purely imaginary for Hermitian inputs.
    pub commutator: Complex64,
    /// `⟨{H₁,H₂}⟩`.
    pub anticommutator: f64,
}

impl SrMoments {
    /// Moments of dense observables over a dense (possibly non-positive) matrix.
    pub fn dense(h1: &ComplexMatrix, h2: &ComplexMatrix, rho: &ComplexMatrix) -> Result<Self> {
        let a = h1.matmul(rho)?;
        let b = h2.matmul(rho)?;
        let h1h2 = h1.trace_of_product(&b)?;
        let h2h1 = h2.trace_of_product(&a)?;
        Ok(Self {
            mean1: a.trace().re,
            mean2: b.trace().re,
            second1: h1.trace_of_product(&a)?.re,
            second2: h2.trace_of_product(&b)?.re,
            commutator: h1h2 - h2h1,
            anticommutator: (h1h2 + h2h1).re,
        })
    }
}

/// Evaluation of `⟨ΔH₁²⟩⟨ΔH₂²⟩ ≥ ¼|⟨[H₁,H₂]⟩|² + ¼⟨ΔH₁ΔH₂ + ΔH₂ΔH₁⟩²`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SrReport {
    pub mean_h1: f64,
    pub mean_h2: f64,
    pub var_h1: f64,
    pub var_h2: f64,
    /// `|⟨[H₁,H₂]⟩|`
    pub commutator_mean: f64,
    /// `⟨ΔH₁ΔH₂ + ΔH₂ΔH₁⟩`
    pub sym_covariance: f64,
    pub lhs: f64,
    pub rhs: f64,
    pub margin: f64,
    pub violated: bool,
    pub tolerance: f64,
}

impl SrReport {
    pub fn from_moments(m: &SrMoments, tolerance: f64) -> Self {
        let var_h1 = m.second1 - m.mean1 * m.mean1;
        let var_h2 = m.second2 - m.mean2 * m.mean2;
        let commutator_mean = m.commutator.norm();
        let sym_covariance = m.anticommutator - 2.0 * m.mean1 * m.mean2;
        let lhs = var_h1 * var_h2;
        let rhs = 0.25 * commutator_mean * commutator_mean + 0.25 * sym_covariance * sym_covariance;
        let margin = lhs - rhs;
        Self {
            mean_h1: m.mean1,
            mean_h2: m.mean2,
            var_h1,
            var_h2,
            commutator_mean,
            sym_covariance,
            lhs,
            rhs,
            margin,
            violated: margin < -tolerance,
            tolerance,
        }
    }

    /// Margin of the Heisenberg form, which drops the covariance term.
    pub fn hur_margin(&self) -> f64 {
        self.lhs - 0.25 * self.commutator_mean * self.commutator_mean
    }
}

fn check_state_dims(pair_dim: usize, rho: &HermitianOperator) -> Result<()> {
    if pair_dim != rho.dim() {
        return Err(Error::DimensionMismatch(format!("observables of dim {pair_dim} vs state of dim {}", rho.dim())));
    }
    rho.ensure_unit_trace(TRACE_TOL)
}

/// SR inequality for `pair` over `rho`. Pass `ρ^PT` to obtain the
/// separability test.
pub fn sr_report(pair: &PseudoSpinPair, rho: &HermitianOperator, tol: f64) -> Result<SrReport> {
    check_state_dims(pair.h1.dim(), rho)?;
    let m = SrMoments::dense(pair.h1.matrix(), pair.h2.matrix(), rho.matrix())?;
    Ok(SrReport::from_moments(&m, tol))
}

/// Evaluation of `⟨H₁²⟩⟨H₂²⟩ ≥ ¼|⟨[H₁,H₂]⟩|²` (second moments, no means).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HurWeakReport {
    pub second_h1: f64,
    pub second_h2: f64,
    pub commutator_mean: f64,
    pub lhs: f64,
    pub rhs: f64,
    pub margin: f64,
    pub violated: bool,
    pub tolerance: f64,
}

pub fn hur_weak_test(pair: &PseudoSpinPair, rho_pt: &HermitianOperator, tol: f64) -> Result<HurWeakReport> {
    check_state_dims(pair.h1.dim(), rho_pt)?;
    let m = SrMoments::dense(pair.h1.matrix(), pair.h2.matrix(), rho_pt.matrix())?;
    let commutator_mean = m.commutator.norm();
    let lhs = m.second1 * m.second2;
    let rhs = 0.25 * commutator_mean * commutator_mean;
    let margin = lhs - rhs;
    Ok(HurWeakReport {
        second_h1: m.second1,
        second_h2: m.second2,
        commutator_mean,
        lhs,
        rhs,
        margin,
        violated: margin < -tol,
        tolerance: tol,
    })
}

/// Full NPT certificate: the spectrum of `ρ^PT`, the verdict, the observable
/// pair and its SR evaluation.
#[derive(Debug, Clone, PartialEq)]
pub struct SrPtCertificate {
    pub rho_pt: HermitianOperator,
    pub spectrum: Spectrum,
    pub verdict: NptVerdict,
    pub pair: PseudoSpinPair,
    pub report: SrReport,
    /// `(λ₁, λ₂)` of the eigenvectors the pair was built from.
    pub lambdas: (f64, f64),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CertificateOptions {
    pub classify: ClassifyOptions,
    pub violation_tol: f64,
}

impl Default for CertificateOptions {
    fn default() -> Self {
        Self { classify: ClassifyOptions::default(), violation_tol: VIOLATION_TOL }
    }
}

/// Runs the PT eigen-analysis and evaluates the SR inequality for the pair
/// built on the largest and smallest eigenvalues of `ρ^PT`.
pub fn sr_pt_test(rho: &HermitianOperator, bip: &Bipartition, opts: &CertificateOptions) -> Result<SrPtCertificate> {
    let (spectrum, verdict) = classify_npt(rho, bip, &opts.classify)?;
    let n = spectrum.len();
    if n < 2 {
        return Err(Error::DimensionMismatch("need at least two levels".into()));
    }
    let rho = if opts.classify.auto_normalize { rho.normalized()? } else { rho.clone() };
    let rho_pt = partial_transpose(&rho, bip)?;
    certificate_for_indices(rho_pt, spectrum, verdict, 0, n - 1, opts.violation_tol)
}

/// Certificate for an explicit choice of eigen-indices into the descending
/// spectrum of `ρ^PT`.
pub fn certificate_for_indices(
    rho_pt: HermitianOperator,
    spectrum: Spectrum,
    verdict: NptVerdict,
    first: usize,
    second: usize,
    tol: f64,
) -> Result<SrPtCertificate> {
    if first >= spectrum.len() || second >= spectrum.len() || first == second {
        return Err(Error::ConditionNotMet(format!("invalid eigen-index pair ({first}, {second})")));
    }
    let pair = build_default_pseudospin(spectrum.eigenvector(first), spectrum.eigenvector(second), rho_pt.profile())?;
    let report = sr_report(&pair, &rho_pt, tol)?;
    let lambdas = (spectrum.eigenvalue(first), spectrum.eigenvalue(second));
    Ok(SrPtCertificate { rho_pt, spectrum, verdict, pair, report, lambdas })
}

/// `O^PT`, so that `Tr{O ρ^PT} = Tr{O^PT ρ}`.
pub fn pt_of_operator(o: &HermitianOperator, bip: &Bipartition) -> Result<HermitianOperator> {
    partial_transpose(o, bip)
}

/// `W = (|v₂⟩⟨v₂|)^PT` for a negative eigenvector of `ρ^PT`.
#[derive(Debug, Clone, PartialEq)]
pub struct WitnessOperator {
    pub w: HermitianOperator,
    pub lambda2: f64,
    pub bipartition: Bipartition,
}

impl WitnessOperator {
    /// `Tr{Wρ}`; negative values certify entanglement.
    pub fn value(&self, rho: &HermitianOperator) -> Result<f64> {
        crate::hermitian::expectation(&self.w, rho)
    }
}

pub fn witness_from_eigvec(
    v2: &[Complex64],
    lambda2: f64,
    bip: &Bipartition,
    profile: &DimensionProfile,
) -> Result<WitnessOperator> {
    if !(lambda2 < 0.0) {
        return Err(Error::NonNegativeEigenvalue(lambda2));
    }
    let projector = HermitianOperator::projector(v2, profile.clone())?;
    Ok(WitnessOperator { w: pt_of_operator(&projector, bip)?, lambda2, bipartition: bip.clone() })
}

/// An observable whose second moment over a non-positive matrix is negative.
#[derive(Debug, Clone, PartialEq)]
pub struct VarianceFlag {
    pub observable: HermitianOperator,
    pub second_moment: f64,
    pub variance: f64,
    pub negative: bool,
}

/// When `ρ^PT` has two or more negative eigenvalues, builds `H₁, H₂` on the
/// two most negative eigenvectors; their variances equal
/// `|αᵢ|²(λ_a + λ_b) < 0`. Returns an empty list otherwise.
pub fn variance_positivity(rho_pt: &HermitianOperator, spectrum: &Spectrum, tol: f64) -> Result<Vec<VarianceFlag>> {
    let n = spectrum.len();
    let negatives = spectrum.eigenvalues().iter().filter(|&&l| l < -tol).count();
    if negatives < 2 {
        return Ok(Vec::new());
    }
    let pair = build_default_pseudospin(spectrum.eigenvector(n - 2), spectrum.eigenvector(n - 1), rho_pt.profile())?;
    let m = SrMoments::dense(pair.h1.matrix(), pair.h2.matrix(), rho_pt.matrix())?;
    Ok(alloc::vec![
        VarianceFlag {
            variance: m.second1 - m.mean1 * m.mean1,
            second_moment: m.second1,
            negative: m.second1 - m.mean1 * m.mean1 < -tol,
            observable: pair.h1,
        },
        VarianceFlag {
            variance: m.second2 - m.mean2 * m.mean2,
            second_moment: m.second2,
            negative: m.second2 - m.mean2 * m.mean2 < -tol,
            observable: pair.h2,
        },
    ])
}

/// Pair built from arbitrary orthonormal vectors with `⟨v₁|ρ_pt|v₁⟩ > 0` and
/// `⟨v₂|ρ_pt|v₂⟩ < 0`. The SR verdict is reported, not guaranteed.
pub fn orthogonal_pair_construct(
    rho_pt: &HermitianOperator,
    v1: &[Complex64],
    v2: &[Complex64],
    tol: f64,
) -> Result<(PseudoSpinPair, SrReport)> {
    check_orthonormal(v1, v2)?;
    let d1 = inner(v1, &rho_pt.matrix().mul_vec(v1)?).re;
    let d2 = inner(v2, &rho_pt.matrix().mul_vec(v2)?).re;
    if !(d1 > 0.0) {
        return Err(Error::ConditionNotMet(format!("⟨v₁|ρ|v₁⟩ = {d1} is not positive")));
    }
    if !(d2 < 0.0) {
        return Err(Error::ConditionNotMet(format!("⟨v₂|ρ|v₂⟩ = {d2} is not negative")));
    }
    let pair = build_default_pseudospin(v1, v2, rho_pt.profile())?;
    let report = sr_report(&pair, rho_pt, tol)?;
    Ok((pair, report))
}

/// The qubit case: SR with `(σ_x/2, σ_y/2)` against the determinant.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoQubitEquivalence {
    pub sr_margin: f64,
    pub hur_margin: f64,
    /// `ab − |c|²`
    pub det: f64,
}

/// For unit-trace `[[a, c], [c*, b]]` the SR margin equals `(ab − |c|²)/4` and
/// the Heisenberg margin equals `(ab − |c|² + 4c_r²c_i²)/4`.
pub fn two_qubit_equivalence(rho: &HermitianOperator) -> Result<TwoQubitEquivalence> {
    if rho.profile().dims() != [2] {
        return Err(Error::DimensionMismatch(format!("expected a single qubit, got dims {:?}", rho.profile().dims())));
    }
    let e = |i: usize| Complex64::new(if i == 0 { 1.0 } else { 0.0 }, 0.0);
    let (v0, v1) = ([e(0), e(1)], [e(1), e(0)]);
    let pair = build_default_pseudospin(&v0, &v1, rho.profile())?;
    let report = sr_report(&pair, rho, 0.0)?;
    let m = rho.matrix();
    let det = m[(0, 0)].re * m[(1, 1)].re - m[(0, 1)].norm_sqr();
    Ok(TwoQubitEquivalence { sr_margin: report.margin, hur_margin: report.hur_margin(), det })
}

/// Ratio between the three-qubit correlator inequality and the SR margin of
/// its underlying observable pair over `ρ^PT`: every moment of that pair is
/// an eighth of a correlator, so the product form scales by `64²`.
pub const GHZ_SR_SCALE: f64 = 4096.0;

/// Pauli correlators entering the three-qubit separability inequality, with
/// `k` the transposed qubit and `i < j` the other two:
///
/// ```text
/// A_z = ⟨I + z_i z_j − z_i z_k − z_j z_k⟩
/// B_z = ⟨z_i + z_j − z_k − z_i z_j z_k⟩
/// C_xy = ⟨x_i x_j y_k + x_i y_j x_k + y_i x_j x_k − y_i y_j y_k⟩
/// D_xy = ⟨x_i x_j x_k − x_i y_j y_k − y_i x_j y_k − y_i y_j x_k⟩
/// ```
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GhzCorrelators {
    pub a_z: f64,
    pub b_z: f64,
    pub c_xy: f64,
    pub d_xy: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GhzInequality {
    pub lhs: f64,
    pub rhs: f64,
    pub margin: f64,
}

fn three_qubit_roles(transposed: usize) -> Result<[usize; 3]> {
    match transposed {
        0 => Ok([1, 2, 0]),
        1 => Ok([0, 2, 1]),
        2 => Ok([0, 1, 2]),
        _ => Err(Error::InvalidBipartition(format!("qubit {transposed} out of range for three qubits"))),
    }
}

/// Pauli string with `letters[r]` acting on qubit `roles[r]`.
fn pauli_string(letters: [char; 3], roles: [usize; 3]) -> ComplexMatrix {
    let one = Complex64::new(1.0, 0.0);
    let zero = Complex64::new(0.0, 0.0);
    let i = Complex64::new(0.0, 1.0);
    let single = |l: char| -> ComplexMatrix {
        let d = match l {
            'x' => [zero, one, one, zero],
            'y' => [zero, -i, i, zero],
            'z' => [one, zero, zero, -one],
            _ => [one, zero, zero, one],
        };
        ComplexMatrix::from_row_major(2, 2, d.to_vec()).expect("2x2")
    };
    let mut per_qubit = ['i'; 3];
    for r in 0..3 {
        per_qubit[roles[r]] = letters[r];
    }
    single(per_qubit[0]).kron(&single(per_qubit[1])).kron(&single(per_qubit[2]))
}

impl GhzCorrelators {
    /// Correlators of a three-qubit state for the bipartition that transposes `transposed`.
    pub fn from_state(rho: &HermitianOperator, transposed: usize) -> Result<Self> {
        if rho.profile().dims() != [2, 2, 2] {
            return Err(Error::DimensionMismatch(format!("expected three qubits, got {:?}", rho.profile().dims())));
        }
        let roles = three_qubit_roles(transposed)?;
        let avg = |terms: &[(f64, [char; 3])]| -> Result<f64> {
            let mut acc = 0.0;
            for (w, letters) in terms {
                acc += w * pauli_string(*letters, roles).trace_of_product(rho.matrix())?.re;
            }
            Ok(acc)
        };
        Ok(Self {
            a_z: avg(&[
                (1.0, ['i', 'i', 'i']),
                (1.0, ['z', 'z', 'i']),
                (-1.0, ['z', 'i', 'z']),
                (-1.0, ['i', 'z', 'z']),
            ])?,
            b_z: avg(&[
                (1.0, ['z', 'i', 'i']),
                (1.0, ['i', 'z', 'i']),
                (-1.0, ['i', 'i', 'z']),
                (-1.0, ['z', 'z', 'z']),
            ])?,
            c_xy: avg(&[
                (1.0, ['x', 'x', 'y']),
                (1.0, ['x', 'y', 'x']),
                (1.0, ['y', 'x', 'x']),
                (-1.0, ['y', 'y', 'y']),
            ])?,
            d_xy: avg(&[
                (1.0, ['x', 'x', 'x']),
                (-1.0, ['x', 'y', 'y']),
                (-1.0, ['y', 'x', 'y']),
                (-1.0, ['y', 'y', 'x']),
            ])?,
        })
    }
}

/// `(4A_z − B_z²)(4A_z − C_xy²) ≥ 16D_xy² + B_z²C_xy²`.
pub fn ghz_inequality(c: &GhzCorrelators) -> GhzInequality {
    let lhs = (4.0 * c.a_z - c.b_z * c.b_z) * (4.0 * c.a_z - c.c_xy * c.c_xy);
    let rhs = 16.0 * c.d_xy * c.d_xy + c.b_z * c.b_z * c.c_xy * c.c_xy;
    GhzInequality { lhs, rhs, margin: lhs - rhs }
}

/// The pair built on `(|001⟩ ± |110⟩)/√2`, with the lone excitation on the
/// transposed qubit.
pub fn ghz_observables(transposed: usize) -> Result<PseudoSpinPair> {
    let roles = three_qubit_roles(transposed)?;
    let index = |bits: [usize; 3]| -> usize {
        let mut per_qubit = [0usize; 3];
        for r in 0..3 {
            per_qubit[roles[r]] = bits[r];
        }
        per_qubit[0] * 4 + per_qubit[1] * 2 + per_qubit[2]
    };
    let (a, b) = (index([0, 0, 1]), index([1, 1, 0]));
    let s = core::f64::consts::FRAC_1_SQRT_2;
    let mut plus = alloc::vec![Complex64::new(0.0, 0.0); 8];
    let mut minus = plus.clone();
    plus[a] = Complex64::new(s, 0.0);
    plus[b] = Complex64::new(s, 0.0);
    minus[a] = Complex64::new(s, 0.0);
    minus[b] = Complex64::new(-s, 0.0);
    build_default_pseudospin(&plus, &minus, &DimensionProfile::new(alloc::vec![2, 2, 2])?)
}
