// Copyright 2026 The nptcert Authors
// SPDX-License-Identifier: Apache-2.0

//! Acceptance gate. Runs every criterion at its stated tolerance and prints
//! one PASS/FAIL line per criterion; exits non-zero if any criterion fails.

// A NaN in any checked quantity must fail the criterion.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use nptcert_core::certificate::{
    build_default_pseudospin, hur_weak_test, sr_pt_test, sr_report, witness_from_eigvec, CertificateOptions,
    SrPtCertificate, WitnessOperator,
};
use nptcert_core::cv::{
    amplitude_squeezing, beam_splitter, coherent, cv_pipeline_crosscheck, fock, ineq10, ineq11,
    optimal_amplitude_squeezing, photon_stat_nonclassicality, pt_moment_relation_check, squeezed_vacuum, thermal,
    two_mode_squeezed, CvInequality, CvState, FockSettings, FockSpace,
};
use nptcert_core::hermitian::{validate_hermitian, Bipartition, DimensionProfile, HermitianOperator};
use nptcert_core::rng::SeededRng;
use nptcert_core::spectral::eig_hermitian;
use nptcert_core::zoo::{make_ghz_mixed, random_density, random_separable};
use nptcert_core::{Complex64, ComplexMatrix};

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !($cond) {
            return Err(format!($($msg)+));
        }
    };
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn opts() -> CertificateOptions {
    CertificateOptions::default()
}

fn criterion_1_ghz_threshold() -> Outcome {
    let start = Instant::now();
    for bip in Bipartition::all(3) {
        for i in 0..=20 {
            let p = i as f64 / 20.0;
            let cert =
                sr_pt_test(&make_ghz_mixed(p).map_err(|e| e.to_string())?, &bip, &opts()).map_err(|e| e.to_string())?;
            let (hi, lo) = (cert.spectrum.max(), cert.spectrum.min());
            ensure!((hi - (1.0 + 3.0 * p) / 8.0).abs() < 1e-12, "{} p={p}: λ₊ = {hi}", bip.label());
            ensure!((lo - (1.0 - 5.0 * p) / 8.0).abs() < 1e-12, "{} p={p}: λ₋ = {lo}", bip.label());
            let m = cert.report.margin;
            if p > 0.2 + 1e-12 {
                ensure!(m < -1e-12 && cert.report.violated, "{} p={p}: margin {m} not violated", bip.label());
            } else {
                ensure!(m >= -1e-12 && !cert.report.violated, "{} p={p}: margin {m} violated", bip.label());
            }
        }
    }
    let elapsed = start.elapsed();
    ensure!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
    Ok(format!("63 grid points over 3 bipartitions in {elapsed:?}"))
}

fn random_unit_trace_qubit(rng: &mut SeededRng) -> (f64, Complex64, HermitianOperator) {
    let a = rng.uniform_in(-0.5, 1.5);
    let cc = c(rng.uniform_in(-1.0, 1.0), rng.uniform_in(-1.0, 1.0));
    let m = ComplexMatrix::from_row_major(2, 2, vec![c(a, 0.0), cc, cc.conj(), c(1.0 - a, 0.0)]).unwrap();
    (a, cc, validate_hermitian(m, DimensionProfile::single(2).unwrap(), 1e-12).unwrap())
}

fn qubit_pair() -> nptcert_core::certificate::PseudoSpinPair {
    let e0 = [c(1.0, 0.0), c(0.0, 0.0)];
    let e1 = [c(0.0, 0.0), c(1.0, 0.0)];
    build_default_pseudospin(&e0, &e1, &DimensionProfile::single(2).unwrap()).unwrap()
}

fn criterion_2_qubit_equivalence() -> Outcome {
    let mut rng = SeededRng::new(2);
    let pair = qubit_pair();
    let mut worst: f64 = 0.0;
    for _ in 0..10_000 {
        let (a, cc, m) = random_unit_trace_qubit(&mut rng);
        let b = 1.0 - a;
        let r = sr_report(&pair, &m, 1e-10).map_err(|e| e.to_string())?;
        let sr = (a * b - cc.norm_sqr()) / 4.0;
        let hur = (a * b - cc.norm_sqr() + 4.0 * cc.re * cc.re * cc.im * cc.im) / 4.0;
        worst = worst.max((r.margin - sr).abs()).max((r.hur_margin() - hur).abs());
        ensure!((r.margin - sr).abs() < 1e-12, "SR margin {} vs {sr}", r.margin);
        ensure!((r.hur_margin() - hur).abs() < 1e-12, "HUR margin {} vs {hur}", r.hur_margin());
    }
    Ok(format!("10000 matrices, worst deviation {worst:.2e}"))
}

fn random_hermitian_unit_trace(rng: &mut SeededRng, n: usize) -> HermitianOperator {
    let g = ComplexMatrix::from_fn(n, n, |_, _| rng.complex_normal());
    let h = g.add(&g.adjoint()).unwrap();
    let shift = (1.0 - h.trace().re) / n as f64;
    let m = h.add(&ComplexMatrix::identity(n).scale_real(shift)).unwrap();
    validate_hermitian(m, DimensionProfile::single(n).unwrap(), 1e-12).unwrap()
}

fn criterion_3_margin_identity() -> Outcome {
    let mut rng = SeededRng::new(3);
    let mut worst: f64 = 0.0;
    for _ in 0..1000 {
        let n = 4 + rng.below(13);
        let m = random_hermitian_unit_trace(&mut rng, n);
        let s = eig_hermitian(&m).map_err(|e| e.to_string())?;
        let pair =
            build_default_pseudospin(s.eigenvector(0), s.eigenvector(n - 1), m.profile()).map_err(|e| e.to_string())?;
        let r = sr_report(&pair, &m, 1e-10).map_err(|e| e.to_string())?;
        let expected = s.max() * s.min() / 4.0;
        worst = worst.max((r.margin - expected).abs());
        ensure!((r.margin - expected).abs() < 1e-10, "dim {n}: margin {} vs {expected}", r.margin);
    }
    Ok(format!("1000 matrices, dims 4-16, worst deviation {worst:.2e}"))
}

const SHAPES: [&[usize]; 4] = [&[2, 2], &[2, 3], &[3, 3], &[2, 2, 2]];

struct Sample {
    cert: SrPtCertificate,
    weak_violated: bool,
}

fn sample(rho: &HermitianOperator, bip: &Bipartition) -> Result<Sample, String> {
    let cert = sr_pt_test(rho, bip, &opts()).map_err(|e| e.to_string())?;
    let weak = hur_weak_test(&cert.pair, &cert.rho_pt, 1e-10).map_err(|e| e.to_string())?;
    Ok(Sample { cert, weak_violated: weak.violated })
}

/// Rejection-samples NPT random densities; each yields a witness for its
/// shape and bipartition.
fn npt_pool(count: usize) -> Result<Vec<(usize, Bipartition, HermitianOperator, Sample)>, String> {
    let mut out = Vec::new();
    let mut seed = 10_000u64;
    while out.len() < count {
        for (si, dims) in SHAPES.iter().enumerate() {
            let rho = random_density(dims, seed).map_err(|e| e.to_string())?;
            seed += 1;
            for bip in Bipartition::all(dims.len()) {
                let s = sample(&rho, &bip)?;
                if s.cert.verdict.is_npt {
                    out.push((si, bip, rho.clone(), s));
                }
            }
        }
    }
    Ok(out)
}

fn witness(s: &Sample, bip: &Bipartition) -> Result<WitnessOperator, String> {
    let n = s.cert.spectrum.len();
    witness_from_eigvec(s.cert.spectrum.eigenvector(n - 1), s.cert.spectrum.min(), bip, s.cert.rho_pt.profile())
        .map_err(|e| e.to_string())
}

fn separable_pool() -> Result<Vec<(usize, Bipartition, HermitianOperator, Sample)>, String> {
    let mut out = Vec::new();
    for k in 0..1000u64 {
        let si = (k % 4) as usize;
        let dims = SHAPES[si];
        let rho = random_separable(dims, 1 + (k as usize % 5), k).map_err(|e| e.to_string())?;
        let bips = Bipartition::all(dims.len());
        let bip = bips[(k / 4) as usize % bips.len()].clone();
        let s = sample(&rho, &bip)?;
        out.push((si, bip, rho, s));
    }
    Ok(out)
}

fn criterion_4_soundness() -> Outcome {
    let npt = npt_pool(40)?;
    let seps = separable_pool()?;
    let mut worst_margin = f64::INFINITY;
    let mut worst_witness = f64::INFINITY;
    let mut witness_checks = 0;
    for (si, bip, rho, s) in &seps {
        worst_margin = worst_margin.min(s.cert.report.margin);
        ensure!(s.cert.report.margin >= -1e-10, "separable state violates: margin {}", s.cert.report.margin);
        for (sj, wbip, _, ws) in &npt {
            if sj == si && wbip == bip {
                let v = witness(ws, wbip)?.value(rho).map_err(|e| e.to_string())?;
                worst_witness = worst_witness.min(v);
                witness_checks += 1;
                ensure!(v >= -1e-10, "witness value {v} on a separable state");
            }
        }
    }
    Ok(format!(
        "1000 separable states, min margin {worst_margin:.3e}; {witness_checks} witness evaluations, min {worst_witness:.3e}"
    ))
}

fn criterion_5_completeness() -> Outcome {
    let pool = npt_pool(200)?;
    let mut worst: f64 = 0.0;
    for (_, bip, rho, s) in &pool {
        ensure!(s.cert.report.violated, "NPT state not certified: margin {}", s.cert.report.margin);
        let w = witness(s, bip)?;
        let v = w.value(rho).map_err(|e| e.to_string())?;
        worst = worst.max((v - s.cert.spectrum.min()).abs());
        ensure!((v - s.cert.spectrum.min()).abs() < 1e-10, "Tr Wρ = {v} vs λ₂ = {}", s.cert.spectrum.min());
    }
    Ok(format!("{} NPT instances certified, worst |Tr Wρ − λ₂| {worst:.2e}", pool.len()))
}

fn criterion_6_weak_implies_strong() -> Outcome {
    let mut checked = 0;
    for (_, _, _, s) in npt_pool(200)?.iter().chain(separable_pool()?.iter()) {
        checked += 1;
        ensure!(!s.weak_violated || s.cert.report.violated, "weak violated without SR violation");
    }
    let mut rng = SeededRng::new(6);
    let pair = qubit_pair();
    let mut witnesses_of_gap = 0;
    for _ in 0..10_000 {
        let (_, _, m) = random_unit_trace_qubit(&mut rng);
        let sr = sr_report(&pair, &m, 1e-10).map_err(|e| e.to_string())?;
        let weak = hur_weak_test(&pair, &m, 1e-10).map_err(|e| e.to_string())?;
        checked += 1;
        ensure!(!weak.violated || sr.violated, "weak violated without SR violation on a qubit matrix");
        if sr.violated && !weak.violated {
            witnesses_of_gap += 1;
        }
    }
    ensure!(witnesses_of_gap > 0, "no sample separates SR from the weak form");
    Ok(format!("{checked} samples, implication holds; {witnesses_of_gap} violate SR but not the weak form"))
}

/// Independent two-mode oracle: dense single-mode quadratures contracted
/// against the joint density matrix.
mod mancini {
    use super::*;

    pub struct Oracle {
        levels: usize,
        x: ComplexMatrix,
        p: ComplexMatrix,
        id: ComplexMatrix,
    }

    impl Oracle {
        pub fn new(cutoff: usize) -> Self {
            let levels = cutoff + 1;
            let mut a = ComplexMatrix::zeros(levels, levels);
            for k in 1..levels {
                a[(k - 1, k)] = c((k as f64).sqrt(), 0.0);
            }
            let ad = a.adjoint();
            let x = a.add(&ad).unwrap();
            let p = a.sub(&ad).unwrap().scale(c(0.0, -1.0));
            Self { levels, x, p, id: ComplexMatrix::identity(levels) }
        }

        /// `⟨O₁ ⊗ O₂⟩ = Σ O₁[a][b] O₂[c][d] ρ[(b,d)][(a,c)]`.
        fn pair(&self, o1: &ComplexMatrix, o2: &ComplexMatrix, rho: &ComplexMatrix) -> Complex64 {
            let l = self.levels;
            let mut acc = c(0.0, 0.0);
            for a in 0..l {
                for b in 0..l {
                    let u = o1[(a, b)];
                    if u.norm() == 0.0 {
                        continue;
                    }
                    for cc in 0..l {
                        for d in 0..l {
                            let v = o2[(cc, d)];
                            if v.norm() != 0.0 {
                                acc += u * v * rho[(b * l + d, a * l + cc)];
                            }
                        }
                    }
                }
            }
            acc
        }

        fn sq(m: &ComplexMatrix) -> ComplexMatrix {
            m.matmul(m).unwrap()
        }

        /// `Δ²(x₁+x₂)·Δ²(p₁−p₂) − |⟨[x₁,p₁] + [x₂,p₂]⟩|²/4`.
        pub fn margin(&self, rho: &ComplexMatrix) -> f64 {
            let e = |o1: &ComplexMatrix, o2: &ComplexMatrix| self.pair(o1, o2, rho);
            let (x, p, id) = (&self.x, &self.p, &self.id);
            let mean_u = (e(x, id) + e(id, x)).re;
            let second_u = (e(&Self::sq(x), id) + e(x, x) * 2.0 + e(id, &Self::sq(x))).re;
            let mean_v = (e(p, id) - e(id, p)).re;
            let second_v = (e(&Self::sq(p), id) - e(p, p) * 2.0 + e(id, &Self::sq(p))).re;
            let comm = x.matmul(p).unwrap().sub(&p.matmul(x).unwrap()).unwrap();
            let k = e(&comm, id) + e(id, &comm);
            (second_u - mean_u * mean_u) * (second_v - mean_v * mean_v) - k.norm_sqr() / 4.0
        }
    }
}

fn random_two_mode_states(count: usize, seed: u64) -> Vec<CvState> {
    let settings = FockSettings::default();
    let space = FockSpace::new(2, settings.cutoff).unwrap();
    let mut rng = SeededRng::new(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let state = match out.len() % 4 {
            0 => {
                // Ginibre state supported on n₁, n₂ ≤ 4.
                let support: Vec<usize> =
                    (0..5).flat_map(|i| (0..5).map(move |j| (i, j))).map(|(i, j)| space.index(i, j)).collect();
                let g = ComplexMatrix::from_fn(25, 25, |_, _| rng.complex_normal());
                let small = g.matmul(&g.adjoint()).unwrap();
                let t = small.trace().re;
                let mut big = ComplexMatrix::zeros(space.dim(), space.dim());
                for (i, &r) in support.iter().enumerate() {
                    for (j, &cc) in support.iter().enumerate() {
                        big[(r, cc)] = small[(i, j)] / t;
                    }
                }
                let rho = validate_hermitian(big, space.profile(), 1e-12).unwrap();
                CvState::from_density(rho, space, false).unwrap()
            }
            1 => two_mode_squeezed(rng.uniform_in(0.0, 0.8), &settings).unwrap(),
            2 => {
                let sq =
                    squeezed_vacuum(rng.uniform_in(0.0, 0.6), rng.uniform_in(0.0, std::f64::consts::TAU), &settings)
                        .unwrap();
                let coh = coherent(c(rng.uniform_in(-1.0, 1.0), rng.uniform_in(-1.0, 1.0)), &settings).unwrap();
                beam_splitter(&sq.tensor(&coh).unwrap(), rng.uniform_in(0.0, 1.6)).unwrap().state
            }
            _ => {
                let a = coherent(c(rng.uniform_in(-1.2, 1.2), rng.uniform_in(-1.2, 1.2)), &settings).unwrap();
                let t = thermal(rng.uniform_in(0.0, 0.5), &settings).unwrap();
                let f = fock(rng.below(3), &settings).unwrap();
                let mixed =
                    CvState::mix(&[(rng.uniform(), &a.tensor(&t).unwrap()), (rng.uniform(), &f.tensor(&a).unwrap())])
                        .unwrap();
                beam_splitter(&mixed, rng.uniform_in(0.0, 1.6)).unwrap().state
            }
        };
        if state.diagnostics(1).reliable {
            out.push(state);
        }
    }
    out
}

fn criterion_7_mancini_reduction() -> Outcome {
    let oracle = mancini::Oracle::new(30);
    let mut worst: f64 = 0.0;
    for (i, state) in random_two_mode_states(100, 7).iter().enumerate() {
        let r = ineq10(state, 1, 1, 1e-10).map_err(|e| e.to_string())?;
        let o = oracle.margin(state.rho().matrix());
        worst = worst.max((r.hur_margin - o).abs());
        ensure!((r.hur_margin - o).abs() < 1e-10, "state {i}: HUR margin {} vs oracle {o}", r.hur_margin);
    }
    Ok(format!("100 random two-mode states, worst deviation {worst:.2e}"))
}

fn cv_test_states() -> Vec<(&'static str, CvState)> {
    let s = FockSettings::default();
    let vac = fock(0, &s).unwrap();
    let half = core::f64::consts::FRAC_PI_4;
    vec![
        ("squeezed⊗vacuum", squeezed_vacuum(0.5, 0.0, &s).unwrap().tensor(&vac).unwrap()),
        ("thermal⊗thermal", thermal(0.5, &s).unwrap().tensor(&thermal(0.3, &s).unwrap()).unwrap()),
        ("coherent⊗coherent", coherent(c(0.8, 0.3), &s).unwrap().tensor(&coherent(c(-0.5, 0.6), &s).unwrap()).unwrap()),
        ("fock1⊗fock2", fock(1, &s).unwrap().tensor(&fock(2, &s).unwrap()).unwrap()),
        ("two-mode squeezed", two_mode_squeezed(0.5, &s).unwrap()),
        (
            "BS(squeezed)",
            beam_splitter(&squeezed_vacuum(0.5, 0.0, &s).unwrap().tensor(&vac).unwrap(), half).unwrap().state,
        ),
        ("BS(fock1)", beam_splitter(&fock(1, &s).unwrap().tensor(&vac).unwrap(), half).unwrap().state),
        (
            "BS(fock2⊗thermal)",
            beam_splitter(&fock(2, &s).unwrap().tensor(&thermal(0.2, &s).unwrap()).unwrap(), 0.6).unwrap().state,
        ),
    ]
}

fn criterion_8_pipeline_equivalence() -> Outcome {
    let mut worst: f64 = 0.0;
    let mut worst_rel: f64 = 0.0;
    for (name, state) in cv_test_states() {
        for m in 1..=2 {
            for n in 1..=2 {
                for which in [CvInequality::Ten, CvInequality::Eleven] {
                    let x = cv_pipeline_crosscheck(&state, m, n, which).map_err(|e| e.to_string())?;
                    worst = worst.max(x.defect);
                    ensure!(x.defect <= 1e-8, "{name} ({}) m={m} n={n}: defect {}", which.label(), x.defect);
                }
            }
        }
        for (m, n, p, q) in [(1, 1, 1, 1), (0, 0, 1, 0), (1, 2, 2, 1), (2, 1, 0, 2), (2, 2, 2, 2)] {
            let r = pt_moment_relation_check(&state, m, n, p, q).map_err(|e| e.to_string())?;
            worst_rel = worst_rel.max(r.defect);
            ensure!(r.defect <= 1e-8, "{name} relation ({m},{n},{p},{q}): defect {}", r.defect);
        }
    }
    Ok(format!("8 states × 8 crosschecks, worst defect {worst:.2e}; relation worst {worst_rel:.2e}"))
}

fn criterion_9_beam_splitter() -> Outcome {
    let s = FockSettings::default();
    let theta = core::f64::consts::FRAC_PI_4;
    let vac = fock(0, &s).unwrap();
    let squeezed = squeezed_vacuum(0.5, 0.0, &s).map_err(|e| e.to_string())?;
    let single = fock(1, &s).map_err(|e| e.to_string())?;
    let coh = coherent(c(1.0, 0.0), &s).map_err(|e| e.to_string())?;
    let out = |x: &CvState| beam_splitter(&x.tensor(&vac).unwrap(), theta).map(|o| o.state).map_err(|e| e.to_string());

    let r10 = ineq10(&out(&squeezed)?, 1, 1, 1e-10).map_err(|e| e.to_string())?;
    ensure!(r10.violated, "squeezed output: ineq10 margin {}", r10.margin);
    let r11 = ineq11(&out(&single)?, 1, 1, 1e-10).map_err(|e| e.to_string())?;
    ensure!(r11.violated, "single-photon output: ineq11 margin {}", r11.margin);
    let coh_out = out(&coh)?;
    let c10 = ineq10(&coh_out, 1, 1, 1e-10).map_err(|e| e.to_string())?;
    let c11 = ineq11(&coh_out, 1, 1, 1e-10).map_err(|e| e.to_string())?;
    ensure!(c10.margin >= -1e-8 && c11.margin >= -1e-8, "coherent output margins {} / {}", c10.margin, c11.margin);

    let (_, amp) = optimal_amplitude_squeezing(&squeezed, 1).map_err(|e| e.to_string())?;
    ensure!(amp < 0.0, "squeezed input amplitude squeezing {amp}");
    let stat = photon_stat_nonclassicality(&single, 1).map_err(|e| e.to_string())?;
    ensure!(stat < 0.0, "Fock input photon statistics {stat}");
    let mut coh_amp: f64 = 0.0;
    for i in 0..32 {
        coh_amp = coh_amp.max(amplitude_squeezing(&coh, 1, i as f64 * 0.1).map_err(|e| e.to_string())?.abs());
    }
    let coh_stat = photon_stat_nonclassicality(&coh, 1).map_err(|e| e.to_string())?;
    ensure!(coh_amp <= 1e-9 && coh_stat.abs() <= 1e-9, "coherent pre-checks {coh_amp} / {coh_stat}");
    Ok(format!(
        "ineq10 {:.4} (squeezed), ineq11 {:.4} (single photon), coherent {:.2e}/{:.2e}; pre-checks {amp:.4}, {stat:.4}",
        r10.margin, r11.margin, c10.margin, c11.margin
    ))
}

fn criterion_10_runtime(total: Duration) -> Outcome {
    let mut slowest = Duration::ZERO;
    for (dims, seed) in [(vec![8usize, 8], 1u64), (vec![4, 4, 4], 2), (vec![2, 2, 2, 2, 2, 2], 3)] {
        let rho = random_density(&dims, seed).map_err(|e| e.to_string())?;
        let bip = Bipartition::new(&[0], dims.len()).unwrap();
        let start = Instant::now();
        sr_pt_test(&rho, &bip, &opts()).map_err(|e| e.to_string())?;
        slowest = slowest.max(start.elapsed());
    }
    ensure!(slowest < Duration::from_secs(1), "slowest dim-64 certificate {slowest:?}");
    ensure!(total < Duration::from_secs(300), "acceptance suite took {total:?}");
    Ok(format!("slowest dim-64 certificate {slowest:?}; criteria 1-9 in {total:?}"))
}

fn run(label: &str, f: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
        Err(p
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_default())
    });
    let elapsed = start.elapsed();
    match outcome {
        Ok(detail) => {
            println!("PASS  {label}: {detail} [{elapsed:.2?}]");
            true
        }
        Err(why) => {
            println!("FAIL  {label}: {why} [{elapsed:.2?}]");
            false
        }
    }
}

fn main() -> ExitCode {
    let start = Instant::now();
    let mut ok = true;
    ok &= run("1 GHZ threshold", criterion_1_ghz_threshold);
    ok &= run("2 qubit SR/determinant equivalence", criterion_2_qubit_equivalence);
    ok &= run("3 margin identity", criterion_3_margin_identity);
    ok &= run("4 soundness on separable states", criterion_4_soundness);
    ok &= run("5 completeness on NPT states", criterion_5_completeness);
    ok &= run("6 weak implies strong", criterion_6_weak_implies_strong);
    ok &= run("7 Mancini reduction", criterion_7_mancini_reduction);
    ok &= run("8 CV pipeline equivalence", criterion_8_pipeline_equivalence);
    ok &= run("9 beam-splitter detection", criterion_9_beam_splitter);
    let total = start.elapsed();
    ok &= run("10 runtime budget", || criterion_10_runtime(total));
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
