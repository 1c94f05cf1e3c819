// Copyright 2026 The nptcert Authors
// SPDX-License-Identifier: Apache-2.0

use nptcert_core::certificate::{
    build_pseudospin, ghz_inequality, ghz_observables, sr_pt_test, sr_report, CertificateOptions, GhzCorrelators,
    GHZ_SR_SCALE,
};
use nptcert_core::cv::{
    beam_splitter, coherent, fock, ineq10, ineq11, squeezed_vacuum, thermal, CvState, FockSettings,
};
use nptcert_core::hermitian::{
    expectation, partial_transpose, tensor_product, validate_hermitian, Bipartition, DimensionProfile,
    HermitianOperator,
};
use nptcert_core::spectral::eig_hermitian;
use nptcert_core::zoo::{random_density, random_separable};
use nptcert_core::{Complex64, ComplexMatrix};
use proptest::prelude::*;

fn shape() -> impl Strategy<Value = Vec<usize>> {
    prop_oneof![Just(vec![2, 2]), Just(vec![2, 3]), Just(vec![3, 2]), Just(vec![3, 3]), Just(vec![2, 2, 2])]
}

fn hermitian(n: usize) -> impl Strategy<Value = ComplexMatrix> {
    prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), n * n).prop_map(move |v| {
        let g =
            ComplexMatrix::from_row_major(n, n, v.into_iter().map(|(a, b)| Complex64::new(a, b)).collect()).unwrap();
        g.add(&g.adjoint()).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn pt_is_an_involution_preserving_trace(dims in shape(), seed in any::<u64>()) {
        let rho = random_density(&dims, seed).unwrap();
        for bip in Bipartition::all(dims.len()) {
            let pt = partial_transpose(&rho, &bip).unwrap();
            prop_assert!((pt.trace() - 1.0).abs() < 1e-12);
            let back = partial_transpose(&pt, &bip).unwrap();
            prop_assert!(back.matrix().max_abs_diff(rho.matrix()).unwrap() < 1e-15);
        }
    }

    #[test]
    fn pt_moves_between_operator_and_state(seed in any::<u64>(), h in hermitian(6)) {
        let rho = random_density(&[2, 3], seed).unwrap();
        let o = validate_hermitian(h, rho.profile().clone(), 1e-12).unwrap();
        let bip = Bipartition::new(&[0], 2).unwrap();
        let lhs = expectation(&o, &partial_transpose(&rho, &bip).unwrap()).unwrap();
        let rhs = expectation(&partial_transpose(&o, &bip).unwrap(), &rho).unwrap();
        prop_assert!((lhs - rhs).abs() < 1e-12);
    }

    #[test]
    fn eigendecomposition_reconstructs(h in (3usize..12).prop_flat_map(hermitian)) {
        let n = h.rows();
        let op = validate_hermitian(h.clone(), DimensionProfile::single(n).unwrap(), 1e-12).unwrap();
        let s = eig_hermitian(&op).unwrap();
        prop_assert!(s.reconstruct().max_abs_diff(&h).unwrap() < 1e-11 * h.max_abs().max(1.0));
        let v = s.vectors_as_columns();
        let gram = v.adjoint().matmul(&v).unwrap();
        prop_assert!(gram.max_abs_diff(&ComplexMatrix::identity(n)).unwrap() < 1e-12);
        prop_assert!(s.eigenvalues().windows(2).all(|w| w[0] >= w[1]));
    }

    #[test]
    fn eigen_pair_margin_is_four_y_squared_lambda_product(
        h in (4usize..10).prop_flat_map(hermitian),
        a1 in (-1.0f64..1.0, -1.0f64..1.0),
        a2 in (-1.0f64..1.0, -1.0f64..1.0),
        i in 0usize..100,
        j in 0usize..100,
    ) {
        let n = h.rows();
        let shift = (1.0 - h.trace().re) / n as f64;
        let m = validate_hermitian(h.add(&ComplexMatrix::identity(n).scale_real(shift)).unwrap(), DimensionProfile::single(n).unwrap(), 1e-12).unwrap();
        let s = eig_hermitian(&m).unwrap();
        let (i, j) = (i % n, j % n);
        prop_assume!(i != j);
        let (alpha1, alpha2) = (Complex64::new(a1.0, a1.1), Complex64::new(a2.0, a2.1));
        prop_assume!((alpha1 * alpha2.conj()).im.abs() > 1e-3);
        let pair = build_pseudospin(s.eigenvector(i), s.eigenvector(j), alpha1, alpha2, m.profile()).unwrap();
        let r = sr_report(&pair, &m, 1e-10).unwrap();
        let expected = 4.0 * pair.y * pair.y * s.eigenvalue(i) * s.eigenvalue(j);
        prop_assert!((r.margin - expected).abs() < 1e-10, "{} vs {}", r.margin, expected);
    }

    #[test]
    fn separable_states_never_violate(dims in shape(), terms in 1usize..6, seed in any::<u64>()) {
        let rho = random_separable(&dims, terms, seed).unwrap();
        for bip in Bipartition::all(dims.len()) {
            let cert = sr_pt_test(&rho, &bip, &CertificateOptions::default()).unwrap();
            prop_assert!(!cert.verdict.is_npt);
            prop_assert!(cert.report.margin >= -1e-10);
        }
    }

    #[test]
    fn ghz_correlator_form_scales_the_sr_margin(seed in any::<u64>(), target in 0usize..3) {
        let rho = random_density(&[2, 2, 2], seed).unwrap();
        let pt = partial_transpose(&rho, &Bipartition::transposing(&[target], 3).unwrap()).unwrap();
        let sr = sr_report(&ghz_observables(target).unwrap(), &pt, 0.0).unwrap();
        let corr = GhzCorrelators::from_state(&rho, target).unwrap();
        let ineq = ghz_inequality(&corr);
        prop_assert!((ineq.margin - GHZ_SR_SCALE * sr.margin).abs() < 1e-10, "{} vs {}", ineq.margin, GHZ_SR_SCALE * sr.margin);
    }
}

fn single_mode(kind: u8, x: f64, y: f64, settings: &FockSettings) -> CvState {
    match kind % 3 {
        0 => coherent(Complex64::new(0.7 * x, 0.7 * y), settings).unwrap(),
        1 => thermal(0.3 * x.abs(), settings).unwrap(),
        _ => fock((x.abs() * 2.5) as usize, settings).unwrap(),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn separable_cv_states_satisfy_both_inequalities(
        k in prop::collection::vec((any::<u8>(), -1.0f64..1.0, -1.0f64..1.0, any::<u8>(), -1.0f64..1.0, -1.0f64..1.0, 0.0f64..1.0), 1..3),
    ) {
        let settings = FockSettings::with_cutoff(16);
        let parts: Vec<(f64, CvState)> = k
            .iter()
            .map(|&(k1, x1, y1, k2, x2, y2, w)| {
                (w + 0.1, single_mode(k1, x1, y1, &settings).tensor(&single_mode(k2, x2, y2, &settings)).unwrap())
            })
            .collect();
        let refs: Vec<(f64, &CvState)> = parts.iter().map(|(w, s)| (*w, s)).collect();
        let state = CvState::mix(&refs).unwrap();
        for m in 1..=2 {
            for n in 1..=2 {
                prop_assert!(ineq10(&state, m, n, 1e-8).unwrap().margin >= -1e-8);
                prop_assert!(ineq11(&state, m, n, 1e-8).unwrap().margin >= -1e-8);
            }
        }
    }

    #[test]
    fn sum_form_violation_implies_product_violation(r in 0.0f64..0.5, phi in 0.0f64..6.3, theta in 0.0f64..1.6, alpha in -1.0f64..1.0) {
        let settings = FockSettings::default();
        let input = squeezed_vacuum(r, phi, &settings).unwrap().tensor(&coherent(Complex64::new(alpha, 0.0), &settings).unwrap()).unwrap();
        let state = beam_splitter(&input, theta).unwrap().state;
        for m in 1..=2 {
            for n in 1..=2 {
                let rep = ineq10(&state, m, n, 1e-10).unwrap();
                prop_assert!(rep.sum_margin >= -1e-10 || rep.margin < 0.0, "{rep:?}");
            }
        }
    }
}

#[test]
fn ghz_family_correlators_have_closed_form() {
    for i in 0..=10 {
        let p = i as f64 / 10.0;
        let rho = nptcert_core::zoo::make_ghz_mixed(p).unwrap();
        let corr = GhzCorrelators::from_state(&rho, 2).unwrap();
        assert!((corr.a_z - (1.0 - p)).abs() < 1e-14);
        assert!(corr.b_z.abs() < 1e-14 && corr.c_xy.abs() < 1e-14);
        assert!((corr.d_xy - 4.0 * p).abs() < 1e-14);
        let m = ghz_inequality(&corr).margin;
        assert!((m - 16.0 * ((1.0 - p).powi(2) - 16.0 * p * p)).abs() < 1e-12);
        assert_eq!(m < -1e-12, p > 0.2);
    }
}

#[test]
fn product_of_qubit_states_is_ppt() {
    let p = DimensionProfile::single(2).unwrap();
    let a = HermitianOperator::from_real_diagonal(&[0.7, 0.3], p.clone()).unwrap();
    let b = random_density(&[2], 5).unwrap();
    let rho = tensor_product(&a, &b);
    let cert = sr_pt_test(&rho, &Bipartition::new(&[0], 2).unwrap(), &CertificateOptions::default()).unwrap();
    assert!(!cert.report.violated);
}
