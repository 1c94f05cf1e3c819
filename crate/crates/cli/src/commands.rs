// Copyright 2026 The nptcert Authors
// SPDX-License-Identifier: Apache-2.0

use anyhow::{bail, Context, Result};
use nptcert_core::certificate::{
    ghz_inequality, hur_weak_test, sr_pt_test, witness_from_eigvec, CertificateOptions, GhzCorrelators,
    SrPtCertificate, WitnessOperator,
};
use nptcert_core::cv::{
    beam_splitter, cv_pipeline_crosscheck, evaluate, ineq10, ineq11, optimal_amplitude_squeezing,
    photon_stat_nonclassicality, pt_moment_relation_check, CvInequality, FockSettings,
};
use nptcert_core::spectral::ClassifyOptions;
use nptcert_core::zoo::make_ghz_mixed;
use nptcert_core::{Bipartition, HermitianOperator, HERMITICITY_TOL};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::report::{
    BsDemoReport, CheckReport, ChosenPair, Correlators, Cv, CvCheckReport, Observables, Relation, RelationReport,
    RunConfig, SingleModePrecheck, Witness, WitnessReport,
};
use crate::spec::{cv_state, is_single_mode_family, load_state, matrix_to_json, parse_value, two_mode_state};
use crate::{Cli, Command, CvArgs, GlobalArgs, IneqChoice, Outcome, EXIT_ERROR, EXIT_SATISFIED, EXIT_VIOLATED};

/// Largest defect accepted by `relation-check`.
pub const RELATION_THRESHOLD: f64 = 1e-8;

pub fn run(cli: &Cli) -> Result<Outcome> {
    let g = &cli.global;
    if !(g.tol.is_finite() && g.tol >= 0.0) {
        bail!(nptcert_core::Error::ParameterOutOfRange(format!("tolerance {} must be finite and non-negative", g.tol)));
    }
    match &cli.command {
        Command::Check { input, bipartition } => check(g, input, bipartition.as_deref()),
        Command::SweepGhz { p_from, p_to, steps, bipartition } => sweep_ghz(*p_from, *p_to, *steps, bipartition, g),
        Command::Witness { input, bipartition } => witness(g, input, bipartition.as_deref()),
        Command::CvCheck { input, ineq, cv } => cv_check(g, input, *ineq, cv),
        Command::BsDemo { input, theta, cv } => bs_demo(g, input, *theta, cv),
        Command::RelationCheck { input, p, q, cv } => relation_check(g, input, *p as usize, *q as usize, cv),
    }
}

fn json_body<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

fn options(tol: f64) -> CertificateOptions {
    CertificateOptions { classify: ClassifyOptions::with_tolerance(tol), violation_tol: tol }
}

fn bipartition_for(rho: &HermitianOperator, arg: Option<&str>) -> Result<Bipartition> {
    let n = rho.profile().num_subsystems();
    Ok(match arg {
        Some(s) => Bipartition::parse(s, n)?,
        None => Bipartition::new(&[0], n)?,
    })
}

fn echo(arg: &str, parsed: &Value) -> Value {
    if parsed.get("matrix").is_some() {
        json!({ "source": arg })
    } else {
        parsed.clone()
    }
}

fn config(
    command: &'static str,
    input: Value,
    bip: Option<String>,
    g: &GlobalArgs,
    cutoff: Option<usize>,
) -> RunConfig {
    RunConfig { command, input, bipartition: bip, tol: g.tol, seed: g.seed, cutoff, out: g.out.clone() }
}

/// Witness from the most negative eigenvector of `ρ^PT`.
fn negative_witness(cert: &SrPtCertificate, bip: &Bipartition, rho: &HermitianOperator) -> Result<WitnessOperator> {
    let n = cert.spectrum.len();
    Ok(witness_from_eigvec(cert.spectrum.eigenvector(n - 1), cert.spectrum.eigenvalue(n - 1), bip, rho.profile())?)
}

fn check(g: &GlobalArgs, input: &str, bip: Option<&str>) -> Result<Outcome> {
    let (rho, parsed) = load_state(input, g.seed, HERMITICITY_TOL)?;
    let bip = bipartition_for(&rho, bip)?;
    let cert = sr_pt_test(&rho, &bip, &options(g.tol))?;
    let weak = hur_weak_test(&cert.pair, &cert.rho_pt, g.tol)?;
    let witness = if cert.verdict.is_npt {
        let w = negative_witness(&cert, &bip, &rho)?;
        Some(Witness { trace_value: w.value(&rho)?, matrix: matrix_to_json(&w.w) })
    } else {
        None
    };
    let correlators = match (rho.profile().dims(), bip.party_two()) {
        ([2, 2, 2], &[k]) => {
            let c = GhzCorrelators::from_state(&rho, k)?;
            Some(Correlators::new(k, &c, &ghz_inequality(&c)))
        }
        _ => None,
    };
    let report = CheckReport {
        config: config("check", echo(input, &parsed), Some(bip.label()), g, None),
        dims: rho.profile().dims().to_vec(),
        verdict: (&cert.verdict).into(),
        pt_eigenvalues: cert.spectrum.eigenvalues().to_vec(),
        chosen_pair: ChosenPair { lambda1: cert.lambdas.0, lambda2: cert.lambdas.1 },
        observables: Observables { h1: matrix_to_json(&cert.pair.h1), h2: matrix_to_json(&cert.pair.h2) },
        sr: (&cert.report).into(),
        hur_weak: (&weak).into(),
        witness,
        correlators,
    };
    let code = if cert.report.violated { EXIT_VIOLATED } else { EXIT_SATISFIED };
    Ok(Outcome { code, body: json_body(&report)? })
}

fn sweep_ghz(p_from: f64, p_to: f64, steps: usize, bip: &str, g: &GlobalArgs) -> Result<Outcome> {
    if steps < 2 {
        bail!(nptcert_core::Error::ParameterOutOfRange(format!("steps must be at least 2, got {steps}")));
    }
    if !(0.0..=1.0).contains(&p_from) || !(0.0..=1.0).contains(&p_to) || p_from >= p_to {
        bail!(nptcert_core::Error::ParameterOutOfRange(format!("need 0 ≤ p_from < p_to ≤ 1, got [{p_from}, {p_to}]")));
    }
    let bip = Bipartition::parse(bip, 3)?;
    let opts = options(g.tol);
    let transposed = match bip.party_two() {
        &[k] => Some(k),
        _ => None,
    };
    let rows: Vec<String> = (0..steps)
        .into_par_iter()
        .map(|i| -> Result<String> {
            let p = if i == steps - 1 { p_to } else { p_from + (p_to - p_from) * i as f64 / (steps - 1) as f64 };
            let rho = make_ghz_mixed(p)?;
            let cert = sr_pt_test(&rho, &bip, &opts)?;
            let eq8 = match transposed {
                Some(k) => format!("{}", ghz_inequality(&GhzCorrelators::from_state(&rho, k)?).margin),
                None => String::new(),
            };
            let w = if cert.verdict.is_npt {
                format!("{}", negative_witness(&cert, &bip, &rho)?.value(&rho)?)
            } else {
                String::new()
            };
            Ok(format!("{p},{},{},{eq8},{w}\n", cert.spectrum.min(), cert.report.margin))
        })
        .collect::<Result<_>>()?;
    let input = json!({ "family": "ghz_mixed", "p_from": p_from, "p_to": p_to, "steps": steps });
    let cfg = config("sweep-ghz", input, Some(bip.label()), g, None);
    let mut body = format!("# {}\n", serde_json::to_string(&cfg)?);
    body.push_str("p,lambda_minus,sr_margin,eq8_margin,witness_value\n");
    body.extend(rows);
    Ok(Outcome { code: EXIT_SATISFIED, body })
}

fn witness(g: &GlobalArgs, input: &str, bip: Option<&str>) -> Result<Outcome> {
    let (rho, parsed) = load_state(input, g.seed, HERMITICITY_TOL)?;
    let bip = bipartition_for(&rho, bip)?;
    let cert = sr_pt_test(&rho, &bip, &options(g.tol))?;
    if !cert.verdict.is_npt {
        bail!("state is PPT across {} (min eigenvalue {}); no witness", bip.label(), cert.verdict.min_eigenvalue);
    }
    let w = negative_witness(&cert, &bip, &rho)?;
    let report = WitnessReport {
        config: config("witness", echo(input, &parsed), Some(bip.label()), g, None),
        verdict: (&cert.verdict).into(),
        lambda2: w.lambda2,
        value: w.value(&rho)?,
        witness: matrix_to_json(&w.w),
    };
    Ok(Outcome { code: EXIT_VIOLATED, body: json_body(&report)? })
}

fn settings(cv: &CvArgs) -> FockSettings {
    FockSettings { cutoff: cv.cutoff, allow_unreliable: cv.allow_unreliable }
}

fn cv_check(g: &GlobalArgs, input: &str, ineq: IneqChoice, cv: &CvArgs) -> Result<Outcome> {
    let v = parse_value(input)?;
    let state = two_mode_state(&v, &settings(cv)).context("building CV state")?;
    let which = match ineq {
        IneqChoice::Ten => CvInequality::Ten,
        IneqChoice::Eleven => CvInequality::Eleven,
    };
    let (m, n) = (cv.m as usize, cv.n as usize);
    let r = evaluate(which, &state, m, n, g.tol)?;
    let cross = cv_pipeline_crosscheck(&state, m, n, which)?;
    let report = CvCheckReport {
        config: config("cv-check", v, None, g, Some(state.space().cutoff())),
        report: Cv::new(which.label(), m, n, &r),
        crosscheck: (&cross).into(),
    };
    let code = if r.violated { EXIT_VIOLATED } else { EXIT_SATISFIED };
    Ok(Outcome { code, body: json_body(&report)? })
}

fn bs_demo(g: &GlobalArgs, input: &str, theta: f64, cv: &CvArgs) -> Result<Outcome> {
    if !theta.is_finite() {
        bail!(nptcert_core::Error::ParameterOutOfRange(format!("theta must be finite, got {theta}")));
    }
    let v = parse_value(input)?;
    let settings = settings(cv);
    let input_precheck = if is_single_mode_family(&v) {
        let s = cv_state(&v, &settings)?;
        let (phi, value) = optimal_amplitude_squeezing(&s, cv.m as usize)?;
        Some(SingleModePrecheck {
            amplitude_squeezing_phi: phi,
            amplitude_squeezing: value,
            photon_statistics: photon_stat_nonclassicality(&s, cv.m as usize)?,
        })
    } else {
        None
    };
    let out = beam_splitter(&two_mode_state(&v, &settings)?, theta)?;
    let (m, n) = (cv.m as usize, cv.n as usize);
    let r10 = ineq10(&out.state, m, n, g.tol)?;
    let r11 = ineq11(&out.state, m, n, g.tol)?;
    let report = BsDemoReport {
        config: config("bs-demo", v, None, g, Some(out.state.space().cutoff())),
        theta,
        input_precheck,
        unitarity_defect: out.unitarity_defect,
        ineq10: Cv::new(CvInequality::Ten.label(), m, n, &r10),
        ineq11: Cv::new(CvInequality::Eleven.label(), m, n, &r11),
    };
    let code = if r10.violated || r11.violated { EXIT_VIOLATED } else { EXIT_SATISFIED };
    Ok(Outcome { code, body: json_body(&report)? })
}

fn relation_check(g: &GlobalArgs, input: &str, p: usize, q: usize, cv: &CvArgs) -> Result<Outcome> {
    let v = parse_value(input)?;
    let state = two_mode_state(&v, &settings(cv))?;
    let (m, n) = (cv.m as usize, cv.n as usize);
    let r = pt_moment_relation_check(&state, m, n, p, q)?;
    let relation = Relation::new([m, n, p, q], &r, RELATION_THRESHOLD);
    let code = if relation.holds { EXIT_SATISFIED } else { EXIT_ERROR };
    let report =
        RelationReport { config: config("relation-check", v, None, g, Some(state.space().cutoff())), relation };
    Ok(Outcome { code, body: json_body(&report)? })
}
