// Copyright 2026 The nptcert Authors
// SPDX-License-Identifier: Apache-2.0

//! Serializable report records. Field order is fixed so output is
//! byte-stable across runs.

use nptcert_core::certificate::{GhzCorrelators, GhzInequality, HurWeakReport, SrReport};
use nptcert_core::cv::{CrossCheck, CvReport, RelationCheck, TruncationDiagnostics};
use nptcert_core::{Complex64, NptVerdict};
use serde::Serialize;
use serde_json::Value;

#[derive(Debug, Serialize)]
pub struct RunConfig {
    pub command: &'static str,
    pub input: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bipartition: Option<String>,
    pub tol: f64,
    pub seed: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cutoff: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub out: Option<String>,
}

#[derive(Debug, Serialize)]
pub struct Verdict {
    pub is_npt: bool,
    pub min_eigenvalue: f64,
    pub negativity_count: usize,
    pub tolerance: f64,
}

impl From<&NptVerdict> for Verdict {
    fn from(v: &NptVerdict) -> Self {
        Self {
            is_npt: v.is_npt,
            min_eigenvalue: v.min_eigenvalue,
            negativity_count: v.negativity_count,
            tolerance: v.tolerance,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct Sr {
    pub mean_h1: f64,
    pub mean_h2: f64,
    pub var_h1: f64,
    pub var_h2: f64,
    pub commutator_mean: f64,
    pub sym_covariance: f64,
    pub lhs: f64,
    pub rhs: f64,
    pub margin: f64,
    pub hur_margin: f64,
    pub violated: bool,
}

impl From<&SrReport> for Sr {
    fn from(r: &SrReport) -> Self {
        Self {
            mean_h1: r.mean_h1,
            mean_h2: r.mean_h2,
            var_h1: r.var_h1,
            var_h2: r.var_h2,
            commutator_mean: r.commutator_mean,
            sym_covariance: r.sym_covariance,
            lhs: r.lhs,
            rhs: r.rhs,
            margin: r.margin,
            hur_margin: r.hur_margin(),
            violated: r.violated,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct HurWeak {
    pub second_h1: f64,
    pub second_h2: f64,
    pub lhs: f64,
    pub rhs: f64,
    pub margin: f64,
    pub violated: bool,
}

impl From<&HurWeakReport> for HurWeak {
    fn from(r: &HurWeakReport) -> Self {
        Self {
            second_h1: r.second_h1,
            second_h2: r.second_h2,
            lhs: r.lhs,
            rhs: r.rhs,
            margin: r.margin,
            violated: r.violated,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct Correlators {
    pub transposed_qubit: usize,
    pub a_z: f64,
    pub b_z: f64,
    pub c_xy: f64,
    pub d_xy: f64,
    pub lhs: f64,
    pub rhs: f64,
    pub margin: f64,
}

impl Correlators {
    pub fn new(transposed_qubit: usize, c: &GhzCorrelators, q: &GhzInequality) -> Self {
        Self {
            transposed_qubit,
            a_z: c.a_z,
            b_z: c.b_z,
            c_xy: c.c_xy,
            d_xy: c.d_xy,
            lhs: q.lhs,
            rhs: q.rhs,
            margin: q.margin,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct ChosenPair {
    pub lambda1: f64,
    pub lambda2: f64,
}

#[derive(Debug, Serialize)]
pub struct Observables {
    #[serde(rename = "H1")]
    pub h1: Value,
    #[serde(rename = "H2")]
    pub h2: Value,
}

#[derive(Debug, Serialize)]
pub struct Witness {
    pub matrix: Value,
    pub trace_value: f64,
}

#[derive(Debug, Serialize)]
pub struct CheckReport {
    pub config: RunConfig,
    pub dims: Vec<usize>,
    pub verdict: Verdict,
    pub pt_eigenvalues: Vec<f64>,
    pub chosen_pair: ChosenPair,
    pub observables: Observables,
    pub sr: Sr,
    pub hur_weak: HurWeak,
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub correlators: Option<Correlators>,
}

#[derive(Debug, Serialize)]
pub struct WitnessReport {
    pub config: RunConfig,
    pub verdict: Verdict,
    pub lambda2: f64,
    pub value: f64,
    pub witness: Value,
}

#[derive(Debug, Serialize)]
pub struct Diagnostics {
    pub tail_weight: f64,
    pub lost_norm: f64,
    pub m_max: usize,
    pub cutoff: usize,
    pub reliable: bool,
}

impl From<&TruncationDiagnostics> for Diagnostics {
    fn from(d: &TruncationDiagnostics) -> Self {
        Self {
            tail_weight: d.tail_weight,
            lost_norm: d.lost_norm,
            m_max: d.m_max,
            cutoff: d.cutoff,
            reliable: d.reliable,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct Cv {
    pub inequality: &'static str,
    pub m: usize,
    pub n: usize,
    pub factor1: f64,
    pub factor2: f64,
    pub commutator_term: f64,
    pub covariance: f64,
    pub lhs: f64,
    pub rhs: f64,
    pub margin: f64,
    pub hur_margin: f64,
    pub sum_margin: f64,
    pub violated: bool,
    pub diagnostics: Diagnostics,
}

impl Cv {
    pub fn new(inequality: &'static str, m: usize, n: usize, r: &CvReport) -> Self {
        Self {
            inequality,
            m,
            n,
            factor1: r.factor1,
            factor2: r.factor2,
            commutator_term: r.commutator_term,
            covariance: r.covariance,
            lhs: r.lhs,
            rhs: r.rhs,
            margin: r.margin,
            hur_margin: r.hur_margin,
            sum_margin: r.sum_margin,
            violated: r.violated,
            diagnostics: (&r.diagnostics).into(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct Crosscheck {
    pub margin_printed: f64,
    pub margin_generic: f64,
    pub defect: f64,
}

impl From<&CrossCheck> for Crosscheck {
    fn from(c: &CrossCheck) -> Self {
        Self { margin_printed: c.margin_eq, margin_generic: c.margin_generic, defect: c.defect }
    }
}

#[derive(Debug, Serialize)]
pub struct CvCheckReport {
    pub config: RunConfig,
    pub report: Cv,
    pub crosscheck: Crosscheck,
}

#[derive(Debug, Serialize)]
pub struct SingleModePrecheck {
    pub amplitude_squeezing_phi: f64,
    pub amplitude_squeezing: f64,
    pub photon_statistics: f64,
}

#[derive(Debug, Serialize)]
pub struct BsDemoReport {
    pub config: RunConfig,
    pub theta: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input_precheck: Option<SingleModePrecheck>,
    pub unitarity_defect: f64,
    pub ineq10: Cv,
    pub ineq11: Cv,
}

#[derive(Debug, Serialize)]
pub struct Relation {
    pub m: usize,
    pub n: usize,
    pub p: usize,
    pub q: usize,
    pub lhs: [f64; 2],
    pub rhs: [f64; 2],
    pub defect: f64,
    pub holds: bool,
}

impl Relation {
    pub fn new(orders: [usize; 4], r: &RelationCheck, threshold: f64) -> Self {
        let pair = |z: Complex64| [z.re, z.im];
        let [m, n, p, q] = orders;
        Self { m, n, p, q, lhs: pair(r.lhs), rhs: pair(r.rhs), defect: r.defect, holds: r.defect <= threshold }
    }
}

#[derive(Debug, Serialize)]
pub struct RelationReport {
    pub config: RunConfig,
    pub relation: Relation,
}
