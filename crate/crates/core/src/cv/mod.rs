// Copyright 2026 The nptcert Authors
// SPDX-License-Identifier: Apache-2.0

//! Continuous-variable layer on truncated Fock spaces.
//!
//! Operators are kept sparse because a two-mode space at the default cutoff
//! of 30 already has dimension 961.

pub mod beam_splitter;
pub mod fock;
pub mod inequalities;
pub mod normal_order;
pub mod states;

pub use beam_splitter::{beam_splitter, BeamSplitterOutput};
pub use fock::{ladder_ops, FockSpace, LadderOps, SparseOp, DEFAULT_CUTOFF};
pub use inequalities::{
    cv_pipeline_crosscheck, evaluate, ineq10, ineq11, pt_moment_relation_check, CrossCheck, CvInequality,
    CvObservableSet, CvReport, RelationCheck,
};
pub use normal_order::{amplitude_squeezing, optimal_amplitude_squeezing, photon_stat_nonclassicality};
pub use states::{
    coherent, fock, single_photon_entangled, squeezed_vacuum, thermal, two_mode_squeezed, CvState, FockSettings,
    TruncationDiagnostics,
};
