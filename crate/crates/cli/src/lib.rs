// Copyright 2026 The nptcert Authors
// SPDX-License-Identifier: Apache-2.0

//! Front end for `nptcert-core`.
//!
//! Exit codes: `0` no certificate (inequality satisfied), `2` violation
//! certified, `1` error, `3` unreliable Fock-space truncation.

pub mod commands;
pub mod report;
pub mod spec;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

pub const EXIT_SATISFIED: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_VIOLATED: i32 = 2;
pub const EXIT_TRUNCATION: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "nptcert", version, about = "Uncertainty-relation entanglement certificates")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct GlobalArgs {
    /// Violation and negativity tolerance.
    #[arg(long, global = true, env = "NPT_CERTIFY_TOL", default_value_t = nptcert_core::VIOLATION_TOL)]
    pub tol: f64,
    /// Seed for random state families that do not carry one.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<String>,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct CvArgs {
    /// Fock cutoff per mode (levels 0..=cutoff).
    #[arg(long, default_value_t = nptcert_core::cv::DEFAULT_CUTOFF)]
    pub cutoff: usize,
    /// Order on mode 1.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u8).range(1..=4))]
    pub m: u8,
    /// Order on mode 2.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u8).range(1..=4))]
    pub n: u8,
    /// Evaluate even when the truncation guard fails.
    #[arg(long)]
    pub allow_unreliable: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
pub enum IneqChoice {
    #[value(name = "10")]
    #[serde(rename = "10")]
    Ten,
    #[value(name = "11")]
    #[serde(rename = "11")]
    Eleven,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Certify a finite-dimensional state.
    Check {
        /// Matrix or state-spec file, inline JSON, or `family:k=v,...`.
        input: String,
        /// Parties separated by `|`, e.g. "0,1|2"; the right side is transposed.
        #[arg(long)]
        bipartition: Option<String>,
    },
    /// Sweep the mixed GHZ family and write CSV.
    SweepGhz {
        #[arg(long, default_value_t = 0.0)]
        p_from: f64,
        #[arg(long, default_value_t = 1.0)]
        p_to: f64,
        #[arg(long, default_value_t = 21)]
        steps: usize,
        #[arg(long, default_value = "0,1|2")]
        bipartition: String,
    },
    /// Export the witness built from the most negative PT eigenvector.
    Witness {
        input: String,
        #[arg(long)]
        bipartition: Option<String>,
    },
    /// Evaluate a CV separability inequality.
    CvCheck {
        input: String,
        #[arg(long, value_enum, default_value = "10")]
        ineq: IneqChoice,
        #[command(flatten)]
        cv: CvArgs,
    },
    /// Send a state through a beam splitter and test both CV inequalities.
    BsDemo {
        #[arg(long)]
        input: String,
        #[arg(long, default_value_t = std::f64::consts::FRAC_PI_4)]
        theta: f64,
        #[command(flatten)]
        cv: CvArgs,
    },
    /// Check the PT moment relation for ⟨a₁†ᵐa₁ⁿa₂†ᵖa₂^q⟩.
    RelationCheck {
        input: String,
        #[arg(long, default_value_t = 1)]
        p: u8,
        #[arg(long, default_value_t = 1)]
        q: u8,
        #[command(flatten)]
        cv: CvArgs,
    },
}

/// Rendered report plus the process exit code.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub code: i32,
    pub body: String,
}

/// Maps an error to its exit code.
pub fn exit_code_for(err: &anyhow::Error) -> i32 {
    match err.downcast_ref::<nptcert_core::Error>() {
        Some(nptcert_core::Error::TruncationUnreliable { .. }) => EXIT_TRUNCATION,
        _ => EXIT_ERROR,
    }
}
