// Copyright 2026 The nptcert Authors
// SPDX-License-Identifier: Apache-2.0

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use nptcert::{commands, exit_code_for, Cli, EXIT_ERROR};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            // clap exits 2 on usage errors, which would read as a certificate
            return ExitCode::from(if e.use_stderr() { EXIT_ERROR as u8 } else { 0 });
        }
    };
    let outcome = match commands::run(&cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(exit_code_for(&e) as u8);
        }
    };
    let written = match &cli.global.out {
        Some(path) => std::fs::write(path, &outcome.body),
        None => std::io::stdout().lock().write_all(outcome.body.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: writing report: {e}");
        return ExitCode::from(EXIT_ERROR as u8);
    }
    ExitCode::from(outcome.code as u8)
}
