//! Experiment orchestration behind the command-line tool: constructing
//! family members, spectra and bounds, property checks, threshold
//! verification, oracle cross-checks and stream scans. Every mode returns a
//! structured report; [`run`] serializes it and maps it to an exit code.

pub mod commands;
pub mod config;
pub mod cross;
pub mod report;
pub mod sample;
pub mod verify;

use std::io::{Read, Write};

use rayon::prelude::*;

pub use commands::{cmd_check, cmd_construct, cmd_rho, cmd_scan, evaluate_property, parse_lines, spectrum_row};
pub use config::{ExperimentConfig, Format, Mode, Property, Theorem};
pub use cross::cross_check;
pub use report::{
    CrossCheckReport, CrossCheckRow, Report, RowVerdict, SpectrumReport, SpectrumRow, Summary, VerdictRow,
};
pub use sample::{graph_rng, GraphClass};
pub use verify::{verify, TheoremSetup};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Exit code for a usage or input error.
pub const EXIT_USAGE: i32 = 2;

/// Maps `f` over `items` on a pool of `jobs` threads, preserving order.
pub(crate) fn par_map<T, R, F>(jobs: usize, items: Vec<T>, f: F) -> Vec<R>
where
    T: Send,
    R: Send,
    F: Fn(T) -> R + Send + Sync,
{
    if jobs <= 1 {
        return items.into_iter().map(f).collect();
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .expect("thread pool");
    pool.install(|| items.into_par_iter().map(f).collect())
}

fn read_input(cfg: &ExperimentConfig, stdin: &mut dyn Read) -> Result<String> {
    let mut text = String::new();
    let res = match &cfg.input {
        Some(path) => std::fs::File::open(path).and_then(|mut f| f.read_to_string(&mut text)),
        None => stdin.read_to_string(&mut text),
    };
    res.map_err(|e| Error::InvalidParams(format!("reading input: {e}")))?;
    Ok(text)
}

/// Decoded graphs plus the number of lines that failed, with one
/// diagnostic per failure.
fn decode_stream(text: &str, err: &mut dyn Write) -> std::io::Result<(Vec<Graph>, usize)> {
    let mut graphs = Vec::new();
    let mut bad = 0;
    for (line, parsed) in parse_lines(text) {
        match parsed {
            Ok(g) => graphs.push(g),
            Err(e) => {
                bad += 1;
                writeln!(err, "line {}: {e}", line + 1)?;
            }
        }
    }
    Ok((graphs, bad))
}

/// Runs one mode and writes its report. Returns the process exit code:
/// 0 when nothing was refuted, 1 on a confirmed counterexample or an oracle
/// disagreement, 2 on a usage or input error.
pub fn run(cfg: &ExperimentConfig, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match run_inner(cfg, stdin, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn run_inner(cfg: &ExperimentConfig, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    cfg.validate()?;
    let io = |e: std::io::Error| Error::InvalidParams(format!("writing output: {e}"));
    match cfg.mode {
        Mode::Construct => {
            writeln!(out, "{}", cmd_construct(cfg)?).map_err(io)?;
            Ok(0)
        }
        Mode::Rho => {
            let text = read_input(cfg, stdin)?;
            let (graphs, bad) = decode_stream(&text, err).map_err(io)?;
            if bad > 0 && graphs.is_empty() {
                return Err(Error::InvalidParams(format!("all {bad} input lines are malformed")));
            }
            let report = cmd_rho(cfg, graphs, bad)?;
            report.write(cfg.format, out, err).map_err(io)?;
            Ok(0)
        }
        Mode::Check => {
            let text = read_input(cfg, stdin)?;
            let (graphs, bad) = decode_stream(&text, err).map_err(io)?;
            if bad > 0 {
                return Err(Error::InvalidParams(format!("{bad} malformed input lines")));
            }
            let report = cmd_check(cfg, graphs)?;
            report.write(cfg.format, out, err).map_err(io)?;
            Ok(0)
        }
        Mode::Scan => {
            let text = read_input(cfg, stdin)?;
            let (graphs, bad) = decode_stream(&text, err).map_err(io)?;
            if bad > 0 && graphs.is_empty() {
                return Err(Error::InvalidParams(format!("all {bad} input lines are malformed")));
            }
            let report = cmd_scan(cfg, graphs, bad)?;
            report.write(cfg.format, out, err).map_err(io)?;
            Ok(report.exit_code())
        }
        Mode::Verify => {
            let report = verify(cfg)?;
            for note in &report.summary.notes {
                writeln!(err, "note: {note}").map_err(io)?;
            }
            report.write(cfg.format, out, err).map_err(io)?;
            Ok(report.exit_code())
        }
        Mode::CrossCheck => {
            let report = cross_check(cfg)?;
            report.write(cfg.format, out, err).map_err(io)?;
            Ok(report.exit_code())
        }
    }
}
