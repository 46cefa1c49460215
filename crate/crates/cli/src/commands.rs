//! Subcommand bodies. Each returns the text that goes to standard output.

use std::fmt::Write as _;

use incbc_core::{brandes_bc, star_stats, static_bc_report, ApspState, Graph, Mode};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::format::{parse_graph, ParseError};
use crate::stream::{parse_stream, StreamError, StreamRunner};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Algo {
    Brandes,
    Dagged,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("graph file: {0}")]
    Graph(ParseError),
    #[error("update file: {0}")]
    Updates(ParseError),
    #[error(transparent)]
    Event(#[from] StreamError),
}

/// One `bc <v> <score>` line per vertex, scores to 12 decimal places.
pub fn bc_lines(bc: &[f64]) -> String {
    let mut out = String::new();
    for (v, x) in bc.iter().enumerate() {
        writeln!(out, "bc {v} {x:.12}").unwrap();
    }
    out
}

/// First 8 bytes of SHA-256 over [`bc_lines`].
pub fn bc_digest(bc: &[f64]) -> u64 {
    let hash = Sha256::digest(bc_lines(bc).as_bytes());
    u64::from_be_bytes(hash[..8].try_into().unwrap())
}

fn emit_bc(out: &mut String, bc: &[f64], digest: bool) {
    if digest {
        writeln!(out, "stat digest {:016x}", bc_digest(bc)).unwrap();
    } else {
        out.push_str(&bc_lines(bc));
    }
}

fn emit_star_stats(out: &mut String, state: &ApspState) {
    let s = star_stats(state);
    writeln!(out, "stat n {}", state.n()).unwrap();
    writeln!(out, "stat arcs {}", state.graph().edge_count()).unwrap();
    writeln!(out, "stat mstar {}", s.mstar).unwrap();
    writeln!(out, "stat mstar_avg {:.6}", s.mstar_avg).unwrap();
}

/// Scores and shortest-path statistics. The output does not depend on
/// `algo` unless `counters` is set.
pub fn run_static(graph_text: &str, algo: Algo, counters: bool) -> Result<String, CliError> {
    let g = parse_graph(graph_text).map_err(CliError::Graph)?;
    let mut out = String::new();
    let state = match algo {
        Algo::Brandes => brandes_bc(&g),
        Algo::Dagged => {
            let (state, report) = static_bc_report(&g);
            if counters {
                writeln!(out, "stat estar {}", report.estar).unwrap();
                writeln!(out, "stat apsp_relaxations {}", report.apsp_relaxations).unwrap();
                writeln!(out, "stat dag_scans {}", report.dag_scans).unwrap();
            }
            state
        }
    };
    if counters {
        let c = state.counters();
        writeln!(out, "stat edges_examined {}", c.edges_examined).unwrap();
        writeln!(out, "stat dag_edges_emitted {}", c.dag_edges_emitted).unwrap();
    }
    let mut text = bc_lines(state.bc());
    emit_star_stats(&mut text, &state);
    text.push_str(&out);
    Ok(text)
}

pub fn run_stats(graph_text: &str) -> Result<String, CliError> {
    let g = parse_graph(graph_text).map_err(CliError::Graph)?;
    Ok(stats_of(&g))
}

fn stats_of(g: &Graph) -> String {
    let state = brandes_bc(g);
    let mut out = String::new();
    emit_star_stats(&mut out, &state);
    let n = g.vertex_count() as f64;
    if n > 1.0 {
        let mstar = star_stats(&state).mstar as f64;
        writeln!(out, "stat mstar_per_nlogn {:.6}", mstar / (n * n.ln())).unwrap();
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StreamOptions {
    pub mode: Mode,
    pub verify: bool,
    pub digest: bool,
}

/// Output of a stream run. `error` is set when an event was rejected; the
/// output covers every event before it.
#[derive(Debug)]
pub struct StreamOutcome {
    pub output: String,
    pub failed_verifications: usize,
    pub error: Option<CliError>,
}

pub fn run_stream(graph_text: &str, updates_text: &str, opts: StreamOptions) -> StreamOutcome {
    let mut output = String::new();
    let mut failed_verifications = 0;
    let fail = |output, error| StreamOutcome { output, failed_verifications: 0, error: Some(error) };
    let g = match parse_graph(graph_text) {
        Ok(g) => g,
        Err(e) => return fail(output, CliError::Graph(e)),
    };
    let events = match parse_stream(updates_text) {
        Ok(ev) => ev,
        Err(e) => return fail(output, CliError::Updates(e)),
    };

    let mut runner = StreamRunner::new(&g, opts.mode, opts.verify);
    emit_bc(&mut output, runner.state().bc(), opts.digest);
    for event in &events {
        let report = match runner.step(event) {
            Ok(r) => r,
            Err(e) => {
                return StreamOutcome { output, failed_verifications, error: Some(e.into()) };
            }
        };
        writeln!(output, "stat event {}", report.index).unwrap();
        emit_bc(&mut output, runner.state().bc(), opts.digest);
        writeln!(output, "stat edges_examined {}", report.counters.edges_examined).unwrap();
        if let Some(v) = report.verify {
            let verdict = if v.pass { "pass" } else { "fail" };
            writeln!(output, "verify {} {}", report.index, verdict).unwrap();
            failed_verifications += usize::from(!v.pass);
        }
    }
    writeln!(output, "stat events {}", runner.events_applied()).unwrap();
    StreamOutcome { output, failed_verifications, error: None }
}
