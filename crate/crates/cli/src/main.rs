use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use incbc::{generate, run_static, run_stats, run_stream, write_graph, Algo, GenParams, Model, StreamOptions};
use incbc_core::Mode;

#[derive(Debug, Parser)]
#[command(name = "incbc", version, about = "Betweenness centrality with incremental updates")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute every score from scratch.
    Static {
        graph: PathBuf,
        #[arg(long, value_enum, default_value_t = AlgoArg::Brandes)]
        algo: AlgoArg,
        /// Also print work counters, which differ between algorithms.
        #[arg(long)]
        counters: bool,
    },
    /// Apply an update file one event at a time.
    Stream {
        graph: PathBuf,
        updates: PathBuf,
        #[arg(long, value_enum, default_value_t = ModeArg::EdgeFast)]
        mode: ModeArg,
        /// Check every event against a fresh computation.
        #[arg(long)]
        verify: bool,
        /// Print a 64-bit hash of the scores instead of the scores.
        #[arg(long)]
        digest: bool,
    },
    /// Write a random graph to standard output.
    Gen {
        #[arg(long, value_enum, default_value_t = ModelArg::Gnp)]
        model: ModelArg,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0.1)]
        p: f64,
        /// Largest integer weight [default: n²].
        #[arg(long)]
        wmax: Option<u64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        undirected: bool,
    },
    /// Shortest-path edge statistics.
    Stats { graph: PathBuf },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum AlgoArg {
    Brandes,
    Dagged,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModeArg {
    EdgeFast,
    Full,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModelArg {
    Complete,
    Gnp,
}

fn read(path: &Path) -> Result<String, String> {
    std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Static { graph, algo, counters } => {
            let algo = match algo {
                AlgoArg::Brandes => Algo::Brandes,
                AlgoArg::Dagged => Algo::Dagged,
            };
            print!("{}", run_static(&read(&graph)?, algo, counters).map_err(|e| e.to_string())?);
        }
        Command::Stream { graph, updates, mode, verify, digest } => {
            let mode = match mode {
                ModeArg::EdgeFast => Mode::EdgeFast,
                ModeArg::Full => Mode::Full,
            };
            let outcome = run_stream(&read(&graph)?, &read(&updates)?, StreamOptions { mode, verify, digest });
            print!("{}", outcome.output);
            if let Some(e) = outcome.error {
                return Err(e.to_string());
            }
            if outcome.failed_verifications > 0 {
                eprintln!("incbc: {} event(s) failed verification", outcome.failed_verifications);
                return Ok(ExitCode::from(1));
            }
        }
        Command::Gen { model, n, p, wmax, seed, undirected } => {
            let model = match model {
                ModelArg::Complete => Model::Complete,
                ModelArg::Gnp => Model::Gnp,
            };
            let mut params = GenParams { p, seed, undirected, ..GenParams::new(model, n, seed) };
            if let Some(w) = wmax {
                params.wmax = w;
            }
            print!("{}", write_graph(&generate(&params).map_err(|e| e.to_string())?));
        }
        Command::Stats { graph } => {
            print!("{}", run_stats(&read(&graph)?).map_err(|e| e.to_string())?);
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("incbc: {msg}");
            ExitCode::from(2)
        }
    }
}
